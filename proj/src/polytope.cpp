#include "hallsod/polytope.hpp"

#include "hallsod/lp.hpp"

#include <algorithm>
#include <map>

namespace hallsod {

WPolytope WPolytope::of(const Quiver& q, const DimVector& d) {
    q.check_dims(d);
    WPolytope P;
    P.dims = d;
    P.slots = d.total();
    P.axis = tau(d);
    std::map<Weight, int> groups;
    for (Weight& b : rep_weights(q, d)) {
        if (b.is_zero()) continue;
        ++groups[b];
        P.segments.push_back(std::move(b));
    }
    for (const auto& [g, m] : groups) {
        P.generators.push_back(g);
        P.multiplicity.push_back(m);
    }
    for (Cocharacter& l : cochar_classes(d)) {
        if (l.is_trivial()) continue;
        P.class_bound.push_back(pair(l, n_pos(l, P.segments)));
        P.classes.push_back(std::move(l));
    }
    return P;
}

namespace {

void check_shape(const WPolytope& P, const Weight& chi) {
    if (chi.dims() != P.dims) {
        throw InputError("weight over " + to_string(chi.dims()) + " tested against the polytope of " +
                         to_string(P.dims));
    }
}

// chi - <1,chi> tau: the component along the span of the segments.
std::vector<Rational> project(const WPolytope& P, const Weight& chi) {
    const Rational t = chi.total();
    std::vector<Rational> out(chi.coords());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= t * P.axis[i];
    return out;
}

}  // namespace

Rational r_lower_bound(const WPolytope& P, const Weight& chi) {
    check_shape(P, chi);
    Rational best = 0;
    for (std::size_t k = 0; k < P.classes.size(); ++k) {
        if (P.class_bound[k] == 0) continue;
        const Rational v = -pair(P.classes[k], chi) / P.class_bound[k];
        if (v > best) best = v;
    }
    return best;
}

Rational r_invariant(const WPolytope& P, const Weight& chi) {
    check_shape(P, chi);
    const auto target = project(P, chi);
    const std::size_t g = P.generators.size();
    if (g == 0) {
        if (std::any_of(target.begin(), target.end(), [](const Rational& x) { return x != 0; })) {
            throw InputError("weight " + to_string(chi) + " is not in the span of the polytope");
        }
        return 0;
    }
    // Variables: c_0..c_{g-1}, s_0..s_{g-1}, r.
    //   sum_k c_k beta_k = target   (last slot row dropped: every row set sums to zero)
    //   c_k + s_k - m_k r = 0
    const std::size_t n = 2 * g + 1;
    const std::size_t slot_rows = P.slots > 0 ? static_cast<std::size_t>(P.slots) - 1 : 0;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (std::size_t s = 0; s < slot_rows; ++s) {
        std::vector<Rational> row(n, Rational(0));
        for (std::size_t k = 0; k < g; ++k) row[k] = P.generators[k][s];
        A.push_back(std::move(row));
        b.push_back(target[s]);
    }
    for (std::size_t k = 0; k < g; ++k) {
        std::vector<Rational> row(n, Rational(0));
        row[k] = 1;
        row[g + k] = 1;
        row[2 * g] = -P.multiplicity[k];
        A.push_back(std::move(row));
        b.push_back(0);
    }
    std::vector<Rational> c(n, Rational(0));
    c[2 * g] = 1;
    const auto res = lp::minimize(A, b, c);
    if (res.status != lp::Status::optimal) {
        throw InputError("weight " + to_string(chi) + " is not in the span of the polytope");
    }
    return res.value;
}

bool contains(const WPolytope& P, const Weight& chi, const Rational& r) {
    if (r < 0) throw InputError("negative scale " + to_string(r));
    check_shape(P, chi);
    for (std::size_t k = 0; k < P.classes.size(); ++k) {
        if (-pair(P.classes[k], chi) > r * P.class_bound[k]) return false;
    }
    return r_invariant(P, chi) <= r;
}

bool on_face(const WPolytope& P, const Weight& chi, const Cocharacter& l, const Rational& r) {
    return pair(l, chi) == -r * pair(l, n_pos(l, P.segments));
}

Cocharacter face_cocharacter(const WPolytope& P, const Weight& chi) {
    return face_cocharacter(P, chi, r_invariant(P, chi));
}

Cocharacter face_cocharacter(const WPolytope& P, const Weight& chi, const Rational& r) {
    check_shape(P, chi);
    if (!is_dominant(chi)) throw InputError("face_cocharacter needs a dominant weight, got " + to_string(chi));
    if (r == 0) throw InputError("r = 0: " + to_string(chi) + " lies on no proper face");
    // Classes come ordered by part count, then lexicographically: keep the
    // first class of the largest part count.
    const Cocharacter* best = nullptr;
    std::size_t best_parts = 0;
    for (const Cocharacter& l : P.classes) {
        if (!on_face(P, chi, l, r)) continue;
        const std::size_t parts = level_slots(l).size();
        if (best == nullptr || parts > best_parts) {
            best = &l;
            best_parts = parts;
        }
    }
    if (best == nullptr) {
        throw InvariantError("no antidominant class attains the face of " + to_string(r) + "W at " + to_string(chi));
    }
    return *best;
}

}  // namespace hallsod

#include "hallsod/index_sets.hpp"

#include <algorithm>
#include <set>

namespace hallsod {

bool Truncation::admits(const PartitionA& a) const {
    if (static_cast<int>(a.parts.size()) > max_parts) return false;
    const Rational slope(a.total_weight(), a.total_dims().total());
    for (const Part& p : a.parts) {
        Rational dev = Rational(p.w, p.dims.total()) - slope;
        if (dev < 0) dev = -dev;
        if (dev > slope_bound) return false;
    }
    return true;
}

Rational window_radius(const WPolytope& P, const Weight& delta) {
    // Coordinate s of a point of W/2 minus its axis part lies within
    // 1/2 sum_beta |beta_s|; rho and the non-axis part of delta add to that.
    Rational seg = 0;
    for (int s = 0; s < P.slots; ++s) {
        Rational sum = 0;
        for (const Weight& b : P.segments) sum += b[s] < 0 ? Rational(-b[s]) : b[s];
        seg = std::max(seg, sum / 2);
    }
    const Rational n = P.slots;
    const Rational dmean = delta.total() / n;
    Rational extra = 0;
    const Weight rh = rho(P.dims);
    for (int s = 0; s < P.slots; ++s) {
        Rational e = rh[s] + delta[s] - dmean;
        if (e < 0) e = -e;
        extra = std::max(extra, e);
    }
    return seg + extra;
}

namespace {

std::pair<std::int64_t, std::int64_t> box_around(const Rational& centre, const Rational& radius) {
    return {to_int64(floor_of(centre - radius)), to_int64(ceil_of(centre + radius))};
}

}  // namespace

std::vector<Weight> window_generators(PolytopeCache& cache, const DimVector& d, std::int64_t w, const Weight& delta,
                                      std::optional<std::int64_t> coordinate_bound) {
    cache.quiver().check_dims(d);
    check_weyl_invariant(delta);
    const WPolytope& P = cache.get(d);
    std::int64_t lo, hi;
    if (coordinate_bound) {
        lo = -*coordinate_bound;
        hi = *coordinate_bound;
    } else {
        std::tie(lo, hi) = box_around(Rational(w, d.total()), window_radius(P, delta) + 1);
    }
    const Weight shift = rho(d) + delta;
    std::vector<Weight> out;
    for (Weight& chi : dominant_in_box(d, w, lo, hi)) {
        if (contains(P, chi + shift, Rational(1, 2))) out.push_back(std::move(chi));
    }
    return out;
}

void sort_canonical(std::vector<PartitionA>& v) {
    std::sort(v.begin(), v.end(), [](const PartitionA& a, const PartitionA& b) {
        if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
        return a.parts < b.parts;
    });
}

PartitionA as_multiset(PartitionA a) {
    std::sort(a.parts.begin(), a.parts.end());
    return a;
}

namespace {

void sort_entries(std::vector<IndexEntry>& v) {
    std::sort(v.begin(), v.end(), [](const IndexEntry& a, const IndexEntry& b) {
        if (a.A.parts.size() != b.A.parts.size()) return a.A.parts.size() < b.A.parts.size();
        return a.A.parts < b.A.parts;
    });
}

struct VEnumerator {
    Rational centre;
    Rational bound;
    int max_parts;
    std::vector<Part> cur;
    std::vector<PartitionA> out;

    void run(int remaining_d, std::int64_t remaining_w, const std::optional<Rational>& prev) {
        if (remaining_d == 0) {
            if (remaining_w == 0) out.push_back(PartitionA{cur});
            return;
        }
        if (static_cast<int>(cur.size()) >= max_parts) return;
        for (int di = 1; di <= remaining_d; ++di) {
            const auto lo = to_int64(ceil_of(di * (centre - bound)));
            const auto hi = to_int64(floor_of(di * (centre + bound)));
            for (std::int64_t wi = lo; wi <= hi; ++wi) {
                const Rational slope(wi, di);
                if (prev && slope >= *prev) break;
                if (di == remaining_d && wi != remaining_w) continue;
                cur.push_back({DimVector::single(di), wi});
                run(remaining_d - di, remaining_w - wi, slope);
                cur.pop_back();
            }
        }
    }
};

}  // namespace

IndexSet enum_V(int d, std::int64_t w, const Truncation& trunc) {
    if (d <= 0) throw InputError("enum_V needs d > 0");
    VEnumerator e{Rational(w, d), trunc.slope_bound, trunc.max_parts, {}, {}};
    e.run(d, w, std::nullopt);
    IndexSet set;
    for (PartitionA& a : e.out) {
        IndexEntry entry;
        const TreeSkeleton t = slope_to_tree(a);
        entry.r_sequence = order_key(t).r;
        entry.A = std::move(a);
        set.entries.push_back(std::move(entry));
    }
    sort_entries(set.entries);
    return set;
}

namespace {

void integer_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        integer_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<PartitionA> enum_U(int d, std::int64_t w) {
    if (d <= 0) throw InputError("enum_U needs d > 0");
    std::vector<std::vector<int>> sizes;
    std::vector<int> cur;
    integer_partitions(d, d, cur, sizes);
    std::vector<PartitionA> out;
    for (const auto& ps : sizes) {
        PartitionA a;
        bool ok = true;
        for (int k : ps) {
            if ((static_cast<std::int64_t>(k) * w) % d != 0) {
                ok = false;
                break;
            }
            a.parts.push_back({DimVector::single(k), static_cast<std::int64_t>(k) * w / d});
        }
        if (ok) out.push_back(as_multiset(std::move(a)));
    }
    sort_canonical(out);
    return out;
}

IndexSet enum_S(PolytopeCache& cache, const DimVector& d, std::int64_t w, const Weight& delta, const Truncation& trunc) {
    cache.quiver().check_dims(d);
    check_weyl_invariant(delta);
    const WPolytope& P = cache.get(d);
    const auto [lo, hi] = box_around(Rational(w, d.total()), trunc.slope_bound + window_radius(P, delta) + 1);
    std::vector<IndexEntry> found;
    std::set<PartitionA> seen;
    for (const Weight& chi : dominant_in_box(d, w, lo, hi)) {
        const StandardForm form = decompose(cache, chi, delta);
        PartitionA a = partition_of(form);
        if (!trunc.admits(a) || seen.count(a)) continue;
        seen.insert(a);
        found.push_back({std::move(a), r_sequence(form), chi});
    }
    IndexSet set;
    set.entries = std::move(found);
    // For one vertex every leaf block is a window weight of its own part, so
    // the box captures every realization within the slope bound.
    set.complete_within_bounds = cache.quiver().vertex_count() == 1;
    sort_entries(set.entries);
    return set;
}

IndexSet enum_T(PolytopeCache& cache, const DimVector& d, std::int64_t w, const Weight& delta, const Truncation& trunc) {
    const WPolytope& P = cache.get(d);
    const Weight shift = rho(d) + delta;
    std::vector<IndexEntry> found;
    std::set<PartitionA> seen;
    for (const Weight& chi : window_generators(cache, d, w, delta)) {
        const Weight phi = chi + shift;
        const Rational r = r_invariant(P, phi);
        PartitionA a;
        if (r < Rational(1, 2)) {
            a.parts.push_back({d, w});
        } else {
            const Cocharacter l = face_cocharacter(P, phi, r);
            const auto slots = level_slots(l);
            const auto dims = level_partition(l);
            for (std::size_t k = 0; k < slots.size(); ++k) {
                Rational s = 0;
                for (int slot : slots[k]) s += chi[slot];
                a.parts.push_back({dims[k], to_int64(s)});
            }
        }
        if (!trunc.admits(a) || seen.count(a)) continue;
        seen.insert(a);
        found.push_back({std::move(a), {}, chi});
    }
    IndexSet set;
    set.entries = std::move(found);
    sort_entries(set.entries);
    return set;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::A_before_B: return "A_before_B";
        case Verdict::B_before_A: return "B_before_A";
        case Verdict::both: return "both";
        case Verdict::equal: return "equal";
    }
    return "?";
}

OrderKey order_key(const StandardForm& form) {
    OrderKey k;
    for (const FormNode& n : form.nodes) {
        k.r.push_back(n.r);
        k.lambdas.push_back(level_partition(n.lambda));
    }
    return k;
}

OrderKey order_key(const TreeSkeleton& tree) {
    OrderKey k;
    for (const TreeNode& n : tree.nodes) {
        k.r.push_back(n.r);
        k.lambdas.push_back(level_partition(n.lambda));
    }
    return k;
}

Verdict compare_keys(const OrderKey& a, const OrderKey& b) {
    for (std::size_t c = 0;; ++c) {
        const bool a_done = c >= a.r.size();
        const bool b_done = c >= b.r.size();
        if (a_done && b_done) break;
        if (a_done) return Verdict::B_before_A;
        if (b_done) return Verdict::A_before_B;
        if (a.r[c] > b.r[c]) return Verdict::A_before_B;
        if (a.r[c] < b.r[c]) return Verdict::B_before_A;
    }
    for (std::size_t c = 0; c < a.lambdas.size(); ++c) {
        const auto& la = a.lambdas[c];
        const auto& lb = b.lambdas[c];
        if (la.size() != lb.size()) return la.size() > lb.size() ? Verdict::A_before_B : Verdict::B_before_A;
        if (la != lb) return la < lb ? Verdict::A_before_B : Verdict::B_before_A;
    }
    return Verdict::both;
}

Verdict compare(PolytopeCache& cache, const PartitionA& a, const PartitionA& b, const Weight& delta) {
    if (a == b) {
        realize(cache, a, delta);
        return Verdict::equal;
    }
    const StandardForm fa = decompose(cache, realize(cache, a, delta), delta);
    const StandardForm fb = decompose(cache, realize(cache, b, delta), delta);
    return compare_keys(order_key(fa), order_key(fb));
}

Verdict compare_v(const PartitionA& a, const PartitionA& b) {
    const TreeSkeleton ta = slope_to_tree(a);
    const TreeSkeleton tb = slope_to_tree(b);
    if (a == b) return Verdict::equal;
    return compare_keys(order_key(ta), order_key(tb));
}

bool partition_refines(const Composition& e, const Composition& d) {
    auto total = [](const Composition& c) {
        std::int64_t s = 0;
        for (const auto& x : c) s += x.total();
        return s;
    };
    if (e.empty() || d.empty() || total(e) != total(d)) throw InputError("partitions of different totals");
    std::size_t i = 0;
    for (const DimVector& target : d) {
        if (i >= e.size()) return false;
        DimVector sum = e[i++];
        while (sum != target) {
            if (i >= e.size() || sum.total() >= target.total()) return false;
            sum = sum + e[i++];
        }
    }
    return i == e.size();
}

}  // namespace hallsod

#include "hallsod/pbw.hpp"

#include <algorithm>
#include <set>

namespace hallsod {

std::int64_t window_count(PolytopeCache& cache, int d, std::int64_t w) {
    const DimVector D = DimVector::single(d);
    return static_cast<std::int64_t>(window_generators(cache, D, w, Weight(D)).size());
}

Integer sym_count(const Integer& p, std::int64_t l) {
    if (p < 0 || l < 0) throw InputError("sym_count needs nonnegative arguments");
    if (l == 0) return 1;
    if (p == 0) return 0;
    Integer num = 1;
    Integer den = 1;
    for (std::int64_t i = 1; i <= l; ++i) {
        num *= p + i - 1;
        den *= i;
    }
    return num / den;
}

std::string to_string(PbwStatus s) {
    switch (s) {
        case PbwStatus::OK: return "OK";
        case PbwStatus::NEGATIVE_P: return "NEGATIVE_P";
        case PbwStatus::RECONSTRUCTION_MISMATCH: return "RECONSTRUCTION_MISMATCH";
    }
    return "?";
}

namespace {

// Product over the distinct parts of a multiset partition; `skip_whole`
// drops the single-part term. Returns nullopt if a needed p is negative.
std::optional<Integer> u_sum(const std::map<std::pair<int, std::int64_t>, Integer>& p, int d, std::int64_t w,
                             bool skip_whole) {
    Integer total = 0;
    for (const PartitionA& a : enum_U(d, w)) {
        if (skip_whole && a.parts.size() == 1) continue;
        Integer prod = 1;
        for (std::size_t i = 0; i < a.parts.size();) {
            std::size_t j = i;
            while (j < a.parts.size() && a.parts[j] == a.parts[i]) ++j;
            const Integer& pi = p.at({a.parts[i].dims.total(), a.parts[i].w});
            if (pi < 0) return std::nullopt;
            prod *= sym_count(pi, static_cast<std::int64_t>(j - i));
            i = j;
        }
        total += prod;
    }
    return total;
}

}  // namespace

PbwTable primitive_dims(PolytopeCache& cache, int dmax, std::int64_t wmax) {
    if (dmax < 1 || wmax < 1) throw InputError("pbw table needs dmax, wmax >= 1");
    PbwTable t;
    t.dmax = dmax;
    t.wmax = wmax;
    for (int d = 1; d <= dmax; ++d) {
        for (std::int64_t w = -wmax; w <= wmax; ++w) {
            const Integer m = window_count(cache, d, w);
            t.m[{d, w}] = m;
            const auto rest = u_sum(t.p, d, w, true);
            if (!rest) {
                t.problems.push_back("p undefined at (" + std::to_string(d) + "," + std::to_string(w) + ")");
                t.p[{d, w}] = -1;
                continue;
            }
            const Integer p = m - *rest;
            t.p[{d, w}] = p;
            if (p < 0) {
                t.status = PbwStatus::NEGATIVE_P;
                t.problems.push_back("negative p(" + std::to_string(d) + "," + std::to_string(w) + ") = " + p.str());
            }
        }
    }
    if (t.status == PbwStatus::OK) {
        for (const auto& [key, m] : t.m) {
            if (reconstruct_m(t, key.first, key.second) != m) {
                t.status = PbwStatus::RECONSTRUCTION_MISMATCH;
                t.problems.push_back("m(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                     ") is not reconstructed");
            }
        }
    }
    for (const auto& [key, m] : t.m) {
        auto it = t.m.find({key.first, key.second + key.first});
        if (it != t.m.end() && it->second != m) t.periodic = false;
    }
    return t;
}

Integer reconstruct_m(const PbwTable& t, int d, std::int64_t w) {
    const auto v = u_sum(t.p, d, w, false);
    if (!v) throw InputError("p has negative entries; m cannot be reconstructed");
    return *v;
}

// ---------------------------------------------------------------- bijection

namespace {

struct Image {
    PartitionA A;
    std::vector<Weight> blocks;
    friend auto operator<=>(const Image&, const Image&) = default;
    friend bool operator==(const Image&, const Image&) = default;
};

std::string describe(const Weight& chi) {
    return to_string(chi);
}

}  // namespace

BijectionReport verify_bijection(PolytopeCache& cache, int d, std::int64_t w, std::int64_t bound) {
    const Quiver& q = cache.quiver();
    if (!q.is_tripled_jordan()) throw InputError("verify_bijection is implemented for the tripled Jordan quiver");
    if (d < 1 || bound < 0) throw InputError("verify_bijection needs d >= 1 and bound >= 0");
    BijectionReport rep;
    rep.d = d;
    rep.w = w;
    rep.bound = bound;
    const DimVector D = DimVector::single(d);
    const Weight zero(D);

    std::map<Image, Weight> seen;
    std::set<PartitionA> partitions;
    for (const Weight& chi : dominant_in_box(D, w, -bound, bound)) {
        ++rep.domain_size;
        const StandardForm form = decompose(cache, chi, zero);
        Image img{partition_of(form), {}};
        const auto deltas = delta_Ai(form);
        for (std::size_t i = 0; i < form.leaves.size(); ++i) {
            const LeafBlock& leaf = form.leaves[i];
            Weight block = restrict_to(chi, leaf.slots, leaf.dims);
            const Weight phi = block + rho(leaf.dims) + deltas[i];
            if (!contains(cache.get(leaf.dims), phi, Rational(1, 2))) {
                rep.violations.push_back("leaf block " + to_string(block) + " of " + describe(chi) +
                                         " is not a window weight");
            }
            img.blocks.push_back(std::move(block));
        }
        if (!strictly_decreasing_slopes(omega_shift(q, img.A))) {
            rep.violations.push_back("twisted partition of " + describe(chi) + " has non-decreasing slopes");
        }
        if (img.A.parts.size() == 1) ++rep.window_weights;
        partitions.insert(img.A);
        auto [it, fresh] = seen.emplace(img, chi);
        if (!fresh) {
            rep.violations.push_back("not injective: " + describe(it->second) + " and " + describe(chi));
        }
    }
    rep.partitions = static_cast<std::int64_t>(partitions.size());

    // Surjectivity: every slope-ordered partition, untwisted, with every tuple
    // of leaf windows whose assembled weight lies in the box.
    Truncation trunc;
    trunc.slope_bound = Rational(bound + d) + Rational(w < 0 ? -w : w, d);
    for (const IndexEntry& e : enum_V(d, w, trunc).entries) {
        const PartitionA A = omega_unshift(q, e.A);
        std::vector<std::vector<Weight>> windows;
        for (const Part& p : A.parts) {
            windows.push_back(window_generators(cache, p.dims, p.w, Weight(p.dims)));
        }
        if (std::any_of(windows.begin(), windows.end(), [](const auto& v) { return v.empty(); })) {
            rep.violations.push_back("no window weights for a part of " + to_string(A));
            continue;
        }
        std::vector<std::size_t> idx(windows.size(), 0);
        while (true) {
            Weight chi(D);
            Image img{A, {}};
            int slot = 0;
            bool inside = true;
            for (std::size_t k = 0; k < windows.size(); ++k) {
                const Weight& x = windows[k][idx[k]];
                for (std::size_t s = 0; s < x.size(); ++s) {
                    chi[slot++] = x[s];
                    if (x[s] > bound || x[s] < -bound) inside = false;
                }
                img.blocks.push_back(x);
            }
            if (inside) {
                ++rep.preimages_checked;
                if (!seen.count(img)) {
                    rep.violations.push_back("not surjective: " + to_string(A) + " with blocks assembling to " +
                                             describe(chi));
                }
            }
            std::size_t k = windows.size();
            bool done = true;
            while (k > 0) {
                --k;
                if (++idx[k] < windows[k].size()) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
            if (done) break;
        }
    }
    if (rep.preimages_checked != rep.domain_size) {
        rep.violations.push_back("image size " + std::to_string(rep.domain_size) + " differs from " +
                                 std::to_string(rep.preimages_checked) + " partition-window tuples in the box");
    }
    return rep;
}

}  // namespace hallsod

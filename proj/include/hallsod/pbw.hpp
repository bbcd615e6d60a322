#pragma once

// Dimension counting for the tripled Jordan quiver: window counts m(d, w),
// the Sym-power recursion for primitive dimensions p(d, w), and a
// weight-level check of the semi-orthogonal decomposition.

#include "hallsod/index_sets.hpp"

#include <map>
#include <string>
#include <vector>

namespace hallsod {

/// |window_generators(d, w, 0)| for the tripled Jordan quiver.
std::int64_t window_count(PolytopeCache& cache, int d, std::int64_t w);

/// binomial(p + l - 1, l); throws InputError for negative input.
Integer sym_count(const Integer& p, std::int64_t l);

enum class PbwStatus { OK, NEGATIVE_P, RECONSTRUCTION_MISMATCH };
std::string to_string(PbwStatus s);

struct PbwTable {
    int dmax = 0;
    std::int64_t wmax = 0;
    std::map<std::pair<int, std::int64_t>, Integer> m;
    std::map<std::pair<int, std::int64_t>, Integer> p;
    PbwStatus status = PbwStatus::OK;
    std::vector<std::string> problems;
    bool periodic = true;  // m(d, w) = m(d, w + d) wherever both are tabulated
};

/// m(d, w) = sum over A in U^d_w of prod_i sym_count(p(d_i, w_i), l_i),
/// solved for p by induction on d, for 1 <= d <= dmax and |w| <= wmax.
PbwTable primitive_dims(PolytopeCache& cache, int dmax, std::int64_t wmax);

/// Recomputes m from p with the same counting formula.
Integer reconstruct_m(const PbwTable& t, int d, std::int64_t w);

struct BijectionReport {
    int d = 0;
    std::int64_t w = 0;
    std::int64_t bound = 0;
    std::int64_t domain_size = 0;      // dominant chi with coords in [-bound, bound]
    std::int64_t window_weights = 0;   // chi with A_chi = ((d, w))
    std::int64_t partitions = 0;       // distinct A_chi
    std::int64_t preimages_checked = 0;
    std::vector<std::string> violations;
    bool holds() const { return violations.empty(); }
};

/// chi -> (A_chi, leaf window weights) on dominant chi with <1, chi> = w and
/// coordinates in [-bound, bound]: injectivity, landing in the product of
/// windows, strictly decreasing slopes after the omega twist, and
/// surjectivity onto the tuples whose assembled weight lies in the box.
BijectionReport verify_bijection(PolytopeCache& cache, int d, std::int64_t w, std::int64_t bound);

}  // namespace hallsod

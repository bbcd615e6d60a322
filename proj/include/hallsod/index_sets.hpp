#pragma once

// Window generators, the partition index sets S, T, V, U, and the order of
// the semi-orthogonal decomposition they index.

#include "hallsod/standard_form.hpp"

#include <optional>
#include <vector>

namespace hallsod {

struct Truncation {
    Rational slope_bound = 4;  // keep parts with |w_i/d_i - w/d| <= slope_bound
    int max_parts = 1 << 20;

    bool admits(const PartitionA& a) const;
};

/// Largest distance of a coordinate of a window weight from the slope w/d.
Rational window_radius(const WPolytope& P, const Weight& delta);

/// Dominant integral chi with <1_d, chi> = w and chi + rho + delta in W/2,
/// ascending lexicographically. Without an explicit bound the scan box is
/// derived from the extent of the polytope.
std::vector<Weight> window_generators(PolytopeCache& cache, const DimVector& d, std::int64_t w, const Weight& delta,
                                      std::optional<std::int64_t> coordinate_bound = std::nullopt);

struct IndexEntry {
    PartitionA A;
    std::vector<Rational> r_sequence;
    std::optional<Weight> realizing_chi;
};

struct IndexSet {
    std::vector<IndexEntry> entries;
    bool complete_within_bounds = true;
};

/// Strictly decreasing slopes (one vertex), r-sequences from slope_to_tree.
IndexSet enum_V(int d, std::int64_t w, const Truncation& trunc);
/// Equal slopes, as multisets: parts sorted ascending.
std::vector<PartitionA> enum_U(int d, std::int64_t w);
/// Partitions A_chi over dominant integral chi in a scan box covering the truncation.
IndexSet enum_S(PolytopeCache& cache, const DimVector& d, std::int64_t w, const Weight& delta, const Truncation& trunc);
/// Partitions read off the minimal face of W/2 containing chi + rho + delta, chi a window weight.
IndexSet enum_T(PolytopeCache& cache, const DimVector& d, std::int64_t w, const Weight& delta, const Truncation& trunc);

/// Canonical listing order: by number of parts, then lexicographically.
void sort_canonical(std::vector<PartitionA>& v);
/// Parts sorted ascending (multiset normal form).
PartitionA as_multiset(PartitionA a);

enum class Verdict { A_before_B, B_before_A, both, equal };
std::string to_string(Verdict v);

struct OrderKey {
    std::vector<Rational> r;
    std::vector<Composition> lambdas;  // level partitions of the nodes, same order as r
};

OrderKey order_key(const StandardForm& form);
OrderKey order_key(const TreeSkeleton& tree);

/// Leading r decides; an exhausted sequence comes after a longer one; on a
/// full tie, finer node cocharacters come first, then lexicographically
/// smaller compositions.
Verdict compare_keys(const OrderKey& a, const OrderKey& b);

/// Partitions of S, compared through their standard forms.
Verdict compare(PolytopeCache& cache, const PartitionA& a, const PartitionA& b, const Weight& delta);
/// Slope-ordered partitions (tripled Jordan), compared through slope_to_tree.
Verdict compare_v(const PartitionA& a, const PartitionA& b);

/// True iff consecutive groups of e sum to the parts of d. Throws InputError
/// when the totals differ.
bool partition_refines(const Composition& e, const Composition& d);

}  // namespace hallsod

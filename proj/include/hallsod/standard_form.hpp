#pragma once

// Standard forms chi + rho + delta = -sum_j r_j N_j + psi over a tree of
// antidominant cocharacters, the partitions they induce, and the twist by
// omega_lambda relating them to slope-ordered partitions.

#include "hallsod/polytope.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hallsod {

struct FormNode {
    std::vector<int> slots;  // global slots of the block this node refines
    DimVector block;         // dimension vector of that block
    Cocharacter lambda;      // local cocharacter on `block`
    Rational r;
    Weight N;                // N^{lambda>0}, embedded in the global slots
    int parent = -1;
    std::vector<int> children;
};

struct LeafBlock {
    std::vector<int> slots;
    DimVector dims;
};

struct StandardForm {
    DimVector dims;
    Weight chi;
    Weight delta;
    Weight source;    // chi + rho + delta
    Weight residual;  // psi
    std::vector<FormNode> nodes;  // pre-order; nodes[0] is the root when nonempty
    std::vector<LeafBlock> leaves;  // left to right, i.e. by increasing lambda level
};

struct Part {
    DimVector dims;
    std::int64_t w = 0;
    friend bool operator==(const Part&, const Part&) = default;
    friend auto operator<=>(const Part&, const Part&) = default;
};

struct PartitionA {
    std::vector<Part> parts;

    DimVector total_dims() const;
    std::int64_t total_weight() const;
    Composition composition() const;
    friend bool operator==(const PartitionA&, const PartitionA&) = default;
    friend auto operator<=>(const PartitionA&, const PartitionA&) = default;
};

std::string to_string(const PartitionA& a);
/// "d:w,d:w,..." (one-vertex) or "d0;d1:w,..." for several vertices.
PartitionA parse_partition(std::string_view text);
/// Shorthand for one-vertex partitions.
PartitionA one_vertex(const std::vector<std::pair<int, std::int64_t>>& parts);

/// Caches one polytope per dimension vector for a fixed quiver.
class PolytopeCache {
public:
    explicit PolytopeCache(Quiver q) : quiver_(std::move(q)) {}
    const Quiver& quiver() const { return quiver_; }
    const WPolytope& get(const DimVector& d);

private:
    Quiver quiver_;
    std::map<DimVector, WPolytope> cache_;
};

/// Throws InputError unless delta is constant on every vertex block.
void check_weyl_invariant(const Weight& delta);

/// delta = c tau_d.
Weight delta_multiple(const DimVector& d, const Rational& c);

StandardForm decompose(PolytopeCache& cache, const Weight& chi, const Weight& delta);
StandardForm decompose(const Quiver& q, const Weight& chi, const Weight& delta);

/// Leaf blocks with w_i = <1_{d_i}, chi_i> of the original chi.
PartitionA partition_of(const StandardForm& form);

/// Node r-values in pre-order.
std::vector<Rational> r_sequence(const StandardForm& form);

/// Antidominant lambda_{d_1,...,d_k} of a partition.
Cocharacter partition_cocharacter(const PartitionA& a);

/// rho^{lambda<0} = 1/2 sum of the roots alpha with <lambda, alpha> < 0.
Weight rho_negative(const Cocharacter& l);
/// rho of the Levi: rho - rho^{lambda<0}.
Weight rho_levi(const Cocharacter& l);

/// chi_A = -sum_j r_j N_j - rho^{lambda<0} - delta, read off a standard form of A.
Weight chi_A(const StandardForm& form);
/// -chi_A split along the leaf blocks.
std::vector<Weight> delta_Ai(const StandardForm& form);

/// A dominant integral chi with A_chi = A. For the tripled Jordan quiver the
/// leaf blocks are chosen as the first window weights of each part; otherwise
/// a box of radius `bound` around the part slopes is scanned. Throws
/// InputError when A admits no standard form.
Weight realize(PolytopeCache& cache, const PartitionA& a, const Weight& delta, int bound = 8);

/// Convenience: chi_A / delta_Ai of the standard form of realize(A).
Weight chi_A(PolytopeCache& cache, const PartitionA& a, const Weight& delta);
std::vector<Weight> delta_Ai(PolytopeCache& cache, const PartitionA& a, const Weight& delta);

/// omega_lambda = sum of the cut weights alpha with <lambda, alpha> < 0.
Weight omega_weight(const Quiver& q, const Cocharacter& l);

/// (d_i, w_i) -> (d_i, w_i - <1_{d_i}, omega_lambda>). Throws InputError
/// when the quiver has no cut.
PartitionA omega_shift(const Quiver& q, const PartitionA& a);
/// Inverse of omega_shift.
PartitionA omega_unshift(const Quiver& q, const PartitionA& a);

struct EqThree {
    Rational lhs;  // 2 <lambda, omega_lambda>
    Rational rhs;  // difference of the two cotangent pairings
};
/// Both sides of the omega identity, computed independently: the cotangent
/// classes are R + C - g (tripled stack) and R - C - g (Koszul stack).
EqThree eq_three(const Quiver& q, const DimVector& d, const Cocharacter& l);

bool strictly_decreasing_slopes(const PartitionA& a);
bool equal_slopes(const PartitionA& a);

struct TreeNode {
    std::vector<int> slots;
    int block = 0;
    Cocharacter lambda;  // local
    Rational kappa;      // 3 r - 3/2
    Rational r;
    int parent = -1;
    std::vector<int> children;
};

struct TreeSkeleton {
    int d = 0;
    std::vector<TreeNode> nodes;  // pre-order
    std::vector<LeafBlock> leaves;
    Rational c;                   // coefficient of tau_d
    Weight psi;                   // sum_i w_i tau_{d_i}
};

/// Tripled Jordan only: psi_A = -sum_j (3 r_j - 3/2) g_j + c tau_d. Throws
/// InputError unless the slopes strictly decrease.
TreeSkeleton slope_to_tree(const PartitionA& a);
/// Rebuilds psi from the tree data and reads the partition off the leaves.
PartitionA tree_to_partition(const TreeSkeleton& t);

}  // namespace hallsod

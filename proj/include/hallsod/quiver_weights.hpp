#pragma once

// Weight and coweight lattices of G(d) = prod GL(d_i) for a symmetric quiver.
//
// Slots are indexed vertex-major: vertex 0 owns slots [0, d_0), vertex 1 owns
// [d_0, d_0 + d_1), and so on. Chamber convention: a weight is dominant when
// its coordinates are non-increasing inside every vertex block, a cocharacter
// is antidominant when its coordinates are non-decreasing inside every block,
// and rho = ((n-1)/2, (n-3)/2, ..., -(n-1)/2) per block.

#include "hallsod/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hallsod {

struct DimVector {
    std::vector<int> entries;

    DimVector() = default;
    explicit DimVector(std::vector<int> e);
    static DimVector single(int n) { return DimVector({n}); }

    int total() const;
    std::size_t vertices() const { return entries.size(); }
    int operator[](std::size_t i) const { return entries[i]; }
    bool is_zero() const { return total() == 0; }

    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector&, const DimVector&) = default;
};

DimVector operator+(const DimVector& a, const DimVector& b);
std::string to_string(const DimVector& d);

/// First slot of `vertex` in the vertex-major layout of `d`.
int slot_offset(const DimVector& d, std::size_t vertex);
/// Vertex owning global slot `slot`.
std::size_t vertex_of_slot(const DimVector& d, int slot);

struct Edge {
    int source = 0;
    int target = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

class Quiver {
public:
    /// Validates symmetry and that `cut` indexes existing edges.
    Quiver(std::string name, std::vector<std::string> vertices, std::vector<Edge> edges,
           std::vector<int> cut = {});

    /// "jordan" (one loop), "doubled-jordan" (two loops), "tripled-jordan"
    /// (three loops x, y, z with z as the cut).
    static Quiver builtin(std::string_view name);
    /// {"vertices":[...], "edges":[[s,t],...], "cut":[edge indices]}; endpoints
    /// are vertex indices or vertex names.
    static Quiver from_json(std::string_view json_text, std::string name = "custom");

    const std::string& name() const { return name_; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& cut() const { return cut_; }
    bool has_cut() const { return !cut_.empty(); }
    std::size_t vertex_count() const { return vertices_.size(); }

    /// True for the three-loop quiver with a single cut loop.
    bool is_tripled_jordan() const;

    /// The quiver with the cut edges removed.
    Quiver without_cut() const;
    /// The quiver consisting of the cut edges only.
    Quiver cut_only() const;

    /// Throws InputError unless d has one entry per vertex, all nonnegative.
    void check_dims(const DimVector& d) const;

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> cut_;
};

/// Element of M(d)_R: exact rational coordinates over the slots of d.
class Weight {
public:
    Weight() = default;
    explicit Weight(DimVector dims);
    Weight(DimVector dims, std::vector<Rational> coords);
    static Weight from_integers(DimVector dims, const std::vector<std::int64_t>& coords);

    const DimVector& dims() const { return dims_; }
    const std::vector<Rational>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    bool integral() const;
    bool is_zero() const;
    /// <1_d, chi>.
    Rational total() const;
    /// Coordinates of the slots belonging to `vertex`.
    std::vector<Rational> vertex_block(std::size_t vertex) const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    Weight& operator*=(const Rational& s);

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
    friend Weight operator-(Weight a) { return a *= Rational(-1); }
    friend bool operator==(const Weight&, const Weight&) = default;
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

private:
    void check_same_shape(const Weight& other) const;

    DimVector dims_;
    std::vector<Rational> coords_;
};

std::string to_string(const Weight& w);
/// Comma separated per slot, ';' between vertex blocks.
Weight parse_weight(std::string_view text, const DimVector& d);
/// Infers the dimension vector from the ';'-separated block lengths.
Weight parse_weight(std::string_view text);

/// Integer cocharacter of the maximal torus of G(d).
class Cocharacter {
public:
    Cocharacter() = default;
    explicit Cocharacter(DimVector dims);
    Cocharacter(DimVector dims, std::vector<std::int64_t> coords);

    const DimVector& dims() const { return dims_; }
    const std::vector<std::int64_t>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }

    bool is_trivial() const;
    bool is_antidominant() const;
    /// Cocharacter of SG(d): coordinate sum zero.
    bool is_special() const;

    Cocharacter operator-() const;
    /// Same weight, viewed as a rational weight.
    Weight as_weight() const;

    friend bool operator==(const Cocharacter&, const Cocharacter&) = default;

private:
    DimVector dims_;
    std::vector<std::int64_t> coords_;
};

std::string to_string(const Cocharacter& l);

bool is_dominant(const Weight& chi);

/// Dominant integral weights of d with coordinate sum `w` and every
/// coordinate in [lo, hi], in ascending lexicographic order.
std::vector<Weight> dominant_in_box(const DimVector& d, std::int64_t w, std::int64_t lo, std::int64_t hi);

/// Weights of R(d): e^{t(a)}_l - e^{s(a)}_m for every edge a and slot pair.
std::vector<Weight> rep_weights(const Quiver& q, const DimVector& d);
/// Weights of the adjoint representation gl(d) = sum_i gl(d_i).
std::vector<Weight> adjoint_weights(const DimVector& d);
/// Weights of C(d), the representation space of the cut edges.
std::vector<Weight> cut_weights(const Quiver& q, const DimVector& d);

Weight rho(const DimVector& d);
Weight nu(const DimVector& d);
/// nu_d / <1_d, nu_d>; throws InputError for the zero dimension vector.
Weight tau(const DimVector& d);

/// Natural pairing; throws InputError on slot-count mismatch.
Rational pair(const Cocharacter& l, const Weight& chi);

/// Sum of the weights in `rep` pairing positively with `l`.
Weight n_pos(const Cocharacter& l, const std::vector<Weight>& rep);

/// n_lambda = sum_{beta in R(d), <l,beta> > 0} <l,beta> - sum_{alpha in gl(d), <l,alpha> > 0} <l,alpha>.
/// Throws InputError unless `l` is an SG(d)-cocharacter.
Rational n_lambda(const Quiver& q, const DimVector& d, const Cocharacter& l);

/// An ordered partition d = d_1 + ... + d_k into nonzero dimension vectors.
using Composition = std::vector<DimVector>;

/// All ordered partitions of d, ordered by number of parts, then lexicographically.
std::vector<Composition> compositions(const DimVector& d);

/// Canonical antidominant SG(d) representative: part k sits at level k, the
/// levels are shifted to sum zero and scaled to the smallest integer vector.
Cocharacter canonical_cocharacter(const DimVector& d, const Composition& parts);

/// One canonical representative per equivalence class of antidominant
/// SG(d)-cocharacters, in the order of `compositions(d)`.
std::vector<Cocharacter> cochar_classes(const DimVector& d);

/// Ordered partition of slots by increasing coordinate value, as dimension
/// vectors. Requires an antidominant cocharacter.
Composition level_partition(const Cocharacter& l);
/// Global slot indices of each level, ordered by increasing value.
std::vector<std::vector<int>> level_slots(const Cocharacter& l);

/// Two cocharacters are equivalent when they have the same level structure.
bool equivalent(const Cocharacter& a, const Cocharacter& b);

/// Splits chi along the level partition of an antidominant `l`.
std::vector<Weight> block_decompose(const Weight& chi, const Cocharacter& l);

/// Restriction of chi to `slots` (in the given order), as a weight of `dims`.
Weight restrict_to(const Weight& chi, const std::vector<int>& slots, const DimVector& dims);
/// Inverse of restrict_to: places `part` at `slots` of a zero weight of `dims`.
Weight embed(const Weight& part, const std::vector<int>& slots, const DimVector& dims);

}  // namespace hallsod

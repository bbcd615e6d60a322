#include "hallsod/standard_form.hpp"

#include <algorithm>

namespace hallsod {

// ---------------------------------------------------------------- partitions

DimVector PartitionA::total_dims() const {
    if (parts.empty()) throw InputError("empty partition");
    DimVector sum(std::vector<int>(parts.front().dims.vertices(), 0));
    for (const Part& p : parts) sum = sum + p.dims;
    return sum;
}

std::int64_t PartitionA::total_weight() const {
    std::int64_t s = 0;
    for (const Part& p : parts) s += p.w;
    return s;
}

Composition PartitionA::composition() const {
    Composition c;
    for (const Part& p : parts) c.push_back(p.dims);
    return c;
}

std::string to_string(const PartitionA& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        if (i) s += ",";
        s += "(" + to_string(a.parts[i].dims) + "," + std::to_string(a.parts[i].w) + ")";
    }
    return s + ")";
}

PartitionA parse_partition(std::string_view text) {
    PartitionA a;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw InputError("partition part '" + std::string(item) + "' is not of the form d:w");
        }
        std::vector<int> dims;
        std::string_view dtext = item.substr(0, colon);
        std::size_t ds = 0;
        while (ds <= dtext.size()) {
            auto semi = dtext.find(';', ds);
            const Rational v = parse_rational(dtext.substr(ds, semi == std::string_view::npos ? dtext.npos : semi - ds));
            const auto n = to_int64(v);
            if (n < 0) throw InputError("negative dimension in partition");
            dims.push_back(static_cast<int>(n));
            if (semi == std::string_view::npos) break;
            ds = semi + 1;
        }
        DimVector dv(std::move(dims));
        if (dv.is_zero()) throw InputError("partition parts must have positive dimension");
        a.parts.push_back({std::move(dv), to_int64(parse_rational(item.substr(colon + 1)))});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    for (const Part& p : a.parts) {
        if (p.dims.vertices() != a.parts.front().dims.vertices()) throw InputError("partition parts over different vertex sets");
    }
    return a;
}

PartitionA one_vertex(const std::vector<std::pair<int, std::int64_t>>& parts) {
    PartitionA a;
    for (const auto& [d, w] : parts) a.parts.push_back({DimVector::single(d), w});
    return a;
}

const WPolytope& PolytopeCache::get(const DimVector& d) {
    auto it = cache_.find(d);
    if (it == cache_.end()) it = cache_.emplace(d, WPolytope::of(quiver_, d)).first;
    return it->second;
}

void check_weyl_invariant(const Weight& delta) {
    for (std::size_t v = 0; v < delta.dims().vertices(); ++v) {
        const auto block = delta.vertex_block(v);
        if (std::adjacent_find(block.begin(), block.end(), std::not_equal_to<>()) != block.end()) {
            throw InputError("delta " + to_string(delta) + " is not Weyl-invariant");
        }
    }
}

Weight delta_multiple(const DimVector& d, const Rational& c) {
    return c * tau(d);
}

// ---------------------------------------------------------------- decompose

namespace {

std::vector<int> all_slots(const DimVector& d) {
    std::vector<int> s(d.total());
    for (int i = 0; i < d.total(); ++i) s[i] = i;
    return s;
}

struct Decomposer {
    PolytopeCache& cache;
    StandardForm& form;
    Weight phi;

    void process(const std::vector<int>& slots, const DimVector& block, int parent) {
        const Weight local = restrict_to(phi, slots, block);
        const WPolytope& P = cache.get(block);
        const Rational r = r_invariant(P, local);
        if (r <= Rational(1, 2)) {
            form.leaves.push_back({slots, block});
            return;
        }
        FormNode node;
        node.slots = slots;
        node.block = block;
        node.lambda = face_cocharacter(P, local, r);
        node.r = r;
        node.N = embed(n_pos(node.lambda, P.segments), slots, form.dims);
        node.parent = parent;
        phi += r * node.N;

        const int index = static_cast<int>(form.nodes.size());
        form.nodes.push_back(node);
        if (parent >= 0) form.nodes[parent].children.push_back(index);

        const auto levels = level_slots(node.lambda);
        const auto parts = level_partition(node.lambda);
        for (std::size_t k = 0; k < levels.size(); ++k) {
            std::vector<int> child;
            for (int s : levels[k]) child.push_back(slots[s]);
            process(child, parts[k], index);
        }
    }
};

}  // namespace

StandardForm decompose(PolytopeCache& cache, const Weight& chi, const Weight& delta) {
    cache.quiver().check_dims(chi.dims());
    if (delta.dims() != chi.dims()) throw InputError("delta and chi live over different dimension vectors");
    if (!is_dominant(chi)) throw InputError("weight " + to_string(chi) + " is not dominant");
    check_weyl_invariant(delta);

    StandardForm form;
    form.dims = chi.dims();
    form.chi = chi;
    form.delta = delta;
    form.source = chi + rho(chi.dims()) + delta;
    Decomposer dec{cache, form, form.source};
    dec.process(all_slots(form.dims), form.dims, -1);
    form.residual = dec.phi;
    return form;
}

StandardForm decompose(const Quiver& q, const Weight& chi, const Weight& delta) {
    PolytopeCache cache(q);
    return decompose(cache, chi, delta);
}

PartitionA partition_of(const StandardForm& form) {
    PartitionA a;
    for (const LeafBlock& leaf : form.leaves) {
        Rational w = 0;
        for (int s : leaf.slots) w += form.chi[s];
        a.parts.push_back({leaf.dims, to_int64(w)});
    }
    return a;
}

std::vector<Rational> r_sequence(const StandardForm& form) {
    std::vector<Rational> out;
    for (const FormNode& n : form.nodes) out.push_back(n.r);
    return out;
}

Cocharacter partition_cocharacter(const PartitionA& a) {
    return canonical_cocharacter(a.total_dims(), a.composition());
}

// ---------------------------------------------------------------- chi_A

Weight rho_negative(const Cocharacter& l) {
    Weight sum(l.dims());
    for (const Weight& alpha : adjoint_weights(l.dims())) {
        if (pair(l, alpha) < 0) sum += alpha;
    }
    return Rational(1, 2) * sum;
}

Weight rho_levi(const Cocharacter& l) {
    return rho(l.dims()) - rho_negative(l);
}

namespace {

Cocharacter leaf_cocharacter(const StandardForm& form) {
    return partition_cocharacter(partition_of(form));
}

}  // namespace

Weight chi_A(const StandardForm& form) {
    Weight out(form.dims);
    for (const FormNode& n : form.nodes) out -= n.r * n.N;
    out -= rho_negative(leaf_cocharacter(form));
    out -= form.delta;
    return out;
}

std::vector<Weight> delta_Ai(const StandardForm& form) {
    const Weight neg = -chi_A(form);
    std::vector<Weight> out;
    for (const LeafBlock& leaf : form.leaves) out.push_back(restrict_to(neg, leaf.slots, leaf.dims));
    return out;
}

Weight realize(PolytopeCache& cache, const PartitionA& a, const Weight& delta, int bound) {
    const DimVector d = a.total_dims();
    const Cocharacter l = partition_cocharacter(a);
    const auto slots = level_slots(l);
    const bool one_vertex_quiver = cache.quiver().vertex_count() == 1;

    std::vector<std::vector<Weight>> candidates;
    for (const Part& p : a.parts) {
        const std::int64_t n = p.dims.total();
        const Rational slope(p.w, n);
        auto box = dominant_in_box(p.dims, p.w, to_int64(floor_of(slope)) - bound, to_int64(ceil_of(slope)) + bound);
        if (one_vertex_quiver) {
            // delta_Ai is a multiple of tau_{d_i}: leaf blocks are plain window weights.
            const WPolytope& P = cache.get(p.dims);
            const Weight rh = rho(p.dims);
            std::erase_if(box, [&](const Weight& x) { return !contains(P, x + rh, Rational(1, 2)); });
        }
        if (box.empty()) throw InputError("partition " + to_string(a) + " admits no standard form");
        candidates.push_back(std::move(box));
    }

    std::vector<std::size_t> idx(candidates.size(), 0);
    constexpr int kMaxTries = 20000;
    for (int tries = 0; tries < kMaxTries; ++tries) {
        Weight chi(d);
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const Weight& x = candidates[k][idx[k]];
            for (std::size_t s = 0; s < slots[k].size(); ++s) chi[slots[k][s]] = x[s];
        }
        if (is_dominant(chi) && partition_of(decompose(cache, chi, delta)) == a) return chi;
        std::size_t k = candidates.size();
        while (k > 0) {
            --k;
            if (++idx[k] < candidates[k].size()) break;
            idx[k] = 0;
            if (k == 0) throw InputError("partition " + to_string(a) + " admits no standard form");
        }
    }
    throw InputError("partition " + to_string(a) + " admits no standard form within the search limit");
}

Weight chi_A(PolytopeCache& cache, const PartitionA& a, const Weight& delta) {
    return chi_A(decompose(cache, realize(cache, a, delta), delta));
}

std::vector<Weight> delta_Ai(PolytopeCache& cache, const PartitionA& a, const Weight& delta) {
    return delta_Ai(decompose(cache, realize(cache, a, delta), delta));
}

// ---------------------------------------------------------------- omega twist

Weight omega_weight(const Quiver& q, const Cocharacter& l) {
    Weight sum(l.dims());
    for (const Weight& alpha : cut_weights(q, l.dims())) {
        if (pair(l, alpha) < 0) sum += alpha;
    }
    return sum;
}

namespace {

PartitionA shift(const Quiver& q, const PartitionA& a, int sign) {
    if (!q.has_cut()) throw InputError("quiver '" + q.name() + "' has no cut");
    const Cocharacter l = partition_cocharacter(a);
    const Weight omega = omega_weight(q, l);
    const auto slots = level_slots(l);
    PartitionA out = a;
    for (std::size_t i = 0; i < out.parts.size(); ++i) {
        Rational s = 0;
        for (int slot : slots[i]) s += omega[slot];
        out.parts[i].w -= sign * to_int64(s);
    }
    return out;
}

// sum over a signed weight multiset of <l, beta> restricted to <l, beta> <= 0
Rational nonpositive_pairing(const Cocharacter& l, const std::vector<Weight>& ws) {
    Rational s = 0;
    for (const Weight& b : ws) {
        const Rational p = pair(l, b);
        if (p <= 0) s += p;
    }
    return s;
}

}  // namespace

PartitionA omega_shift(const Quiver& q, const PartitionA& a) {
    return shift(q, a, 1);
}

PartitionA omega_unshift(const Quiver& q, const PartitionA& a) {
    return shift(q, a, -1);
}

EqThree eq_three(const Quiver& q, const DimVector& d, const Cocharacter& l) {
    if (!q.has_cut()) throw InputError("quiver '" + q.name() + "' has no cut");
    EqThree e;
    e.lhs = 2 * pair(l, omega_weight(q, l));
    const auto R = rep_weights(q.without_cut(), d);
    const auto C = cut_weights(q, d);
    const auto g = adjoint_weights(d);
    const Rational r = nonpositive_pairing(l, R);
    const Rational c = nonpositive_pairing(l, C);
    const Rational a = nonpositive_pairing(l, g);
    const Rational tripled = r + c - a;
    const Rational koszul = r - c - a;
    e.rhs = tripled - koszul;
    return e;
}

bool strictly_decreasing_slopes(const PartitionA& a) {
    for (std::size_t i = 1; i < a.parts.size(); ++i) {
        if (Rational(a.parts[i - 1].w, a.parts[i - 1].dims.total()) <= Rational(a.parts[i].w, a.parts[i].dims.total())) {
            return false;
        }
    }
    return true;
}

bool equal_slopes(const PartitionA& a) {
    for (std::size_t i = 1; i < a.parts.size(); ++i) {
        if (Rational(a.parts[i - 1].w, a.parts[i - 1].dims.total()) != Rational(a.parts[i].w, a.parts[i].dims.total())) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- slopes to trees

namespace {

struct TreeBuilder {
    PolytopeCache adjoint{Quiver::builtin("jordan")};
    TreeSkeleton& tree;
    Weight theta;

    void process(const std::vector<int>& slots, int parent) {
        const int n = static_cast<int>(slots.size());
        const DimVector block = DimVector::single(n);
        const Weight local = restrict_to(theta, slots, block);
        if (std::adjacent_find(local.coords().begin(), local.coords().end(), std::not_equal_to<>()) ==
            local.coords().end()) {
            tree.leaves.push_back({slots, block});
            return;
        }
        const WPolytope& P = adjoint.get(block);
        TreeNode node;
        node.slots = slots;
        node.block = n;
        node.kappa = r_invariant(P, local);
        node.lambda = face_cocharacter(P, local, node.kappa);
        node.r = (node.kappa + Rational(3, 2)) / 3;
        node.parent = parent;
        theta += node.kappa * embed(n_pos(node.lambda, P.segments), slots, theta.dims());

        const int index = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back(node);
        if (parent >= 0) tree.nodes[parent].children.push_back(index);
        for (const auto& level : level_slots(node.lambda)) {
            std::vector<int> child;
            for (int s : level) child.push_back(slots[s]);
            process(child, index);
        }
    }
};

}  // namespace

TreeSkeleton slope_to_tree(const PartitionA& a) {
    for (const Part& p : a.parts) {
        if (p.dims.vertices() != 1) throw InputError("slope_to_tree needs a one-vertex partition");
    }
    if (!strictly_decreasing_slopes(a)) throw InputError("partition " + to_string(a) + " has non-strict slopes");
    TreeSkeleton t;
    t.d = a.total_dims().total();
    const DimVector d = DimVector::single(t.d);
    t.psi = Weight(d);
    int slot = 0;
    for (const Part& p : a.parts) {
        const int n = p.dims.total();
        for (int j = 0; j < n; ++j) t.psi[slot++] = Rational(p.w, n);
    }
    TreeBuilder b{PolytopeCache(Quiver::builtin("jordan")), t, t.psi};
    b.process(all_slots(d), -1);
    t.c = b.theta.total();
    // theta is now c tau_d
    if (b.theta != t.c * tau(d)) throw InvariantError("slope tree of " + to_string(a) + " leaves a non-central residual");
    return t;
}

PartitionA tree_to_partition(const TreeSkeleton& t) {
    const DimVector d = DimVector::single(t.d);
    Weight psi = t.c * tau(d);
    PolytopeCache adjoint(Quiver::builtin("jordan"));
    for (const TreeNode& n : t.nodes) {
        const WPolytope& P = adjoint.get(DimVector::single(n.block));
        psi -= (3 * n.r - Rational(3, 2)) * embed(n_pos(n.lambda, P.segments), n.slots, d);
    }
    PartitionA a;
    for (const LeafBlock& leaf : t.leaves) {
        Rational w = 0;
        for (int s : leaf.slots) w += psi[s];
        a.parts.push_back({leaf.dims, to_int64(w)});
    }
    return a;
}

}  // namespace hallsod

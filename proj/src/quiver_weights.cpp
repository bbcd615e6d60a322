#include "hallsod/quiver_weights.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace hallsod {

// ---------------------------------------------------------------- DimVector

DimVector::DimVector(std::vector<int> e) : entries(std::move(e)) {
    for (int x : entries) {
        if (x < 0) throw InputError("dimension vector entries must be nonnegative");
    }
}

int DimVector::total() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

DimVector operator+(const DimVector& a, const DimVector& b) {
    if (a.vertices() != b.vertices()) throw InputError("dimension vectors over different vertex sets");
    std::vector<int> out(a.vertices());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return DimVector(std::move(out));
}

std::string to_string(const DimVector& d) {
    if (d.vertices() == 1) return std::to_string(d[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < d.vertices(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

int slot_offset(const DimVector& d, std::size_t vertex) {
    int off = 0;
    for (std::size_t i = 0; i < vertex; ++i) off += d[i];
    return off;
}

std::size_t vertex_of_slot(const DimVector& d, int slot) {
    int off = 0;
    for (std::size_t i = 0; i < d.vertices(); ++i) {
        off += d[i];
        if (slot < off) return i;
    }
    throw InputError("slot index out of range");
}

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(std::string name, std::vector<std::string> vertices, std::vector<Edge> edges,
               std::vector<int> cut)
    : name_(std::move(name)), vertices_(std::move(vertices)), edges_(std::move(edges)), cut_(std::move(cut)) {
    if (vertices_.empty()) throw InputError("quiver has no vertices");
    const int n = static_cast<int>(vertices_.size());
    std::map<std::pair<int, int>, int> mult;
    for (const Edge& e : edges_) {
        if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n) {
            throw InputError("edge endpoint out of range");
        }
        ++mult[{e.source, e.target}];
    }
    for (const auto& [st, m] : mult) {
        auto it = mult.find({st.second, st.first});
        if (it == mult.end() || it->second != m) {
            throw InputError("quiver is not symmetric: " + vertices_[st.first] + "->" + vertices_[st.second]);
        }
    }
    std::sort(cut_.begin(), cut_.end());
    if (std::adjacent_find(cut_.begin(), cut_.end()) != cut_.end()) throw InputError("duplicate cut edge");
    for (int c : cut_) {
        if (c < 0 || c >= static_cast<int>(edges_.size())) throw InputError("cut edge index out of range");
    }
}

Quiver Quiver::builtin(std::string_view name) {
    if (name == "jordan") return Quiver("jordan", {"0"}, {{0, 0}});
    if (name == "doubled-jordan") return Quiver("doubled-jordan", {"0"}, {{0, 0}, {0, 0}});
    if (name == "tripled-jordan") return Quiver("tripled-jordan", {"0"}, {{0, 0}, {0, 0}, {0, 0}}, {2});
    throw InputError("unknown quiver '" + std::string(name) + "'");
}

Quiver Quiver::from_json(std::string_view json_text, std::string name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("quiver JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
        throw InputError("quiver JSON needs \"vertices\" and \"edges\"");
    }
    std::vector<std::string> vertices;
    for (const auto& v : doc.at("vertices")) {
        vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    auto endpoint = [&](const nlohmann::json& x) -> int {
        if (x.is_number_integer()) return x.get<int>();
        const std::string key = x.is_string() ? x.get<std::string>() : x.dump();
        auto it = std::find(vertices.begin(), vertices.end(), key);
        if (it == vertices.end()) throw InputError("unknown vertex '" + key + "' in quiver JSON");
        return static_cast<int>(it - vertices.begin());
    };
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("edges must be [source, target] pairs");
        edges.push_back({endpoint(e[0]), endpoint(e[1])});
    }
    std::vector<int> cut;
    if (doc.contains("cut")) {
        for (const auto& c : doc.at("cut")) {
            if (!c.is_number_integer()) throw InputError("cut entries must be edge indices");
            cut.push_back(c.get<int>());
        }
    }
    return Quiver(std::move(name), std::move(vertices), std::move(edges), std::move(cut));
}

bool Quiver::is_tripled_jordan() const {
    return vertices_.size() == 1 && edges_.size() == 3 && cut_.size() == 1;
}

Quiver Quiver::without_cut() const {
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!std::binary_search(cut_.begin(), cut_.end(), static_cast<int>(i))) kept.push_back(edges_[i]);
    }
    return Quiver(name_ + "-uncut", vertices_, std::move(kept));
}

Quiver Quiver::cut_only() const {
    std::vector<Edge> kept;
    for (int c : cut_) kept.push_back(edges_[c]);
    return Quiver(name_ + "-cut", vertices_, std::move(kept));
}

void Quiver::check_dims(const DimVector& d) const {
    if (d.vertices() != vertices_.size()) {
        throw InputError("dimension vector has " + std::to_string(d.vertices()) + " entries, quiver has " +
                         std::to_string(vertices_.size()) + " vertices");
    }
}

// ---------------------------------------------------------------- Weight

Weight::Weight(DimVector dims) : dims_(std::move(dims)), coords_(dims_.total()) {}

Weight::Weight(DimVector dims, std::vector<Rational> coords) : dims_(std::move(dims)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != dims_.total()) {
        throw InputError("weight has " + std::to_string(coords_.size()) + " coordinates, expected " +
                         std::to_string(dims_.total()));
    }
}

Weight Weight::from_integers(DimVector dims, const std::vector<std::int64_t>& coords) {
    std::vector<Rational> c(coords.begin(), coords.end());
    return Weight(std::move(dims), std::move(c));
}

bool Weight::integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

bool Weight::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

Rational Weight::total() const {
    Rational s = 0;
    for (const auto& c : coords_) s += c;
    return s;
}

std::vector<Rational> Weight::vertex_block(std::size_t vertex) const {
    const int off = slot_offset(dims_, vertex);
    return {coords_.begin() + off, coords_.begin() + off + dims_[vertex]};
}

void Weight::check_same_shape(const Weight& other) const {
    if (dims_ != other.dims_) throw InputError("weights over different dimension vectors");
}

Weight& Weight::operator+=(const Weight& other) {
    check_same_shape(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    check_same_shape(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

std::string to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t v = 0; v < w.dims().vertices(); ++v) {
        if (v) s += ";";
        const auto block = w.vertex_block(v);
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) s += ",";
            s += to_string(block[i]);
        }
    }
    return s + ")";
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::vector<Rational>> parse_blocks(std::string_view text) {
    std::vector<std::vector<Rational>> blocks;
    for (auto block : split(text, ';')) {
        std::vector<Rational> coords;
        bool blank = block.find_first_not_of(" \t") == std::string_view::npos;
        if (!blank) {
            for (auto item : split(block, ',')) coords.push_back(parse_rational(item));
        }
        blocks.push_back(std::move(coords));
    }
    return blocks;
}

}  // namespace

Weight parse_weight(std::string_view text, const DimVector& d) {
    const auto blocks = parse_blocks(text);
    std::vector<Rational> coords;
    if (blocks.size() == d.vertices()) {
        for (std::size_t v = 0; v < blocks.size(); ++v) {
            if (static_cast<int>(blocks[v].size()) != d[v]) {
                throw InputError("weight block " + std::to_string(v) + " has " + std::to_string(blocks[v].size()) +
                                 " entries, expected " + std::to_string(d[v]));
            }
            coords.insert(coords.end(), blocks[v].begin(), blocks[v].end());
        }
    } else if (blocks.size() == 1) {
        coords = blocks.front();
    } else {
        throw InputError("weight has " + std::to_string(blocks.size()) + " vertex blocks, expected " +
                         std::to_string(d.vertices()));
    }
    return Weight(d, std::move(coords));
}

Weight parse_weight(std::string_view text) {
    const auto blocks = parse_blocks(text);
    std::vector<int> dims;
    std::vector<Rational> coords;
    for (const auto& b : blocks) {
        dims.push_back(static_cast<int>(b.size()));
        coords.insert(coords.end(), b.begin(), b.end());
    }
    return Weight(DimVector(std::move(dims)), std::move(coords));
}

// ---------------------------------------------------------------- Cocharacter

Cocharacter::Cocharacter(DimVector dims) : dims_(std::move(dims)), coords_(dims_.total(), 0) {}

Cocharacter::Cocharacter(DimVector dims, std::vector<std::int64_t> coords)
    : dims_(std::move(dims)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != dims_.total()) {
        throw InputError("cocharacter has " + std::to_string(coords_.size()) + " coordinates, expected " +
                         std::to_string(dims_.total()));
    }
}

bool Cocharacter::is_trivial() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
}

bool Cocharacter::is_antidominant() const {
    for (std::size_t v = 0; v < dims_.vertices(); ++v) {
        const int off = slot_offset(dims_, v);
        for (int j = 1; j < dims_[v]; ++j) {
            if (coords_[off + j - 1] > coords_[off + j]) return false;
        }
    }
    return true;
}

bool Cocharacter::is_special() const {
    return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0}) == 0;
}

Cocharacter Cocharacter::operator-() const {
    std::vector<std::int64_t> c(coords_.size());
    std::transform(coords_.begin(), coords_.end(), c.begin(), [](std::int64_t x) { return -x; });
    return Cocharacter(dims_, std::move(c));
}

Weight Cocharacter::as_weight() const {
    return Weight::from_integers(dims_, coords_);
}

std::string to_string(const Cocharacter& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(l[i]);
    }
    return s + ")";
}

bool is_dominant(const Weight& chi) {
    const DimVector& d = chi.dims();
    for (std::size_t v = 0; v < d.vertices(); ++v) {
        const int off = slot_offset(d, v);
        for (int j = 1; j < d[v]; ++j) {
            if (chi[off + j - 1] < chi[off + j]) return false;
        }
    }
    return true;
}

namespace {

struct BoxEnumerator {
    const DimVector& d;
    std::int64_t lo;
    std::int64_t hi;
    std::vector<std::int64_t> cur;
    std::vector<Weight> out;

    int slots_after(std::size_t vertex, int pos) const {
        int n = d[vertex] - pos - 1;
        for (std::size_t v = vertex + 1; v < d.vertices(); ++v) n += d[v];
        return n;
    }

    // Coordinates are non-increasing inside a block; `upper` caps the next one.
    void run(std::size_t vertex, int pos, std::int64_t upper, std::int64_t remaining) {
        if (vertex == d.vertices()) {
            if (remaining == 0) out.push_back(Weight::from_integers(d, cur));
            return;
        }
        if (pos == d[vertex]) {
            run(vertex + 1, 0, hi, remaining);
            return;
        }
        const std::int64_t after = slots_after(vertex, pos);
        for (std::int64_t x = lo; x <= upper; ++x) {
            const std::int64_t rest = remaining - x;
            if (rest < after * lo) break;
            if (rest > after * hi) continue;
            cur.push_back(x);
            run(vertex, pos + 1, x, rest);
            cur.pop_back();
        }
    }
};

}  // namespace

std::vector<Weight> dominant_in_box(const DimVector& d, std::int64_t w, std::int64_t lo, std::int64_t hi) {
    BoxEnumerator e{d, lo, hi, {}, {}};
    if (lo <= hi) e.run(0, 0, hi, w);
    std::sort(e.out.begin(), e.out.end());
    return e.out;
}

// ---------------------------------------------------------------- representation weights

namespace {

Weight root(const DimVector& d, int plus_slot, int minus_slot) {
    Weight w(d);
    w[plus_slot] += 1;
    w[minus_slot] -= 1;
    return w;
}

}  // namespace

std::vector<Weight> rep_weights(const Quiver& q, const DimVector& d) {
    q.check_dims(d);
    std::vector<Weight> out;
    for (const Edge& e : q.edges()) {
        const int t0 = slot_offset(d, e.target);
        const int s0 = slot_offset(d, e.source);
        for (int l = 0; l < d[e.target]; ++l) {
            for (int m = 0; m < d[e.source]; ++m) out.push_back(root(d, t0 + l, s0 + m));
        }
    }
    return out;
}

std::vector<Weight> adjoint_weights(const DimVector& d) {
    std::vector<Weight> out;
    for (std::size_t v = 0; v < d.vertices(); ++v) {
        const int off = slot_offset(d, v);
        for (int l = 0; l < d[v]; ++l) {
            for (int m = 0; m < d[v]; ++m) out.push_back(root(d, off + l, off + m));
        }
    }
    return out;
}

std::vector<Weight> cut_weights(const Quiver& q, const DimVector& d) {
    return rep_weights(q.cut_only(), d);
}

Weight rho(const DimVector& d) {
    Weight w(d);
    for (std::size_t v = 0; v < d.vertices(); ++v) {
        const int off = slot_offset(d, v);
        const int n = d[v];
        for (int j = 0; j < n; ++j) w[off + j] = Rational(n - 1 - 2 * j, 2);
    }
    return w;
}

Weight nu(const DimVector& d) {
    Weight w(d);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = 1;
    return w;
}

Weight tau(const DimVector& d) {
    if (d.total() == 0) throw InputError("tau is undefined for the zero dimension vector");
    return Rational(1, d.total()) * nu(d);
}

Rational pair(const Cocharacter& l, const Weight& chi) {
    if (l.size() != chi.size()) {
        throw InputError("pairing of a cocharacter with " + std::to_string(l.size()) + " slots and a weight with " +
                         std::to_string(chi.size()) + " slots");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] != 0) s += chi[i] * l[i];
    }
    return s;
}

Weight n_pos(const Cocharacter& l, const std::vector<Weight>& rep) {
    Weight sum(l.dims());
    for (const Weight& b : rep) {
        if (pair(l, b) > 0) sum += b;
    }
    return sum;
}

Rational n_lambda(const Quiver& q, const DimVector& d, const Cocharacter& l) {
    if (!l.is_special()) throw InputError("n_lambda needs an SG(d) cocharacter (coordinate sum zero)");
    Rational n = 0;
    for (const Weight& b : rep_weights(q, d)) {
        const Rational p = pair(l, b);
        if (p > 0) n += p;
    }
    for (const Weight& a : adjoint_weights(d)) {
        const Rational p = pair(l, a);
        if (p > 0) n -= p;
    }
    return n;
}

// ---------------------------------------------------------------- cocharacter classes

namespace {

void nonzero_subvectors(const DimVector& d, std::size_t v, std::vector<int>& cur, std::vector<DimVector>& out) {
    if (v == d.vertices()) {
        if (std::any_of(cur.begin(), cur.end(), [](int x) { return x > 0; })) out.emplace_back(cur);
        return;
    }
    for (int k = 0; k <= d[v]; ++k) {
        cur[v] = k;
        nonzero_subvectors(d, v + 1, cur, out);
    }
}

void compositions_rec(const DimVector& rest, Composition& cur, std::vector<Composition>& out) {
    if (rest.is_zero()) {
        out.push_back(cur);
        return;
    }
    std::vector<int> scratch(rest.vertices(), 0);
    std::vector<DimVector> firsts;
    nonzero_subvectors(rest, 0, scratch, firsts);
    for (const DimVector& f : firsts) {
        std::vector<int> r(rest.vertices());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = rest[i] - f[i];
        cur.push_back(f);
        compositions_rec(DimVector(std::move(r)), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions(const DimVector& d) {
    std::vector<Composition> out;
    if (d.is_zero()) return out;
    Composition cur;
    compositions_rec(d, cur, out);
    std::stable_sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Cocharacter canonical_cocharacter(const DimVector& d, const Composition& parts) {
    DimVector sum(std::vector<int>(d.vertices(), 0));
    for (const auto& p : parts) sum = sum + p;
    if (sum != d) throw InputError("composition does not sum to " + to_string(d));

    const std::int64_t total = d.total();
    std::int64_t weighted = 0;  // sum_k k * |d_k|
    for (std::size_t k = 0; k < parts.size(); ++k) weighted += static_cast<std::int64_t>(k) * parts[k].total();

    // Level k gets total*k - weighted, i.e. total * (k - mean level).
    std::vector<std::int64_t> coords(d.total());
    for (std::size_t v = 0; v < d.vertices(); ++v) {
        int slot = slot_offset(d, v);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            for (int j = 0; j < parts[k][v]; ++j) coords[slot++] = total * static_cast<std::int64_t>(k) - weighted;
        }
    }
    std::int64_t g = 0;
    for (auto c : coords) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1) {
        for (auto& c : coords) c /= g;
    }
    return Cocharacter(d, std::move(coords));
}

std::vector<Cocharacter> cochar_classes(const DimVector& d) {
    std::vector<Cocharacter> out;
    for (const auto& c : compositions(d)) out.push_back(canonical_cocharacter(d, c));
    return out;
}

std::vector<std::vector<int>> level_slots(const Cocharacter& l) {
    if (!l.is_antidominant()) throw InputError("cocharacter " + to_string(l) + " is not antidominant");
    std::map<std::int64_t, std::vector<int>> levels;
    for (std::size_t i = 0; i < l.size(); ++i) levels[l[i]].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [value, slots] : levels) out.push_back(std::move(slots));
    return out;
}

Composition level_partition(const Cocharacter& l) {
    Composition out;
    for (const auto& slots : level_slots(l)) {
        std::vector<int> dims(l.dims().vertices(), 0);
        for (int s : slots) ++dims[vertex_of_slot(l.dims(), s)];
        out.emplace_back(std::move(dims));
    }
    return out;
}

bool equivalent(const Cocharacter& a, const Cocharacter& b) {
    if (a.dims() != b.dims()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if ((a[i] < a[j]) != (b[i] < b[j])) return false;
        }
    }
    return true;
}

Weight restrict_to(const Weight& chi, const std::vector<int>& slots, const DimVector& dims) {
    std::vector<Rational> coords;
    coords.reserve(slots.size());
    for (int s : slots) coords.push_back(chi[s]);
    return Weight(dims, std::move(coords));
}

Weight embed(const Weight& part, const std::vector<int>& slots, const DimVector& dims) {
    Weight out(dims);
    for (std::size_t i = 0; i < slots.size(); ++i) out[slots[i]] = part[i];
    return out;
}

std::vector<Weight> block_decompose(const Weight& chi, const Cocharacter& l) {
    if (chi.size() != l.size()) throw InputError("block_decompose: slot-count mismatch");
    const auto slots = level_slots(l);
    const auto parts = level_partition(l);
    std::vector<Weight> out;
    for (std::size_t k = 0; k < slots.size(); ++k) out.push_back(restrict_to(chi, slots[k], parts[k]));
    return out;
}

}  // namespace hallsod

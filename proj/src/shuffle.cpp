#include "hallsod/shuffle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>

namespace hallsod {

std::vector<std::string> KernelParams::param_names() const {
    if (mode == KernelMode::formal) return {"D", "K"};
    return {"q1", "q2"};
}

KernelMode parse_mode(std::string_view name) {
    if (name == "formal") return KernelMode::formal;
    if (name == "a2") return KernelMode::a2;
    if (name == "trivial") return KernelMode::trivial;
    throw InputError("unknown kernel mode '" + std::string(name) + "' (formal, a2, trivial)");
}

std::string to_string(KernelMode m) {
    switch (m) {
        case KernelMode::formal: return "formal";
        case KernelMode::a2: return "a2";
        case KernelMode::trivial: return "trivial";
    }
    return "?";
}

namespace {

std::vector<std::string> variable_names(const KernelParams& k, int degree) {
    auto names = k.param_names();
    for (int i = 1; i <= degree; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

std::string mu_string(const Binomial& b, const KernelParams& k) {
    const auto names = k.param_names();
    std::string s;
    auto power = [&](const std::string& n, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += n;
        if (e > 1) s += "^" + std::to_string(e);
    };
    power(names[0], b.a);
    power(names[1], b.b);
    return s;
}

// Moves the sign of z_j - z_i with i > j into the coefficient.
void normalize(Term& t, int nvars) {
    for (Binomial& b : t.den) {
        if (b.a == 0 && b.b == 0 && b.i > b.j) {
            std::swap(b.i, b.j);
            t.coeff = -t.coeff;
        }
    }
    if (std::any_of(t.factors.begin(), t.factors.end(), [](const Poly& f) { return f.is_zero(); })) {
        t.coeff = 0;
        t.factors.clear();
        t.den.clear();
        return;
    }
    std::vector<Poly> kept;
    for (Poly& f : t.factors) {
        if (f.total_degree() == 0) {
            t.coeff *= f.terms().begin()->second;
            continue;
        }
        auto it = std::find_if(t.den.begin(), t.den.end(), [&](const Binomial& b) { return binomial_poly(b, nvars) == f; });
        if (it != t.den.end()) {
            t.den.erase(it);
            continue;
        }
        kept.push_back(std::move(f));
    }
    t.factors = std::move(kept);
    std::sort(t.den.begin(), t.den.end());
}

}  // namespace

Poly binomial_poly(const Binomial& b, int nvars) {
    Poly p = Poly::variable(nvars, 2 + b.j);
    Poly::Exponents e(nvars, 0);
    e[0] = b.a;
    e[1] = b.b;
    e[2 + b.i] += 1;
    Poly m(nvars);
    m.add_term(e, 1);
    return p - m;
}

std::string to_string(const Binomial& b, const KernelParams& k) {
    const std::string mu = mu_string(b, k);
    return "(z" + std::to_string(b.j + 1) + " - " + (mu.empty() ? "" : mu + "*") + "z" + std::to_string(b.i + 1) + ")";
}

// ---------------------------------------------------------------- elements

ShuffleElement::ShuffleElement(int degree, Poly p) : degree_(degree) {
    if (degree < 0) throw InputError("negative degree");
    if (p.nvars() != 2 + degree) throw InputError("polynomial ring does not match the degree");
    add(Term{1, {std::move(p)}, {}});
}

ShuffleElement ShuffleElement::unit() {
    return one(0);
}

ShuffleElement ShuffleElement::one(int degree) {
    return ShuffleElement(degree, Poly::constant(2 + degree, 1));
}

void ShuffleElement::add(Term t) {
    normalize(t, nvars());
    if (t.coeff != 0) terms_.push_back(std::move(t));
}

Rational ShuffleElement::eval(const std::vector<Rational>& z, const std::vector<Rational>& params) const {
    if (static_cast<int>(z.size()) != degree_) {
        throw InputError("element of degree " + std::to_string(degree_) + " evaluated at " + std::to_string(z.size()) +
                         " points");
    }
    if (params.size() != 2) throw InputError("two kernel parameter values are required");
    std::vector<Rational> point(params);
    point.insert(point.end(), z.begin(), z.end());
    Rational sum = 0;
    for (const Term& t : terms_) {
        Rational den = 1;
        for (const Binomial& b : t.den) {
            const Rational v = binomial_poly(b, nvars()).eval(point);
            if (v == 0) {
                throw PoleError("pole: denominator factor " + to_string(b, KernelParams{}) + " vanishes");
            }
            den *= v;
        }
        Rational num = t.coeff;
        for (const Poly& f : t.factors) num *= f.eval(point);
        sum += num / den;
    }
    return sum;
}

ShuffleElement ShuffleElement::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != degree_) throw InputError("permutation size mismatch");
    std::vector<int> map{0, 1};
    for (int k = 0; k < degree_; ++k) map.push_back(2 + perm[k]);
    ShuffleElement out;
    out.degree_ = degree_;
    for (const Term& t : terms_) {
        Term u;
        u.coeff = t.coeff;
        for (const Poly& f : t.factors) u.factors.push_back(f.renamed(map, nvars()));
        for (Binomial b : t.den) {
            b.i = perm[b.i];
            b.j = perm[b.j];
            u.den.push_back(b);
        }
        out.add(std::move(u));
    }
    return out;
}

ShuffleElement ShuffleElement::negated() const {
    ShuffleElement out = *this;
    for (Term& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

ShuffleElement::Fraction ShuffleElement::combined() const {
    std::map<Binomial, int> lcm;
    for (const Term& t : terms_) {
        std::map<Binomial, int> count;
        for (const Binomial& b : t.den) ++count[b];
        for (const auto& [b, c] : count) lcm[b] = std::max(lcm[b], c);
    }
    Fraction fr{Poly(nvars()), {}};
    for (const auto& [b, c] : lcm) fr.denominator.insert(fr.denominator.end(), c, b);
    for (const Term& t : terms_) {
        std::map<Binomial, int> count;
        for (const Binomial& b : t.den) ++count[b];
        Poly p = Poly::constant(nvars(), t.coeff);
        for (const Poly& f : t.factors) p = p * f;
        for (const auto& [b, c] : lcm) {
            const int missing = c - (count.count(b) ? count[b] : 0);
            if (missing > 0) p = p * binomial_poly(b, nvars()).pow(missing);
        }
        fr.numerator += p;
    }
    return fr;
}

// ---------------------------------------------------------------- zeta

ZetaFraction zeta_fraction(const KernelParams& k) {
    const Poly one = Poly::constant(3, 1);
    const Poly p0 = Poly::variable(3, 0);
    const Poly p1 = Poly::variable(3, 1);
    const Poly x = Poly::variable(3, 2);
    switch (k.mode) {
        case KernelMode::formal: {
            const Poly den = (one - x) * (one - p1 * x);
            return {den + p0 * x, den};
        }
        case KernelMode::a2:
            return {(one - p0 * x) * (one - p1 * x), (one - x) * (one - p0 * p1 * x)};
        case KernelMode::trivial:
            return {one, one};
    }
    return {one, one};
}

Rational zeta(const Rational& x, const std::vector<Rational>& params, const KernelParams& k) {
    if (params.size() != 2) throw InputError("two kernel parameter values are required");
    const ZetaFraction z = zeta_fraction(k);
    const std::vector<Rational> point{params[0], params[1], x};
    const Rational den = z.denominator.eval(point);
    if (den == 0) throw PoleError("pole: zeta has a pole at x = " + to_string(x));
    return z.numerator.eval(point) / den;
}

bool kernel_identity_holds() {
    const ZetaFraction formal = zeta_fraction({KernelMode::formal});
    const ZetaFraction a2 = zeta_fraction({KernelMode::a2});
    const Poly one = Poly::constant(3, 1);
    const Poly q1 = Poly::variable(3, 0);
    const Poly q2 = Poly::variable(3, 1);
    const std::vector<Poly> images{(one - q1) * (one - q2), q1 * q2, Poly::variable(3, 2)};
    const Poly fn = formal.numerator.compose(images);
    const Poly fd = formal.denominator.compose(images);
    return (fn * a2.denominator - a2.numerator * fd).is_zero();
}

// ---------------------------------------------------------------- product

namespace {

struct ZetaFactors {
    std::vector<Poly> factors;
    std::vector<Binomial> den;
};

// zeta(z_i / z_j), numerator and denominator multiplied by z_j^2.
ZetaFactors zeta_factors(int i, int j, int nvars, KernelMode mode) {
    const Poly zi = Poly::variable(nvars, 2 + i);
    const Poly zj = Poly::variable(nvars, 2 + j);
    const Poly p0 = Poly::variable(nvars, 0);
    const Poly p1 = Poly::variable(nvars, 1);
    switch (mode) {
        case KernelMode::a2:
            return {{zj - p0 * zi, zj - p1 * zi}, {{i, j, 0, 0}, {i, j, 1, 1}}};
        case KernelMode::formal:
            return {{(zj - zi) * (zj - p1 * zi) + p0 * zi * zj}, {{i, j, 0, 0}, {i, j, 0, 1}}};
        case KernelMode::trivial:
            return {};
    }
    return {};
}

void lift(const Term& t, const std::vector<int>& slots, int nvars, Term& into) {
    std::vector<int> map{0, 1};
    for (int s : slots) map.push_back(2 + s);
    into.coeff *= t.coeff;
    for (const Poly& f : t.factors) into.factors.push_back(f.renamed(map, nvars));
    for (Binomial b : t.den) {
        b.i = slots[b.i];
        b.j = slots[b.j];
        into.den.push_back(b);
    }
}

}  // namespace

ShuffleElement mul(const ShuffleElement& f, const ShuffleElement& g, const KernelParams& k) {
    const int n = f.degree();
    const int m = g.degree();
    const int N = n + m;
    const int nv = 2 + N;
    ShuffleElement out(N, Poly(nv));

    std::vector<bool> pick(N, false);
    std::fill(pick.begin(), pick.begin() + n, true);
    // prev_permutation on a sorted-descending mask walks subsets in lexicographic order
    do {
        std::vector<int> P, Q;
        for (int s = 0; s < N; ++s) (pick[s] ? P : Q).push_back(s);
        Term kernel;
        for (int i : P) {
            for (int j : Q) {
                ZetaFactors z = zeta_factors(i, j, nv, k.mode);
                for (Poly& p : z.factors) kernel.factors.push_back(std::move(p));
                kernel.den.insert(kernel.den.end(), z.den.begin(), z.den.end());
            }
        }
        for (const Term& tf : f.terms()) {
            for (const Term& tg : g.terms()) {
                Term t = kernel;
                lift(tf, P, nv, t);
                lift(tg, Q, nv, t);
                out.add(std::move(t));
            }
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

// ---------------------------------------------------------------- equality

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 9);
    int a = 0;
    while (a == 0) a = num(rng);
    return Rational(a, den(rng));
}

}  // namespace

bool equals(const ShuffleElement& f, const ShuffleElement& g, const EqualityOptions& opts) {
    if (f.degree() != g.degree()) return false;
    if (opts.strategy == Strategy::exact) {
        ShuffleElement diff = f;
        const ShuffleElement neg = g.negated();
        for (const Term& t : neg.terms()) diff.add(t);
        return diff.combined().numerator.is_zero();
    }
    std::mt19937_64 rng(opts.seed);
    constexpr int kMaxAttempts = 1000;
    int attempts = 0;
    for (int pt = 0; pt < opts.points;) {
        if (++attempts > kMaxAttempts) throw Error("could not find evaluation points away from the poles");
        std::vector<Rational> params{random_rational(rng), random_rational(rng)};
        std::vector<Rational> z;
        for (int i = 0; i < f.degree(); ++i) z.push_back(random_rational(rng));
        Rational a, b;
        try {
            a = f.eval(z, params);
            b = g.eval(z, params);
        } catch (const PoleError&) {
            continue;
        }
        if (a != b) return false;
        ++pt;
    }
    return true;
}

bool is_symmetric(const ShuffleElement& f, const EqualityOptions& opts) {
    for (int k = 0; k + 1 < f.degree(); ++k) {
        std::vector<int> perm(f.degree());
        for (int i = 0; i < f.degree(); ++i) perm[i] = i;
        std::swap(perm[k], perm[k + 1]);
        if (!equals(f, f.permuted(perm), opts)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, const KernelParams& k, int nvars) : s_(text), k_(k), nvars_(nvars) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

    // Largest z index mentioned.
    static int max_z(std::string_view s) {
        int best = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != 'z' || (i > 0 && std::isalnum(static_cast<unsigned char>(s[i - 1])))) continue;
            std::size_t j = i + 1;
            int v = 0;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) v = v * 10 + (s[j++] - '0');
            best = std::max(best, v);
        }
        return best;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("expression: " + msg + " at position " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly p = term();
        while (true) {
            if (eat('+')) {
                p += term();
            } else if (eat('-')) {
                p -= term();
            } else {
                return p;
            }
        }
    }

    Poly term() {
        Poly p = unary();
        while (true) {
            if (eat('*')) {
                p = p * unary();
            } else if (eat('/')) {
                const Poly d = unary();
                if (d.total_degree() != 0 || d.is_zero()) fail("division only by nonzero constants");
                p *= 1 / d.terms().begin()->second;
            } else {
                return p;
            }
        }
    }

    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a nonnegative integer");
            const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            if (e > 64) fail("exponent too large");
            return base.pow(e);
        }
        return base;
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat('(')) {
            Poly p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly::constant(nvars_, Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            const auto params = k_.param_names();
            if (name == params[0]) return Poly::variable(nvars_, 0);
            if (name == params[1]) return Poly::variable(nvars_, 1);
            if (name.size() > 1 && name[0] == 'z' &&
                std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                const int idx = std::stoi(name.substr(1));
                if (idx < 1 || idx > nvars_ - 2) fail("variable " + name + " out of range");
                return Poly::variable(nvars_, 1 + idx);
            }
            fail("unknown identifier '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const KernelParams& k_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

ShuffleElement parse_element(std::string_view text, const KernelParams& k) {
    std::size_t p = 0;
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    int degree = Parser::max_z(text);
    if (p < text.size() && text[p] == '[') {
        const auto close = text.find(']', p);
        if (close == std::string_view::npos) throw InputError("expression: missing ']' in degree prefix");
        const Rational d = parse_rational(text.substr(p + 1, close - p - 1));
        const auto n = to_int64(d);
        if (n < 0 || n > 12) throw InputError("expression: degree must lie in 0..12");
        if (n < degree) throw InputError("expression: degree prefix is smaller than the largest z index");
        degree = static_cast<int>(n);
        text = text.substr(close + 1);
    }
    Parser parser(text, k, 2 + degree);
    Poly poly = parser.parse();
    for (int i = 0; i + 1 < degree; ++i) {
        std::vector<int> map(2 + degree);
        for (int v = 0; v < 2 + degree; ++v) map[v] = v;
        std::swap(map[2 + i], map[3 + i]);
        if (poly.renamed(map, 2 + degree) != poly) {
            throw InputError("expression is not symmetric in z1..z" + std::to_string(degree));
        }
    }
    return ShuffleElement(degree, std::move(poly));
}

std::string numerator_string(const ShuffleElement& f, const KernelParams& k) {
    return f.combined().numerator.to_string(variable_names(k, f.degree()));
}

std::string denominator_string(const ShuffleElement& f, const KernelParams& k) {
    const auto fr = f.combined();
    if (fr.denominator.empty()) return "1";
    std::string s;
    for (const Binomial& b : fr.denominator) {
        if (!s.empty()) s += "*";
        s += to_string(b, k);
    }
    return s;
}

}  // namespace hallsod

#pragma once

// Shuffle algebra of the plane: symmetric rational functions in z_1..z_n
// with the zeta-kernel symmetrized product.
//
// Every polynomial lives in the ring Q[p0, p1, z_1, ..., z_n]. The two
// kernel parameters are (D, K) in formal mode and (q1, q2) in a2 mode,
// where D = (1 - q1)(1 - q2) and K = q1 q2.

#include "hallsod/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hallsod {

enum class KernelMode { formal, a2, trivial };

struct KernelParams {
    KernelMode mode = KernelMode::a2;
    std::vector<std::string> param_names() const;  // {"D","K"} or {"q1","q2"}
};

KernelMode parse_mode(std::string_view name);
std::string to_string(KernelMode m);

/// Raised when an evaluation hits a vanishing denominator factor.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error(what) {}
};

/// z_j - mu z_i with mu = p0^a p1^b. With mu = 1 the indices satisfy i < j.
struct Binomial {
    int i = 0;
    int j = 0;
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Binomial&, const Binomial&) = default;
    friend bool operator==(const Binomial&, const Binomial&) = default;
};

struct Term {
    Rational coeff = 1;
    std::vector<Poly> factors;   // numerator, kept factored
    std::vector<Binomial> den;   // sorted
};

class ShuffleElement {
public:
    ShuffleElement() = default;
    /// A polynomial in the ring with 2 + n variables.
    ShuffleElement(int degree, Poly p);
    static ShuffleElement unit();
    /// The constant 1 in degree n.
    static ShuffleElement one(int degree);

    int degree() const { return degree_; }
    int nvars() const { return 2 + degree_; }
    const std::vector<Term>& terms() const { return terms_; }
    void add(Term t);

    /// Values at z (size n) and parameters (size 2). Throws PoleError.
    Rational eval(const std::vector<Rational>& z, const std::vector<Rational>& params) const;

    /// Relabels z_k as z_perm[k].
    ShuffleElement permuted(const std::vector<int>& perm) const;
    ShuffleElement negated() const;

    /// Sum over terms over the lcm of their denominators.
    struct Fraction {
        Poly numerator;
        std::vector<Binomial> denominator;
    };
    Fraction combined() const;

private:
    int degree_ = 0;
    std::vector<Term> terms_;
};

Poly binomial_poly(const Binomial& b, int nvars);
std::string to_string(const Binomial& b, const KernelParams& k);

/// zeta as a quotient of polynomials in Q[p0, p1, x].
struct ZetaFraction {
    Poly numerator;
    Poly denominator;
};
ZetaFraction zeta_fraction(const KernelParams& k);
/// Value at x with the given parameter values. Throws PoleError.
Rational zeta(const Rational& x, const std::vector<Rational>& params, const KernelParams& k);
/// The formal kernel with D = (1-q1)(1-q2), K = q1 q2 equals the a2 kernel,
/// checked by polynomial cross-multiplication.
bool kernel_identity_holds();

/// Sum over subsets P of size deg f of f(z_P) g(z_Q) prod_{i in P, j in Q} zeta(z_i / z_j).
ShuffleElement mul(const ShuffleElement& f, const ShuffleElement& g, const KernelParams& k);

enum class Strategy { exact, probabilistic };

struct EqualityOptions {
    Strategy strategy = Strategy::exact;
    int points = 5;
    std::uint64_t seed = 1;
};

bool equals(const ShuffleElement& f, const ShuffleElement& g, const EqualityOptions& opts = {});

/// Invariance under the adjacent transpositions.
bool is_symmetric(const ShuffleElement& f, const EqualityOptions& opts = {});

/// Polynomial expression in z1..zn, the mode's parameter names, integers,
/// + - * / ^ and parentheses; an optional "[n]" prefix fixes the degree.
/// Throws InputError on syntax errors or non-symmetric input.
ShuffleElement parse_element(std::string_view text, const KernelParams& k);

/// Canonical text: expanded numerator over the product of denominator factors.
std::string numerator_string(const ShuffleElement& f, const KernelParams& k);
std::string denominator_string(const ShuffleElement& f, const KernelParams& k);

}  // namespace hallsod

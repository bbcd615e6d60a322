#pragma once

#include "hallsod/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hallsod {

/// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
public:
    using Exponents = std::vector<int>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    /// Highest power of `index` occurring.
    int degree_in(int index) const;

    void add_term(const Exponents& e, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly pow(int k) const;
    Rational eval(const std::vector<Rational>& point) const;

    /// Variable i becomes variable map[i] in a ring with `nvars` variables.
    Poly renamed(const std::vector<int>& map, int nvars) const;
    /// Substitutes images[i] (all in one common ring) for variable i.
    Poly compose(const std::vector<Poly>& images) const;

    /// Terms by decreasing total degree, then decreasing exponent vector.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

}  // namespace hallsod

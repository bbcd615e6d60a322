#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hallsod {

/// Exact rational backed by GMP. Expression templates are off so `auto`
/// always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Bad user input: malformed weights, unknown quivers, violated preconditions. */
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/** Internal consistency failure (a guaranteed object could not be found). */
class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& what) : Error(what) {}
};

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws InputError on anything else.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// Throws InputError if `q` is not an integer or does not fit in 64 bits.
std::int64_t to_int64(const Rational& q);

Rational floor_of(const Rational& q);
Rational ceil_of(const Rational& q);

}  // namespace hallsod

#include "hallsod/rational.hpp"

#include <cctype>
#include <limits>

namespace hallsod {

std::string to_string(const Rational& q) {
    return q.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw InputError("malformed rational '" + std::string(whole) + "'");
    }
    const Integer value{std::string(s)};
    return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s, text));
    }
    const Integer num = parse_integer(s.substr(0, slash), text);
    const std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    const Integer den = parse_integer(den_text, text);
    if (den == 0) {
        throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) {
        throw InputError("expected an integer, got " + to_string(q));
    }
    const Integer n = boost::multiprecision::numerator(q);
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
        throw InputError("integer out of range: " + to_string(q));
    }
    return n.convert_to<std::int64_t>();
}

Rational floor_of(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    Integer f = num / den;  // truncates toward zero
    if (num < 0 && f * den != num) f -= 1;
    return Rational(f);
}

Rational ceil_of(const Rational& q) {
    return -floor_of(-q);
}

}  // namespace hallsod

#pragma once

// Exact rational linear programming: two-phase dense tableau simplex with
// Bland's anti-cycling rule.

#include "hallsod/rational.hpp"

#include <vector>

namespace hallsod::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Rational value;              // optimal objective when status == optimal
    std::vector<Rational> x;     // an optimal vertex
};

/// minimize c.x subject to A x = b, x >= 0.
Result minimize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                const std::vector<Rational>& c);

}  // namespace hallsod::lp

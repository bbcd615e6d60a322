#include "hallsod/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace hallsod::lp {

namespace {

class Tableau {
public:
    Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b, std::size_t n)
        : n_(n), m_(A.size()), cols_(n + A.size() + 1), rows_(A.size()), basis_(A.size()) {
        for (std::size_t i = 0; i < m_; ++i) {
            if (A[i].size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
            auto& row = rows_[i];
            row.assign(cols_, Rational(0));
            const bool flip = b[i] < 0;
            for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rational(-A[i][j]) : A[i][j];
            row[n + i] = 1;
            row[cols_ - 1] = flip ? Rational(-b[i]) : b[i];
            basis_[i] = n + i;
        }
    }

    // Phase 1 drives the artificials to zero. Returns false when infeasible.
    bool phase_one() {
        std::vector<Rational> cost(cols_ - 1, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) cost[n_ + i] = 1;
        set_objective(cost);
        run(cols_ - 1);
        if (obj_[cols_ - 1] != 0) return false;  // -(sum of artificials)
        purge_artificials();
        return true;
    }

    // Phase 2 over the structural columns. Returns false when unbounded.
    bool phase_two(const std::vector<Rational>& c) {
        std::vector<Rational> cost(cols_ - 1, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
        set_objective(cost);
        return run(n_);
    }

    Rational value() const { return -obj_[cols_ - 1]; }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < n_) x[basis_[i]] = rows_[i][cols_ - 1];
        }
        return x;
    }

private:
    void set_objective(const std::vector<Rational>& cost) {
        obj_.assign(cols_, Rational(0));
        for (std::size_t j = 0; j + 1 < cols_; ++j) obj_[j] = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (rows_[i][j] != 0) obj_[j] -= cb * rows_[i][j];
            }
        }
    }

    void pivot(std::size_t r, std::size_t col) {
        auto& prow = rows_[r];
        const Rational inv = 1 / prow[col];
        for (auto& v : prow) {
            if (v != 0) v *= inv;
        }
        auto eliminate = [&](std::vector<Rational>& row) {
            const Rational f = row[col];
            if (f == 0) return;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (prow[j] != 0) row[j] -= f * prow[j];
            }
        };
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != r) eliminate(rows_[i]);
        }
        eliminate(obj_);
        basis_[r] = col;
    }

    // Bland's rule; entering candidates restricted to columns < limit.
    bool run(std::size_t limit) {
        while (true) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (obj_[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == limit) return true;
            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& a = rows_[i][enter];
                if (a <= 0) continue;
                const Rational ratio = rows_[i][cols_ - 1] / a;
                if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    // Pivot zero-level artificials out of the basis; drop redundant rows.
    void purge_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col < n_) {
                pivot(i, col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    std::size_t n_;
    std::size_t m_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> obj_;
};

}  // namespace

Result minimize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                const std::vector<Rational>& c) {
    if (A.size() != b.size()) throw std::invalid_argument("lp: row count mismatch");
    Tableau t(A, b, c.size());
    Result res;
    if (!t.phase_one()) {
        res.status = Status::infeasible;
        return res;
    }
    if (!t.phase_two(c)) {
        res.status = Status::unbounded;
        return res;
    }
    res.status = Status::optimal;
    res.value = t.value();
    res.x = t.solution();
    return res;
}

}  // namespace hallsod::lp

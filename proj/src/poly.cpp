#include "hallsod/poly.hpp"

#include <algorithm>
#include <numeric>

namespace hallsod {

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int index, int power) {
    Poly p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = power;
    p.add_term(e, 1);
    return p;
}

int Poly::total_degree() const {
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

int Poly::degree_in(int index) const {
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e[index]);
    return best;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw InputError("polynomials over different variable sets");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_) throw InputError("polynomials over different variable sets");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw InputError("polynomials over different variable sets");
    Poly out(a.nvars_);
    Poly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw InputError("negative polynomial power");
    Poly out = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw InputError("evaluation point has the wrong number of variables");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        }
        sum += t;
    }
    return sum;
}

Poly Poly::renamed(const std::vector<int>& map, int nvars) const {
    Poly out(nvars);
    for (const auto& [e, c] : terms_) {
        Exponents f(nvars, 0);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] != 0) f.at(map.at(i)) += e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw InputError("compose needs one image per variable");
    const int target = images.empty() ? 0 : images.front().nvars();
    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Poly t = constant(target, c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] != 0) t = t * images[i].pow(e[i]);
        }
        out += t;
    }
    return out;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string s;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            s += hallsod::to_string(mag);
        } else if (mag == 1) {
            s += mono;
        } else {
            s += hallsod::to_string(mag) + "*" + mono;
        }
    }
    return s;
}

}  // namespace hallsod

#include "scx/bipoly.hpp"

#include <stdexcept>

namespace scx {

BiPoly::BiPoly(int degree_cap) : cap_(degree_cap) {
    if (degree_cap < 0) throw std::invalid_argument("BiPoly: negative degree cap");
}

BiPoly BiPoly::monomial(int m, int n, const Rational& c, int degree_cap) {
    BiPoly p(degree_cap);
    p.add_term(m, n, c);
    return p;
}

Rational BiPoly::coeff(int m, int n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(int m, int n, const Rational& c) {
    if (m < 0 || n < 0) throw std::invalid_argument("BiPoly: negative exponent");
    if (m + n > cap_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({m, n}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void BiPoly::require_same_cap(const BiPoly& o) const {
    if (cap_ != o.cap_) throw std::invalid_argument("BiPoly: degree cap mismatch");
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    require_same_cap(o);
    for (const auto& [mn, c] : o.terms_) add_term(mn.first, mn.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    require_same_cap(o);
    for (const auto& [mn, c] : o.terms_) add_term(mn.first, mn.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    a.require_same_cap(b);
    BiPoly out(a.cap_);
    for (const auto& [mn, c] : a.terms_)
        for (const auto& [mn2, c2] : b.terms_)
            out.add_term(mn.first + mn2.first, mn.second + mn2.second, c * c2);
    return out;
}

Rational BiPoly::evaluate(const Rational& z, const Rational& w) const {
    Rational acc(0);
    for (const auto& [mn, c] : terms_)
        acc += c * z.pow(static_cast<unsigned>(mn.first)) * w.pow(static_cast<unsigned>(mn.second));
    return acc;
}

}  // namespace scx

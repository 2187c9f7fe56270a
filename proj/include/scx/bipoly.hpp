#pragma once

#include "scx/rational.hpp"

#include <map>
#include <utility>

namespace scx {

/// Bivariate polynomial over Q truncated at a fixed total degree: every stored
/// term z^m w^n satisfies m + n <= degree_cap, and products silently discard
/// anything beyond the cap (the algebra is the quotient by degree > cap).
/// Zero coefficients are never stored.
class BiPoly {
public:
    using Exponents = std::pair<int, int>;  // (m, n) = (z-exponent, w-exponent)

    explicit BiPoly(int degree_cap);
    static BiPoly monomial(int m, int n, const Rational& c, int degree_cap);

    int degree_cap() const { return cap_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coeff(int m, int n) const;
    bool is_zero() const { return terms_.empty(); }

    /// Accumulates c * z^m w^n; terms beyond the cap are dropped.
    void add_term(int m, int n, const Rational& c);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

    Rational evaluate(const Rational& z, const Rational& w) const;

    bool operator==(const BiPoly& o) const { return cap_ == o.cap_ && terms_ == o.terms_; }

private:
    void require_same_cap(const BiPoly& o) const;

    int cap_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace scx

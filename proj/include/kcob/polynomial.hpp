#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kcob/integer.hpp"

namespace kcob {

/// Univariate polynomial in t with exact rational coefficients, stored
/// lowest degree first with no trailing zeros (the zero polynomial is empty).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<long> coeffs);
    explicit RatPoly(const Rational& constant);

    static RatPoly monomial(const Rational& c, std::size_t degree);
    /// t - root
    static RatPoly linear(const Rational& root);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    RatPoly monic() const;
    RatPoly derivative() const;
    Rational evaluate(const Rational& x) const;

    /// Primitive integer polynomial with positive leading coefficient that is a
    /// rational multiple of this one.
    std::vector<Integer> primitive_integer_coeffs() const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const Rational& s);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
    friend RatPoly operator-(RatPoly a) { return a *= Rational(-1); }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }
    /// Total order: by degree, then coefficients from the top down.
    friend bool operator<(const RatPoly& a, const RatPoly& b);

    /// Human-readable, e.g. "t^2 - 5/2*t + 1".
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
bool divides(const RatPoly& d, const RatPoly& a);
/// Monic gcd (zero if both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);
RatPoly pow(const RatPoly& p, unsigned k);

}  // namespace kcob

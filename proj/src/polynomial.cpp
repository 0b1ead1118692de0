#include "kcob/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kcob {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

RatPoly::RatPoly(const Rational& constant) {
    if (sgn(constant) != 0) coeffs_.push_back(constant);
}

RatPoly RatPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::linear(const Rational& root) { return RatPoly(std::vector<Rational>{-root, Rational(1)}); }

void RatPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    RatPoly r = *this;
    Rational inv = 1 / leading();
    r *= inv;
    return r;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return RatPoly(std::move(d));
}

Rational RatPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Integer> RatPoly::primitive_integer_coeffs() const {
    if (is_zero()) return {};
    Integer den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    Integer content = 0;
    for (const auto& c : coeffs_) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        content = gcd(content, v);
        out.push_back(v);
    }
    if (sgn(out.back()) < 0) content = -content;
    for (auto& v : out) v /= content;
    return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(r);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

bool operator<(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
        if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
    }
    return false;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quot(rem.size() - b.coeffs().size() + 1);
    const Rational lead_inv = 1 / b.leading();
    const std::size_t db = b.coeffs().size() - 1;
    for (std::size_t k = rem.size(); k-- > db;) {
        if (sgn(rem[k]) == 0) continue;
        Rational q = rem[k] * lead_inv;
        quot[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
    }
    rem.resize(db);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

bool divides(const RatPoly& d, const RatPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).second.is_zero();
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatPoly pow(const RatPoly& p, unsigned k) {
    RatPoly r(Rational(1));
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

}  // namespace kcob

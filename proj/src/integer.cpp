#include "kcob/integer.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace kcob {

Integer parse_integer(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    if (pos == text.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        }
    }
    std::string digits(text);
    if (digits.front() == '+') digits.erase(0, 1);
    return Integer(digits, 10);
}

std::int64_t to_int64(const Integer& value) {
    static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    if (value < lo || value > hi) {
        throw std::out_of_range("integer " + value.get_str() + " does not fit in 64 bits");
    }
    return std::stoll(value.get_str());
}

std::uint64_t to_uint64(const Integer& value) {
    static const Integer hi(std::to_string(std::numeric_limits<std::uint64_t>::max()));
    if (sgn(value) < 0 || value > hi) {
        throw std::out_of_range("integer " + value.get_str() + " is not a 64-bit unsigned value");
    }
    return std::stoull(value.get_str());
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Integer ceil_div(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) throw std::domain_error("division by zero");
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) throw std::domain_error("division by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::uint64_t n) { return is_prime(Integer(std::to_string(n))); }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace kcob

#include "kcob/factor.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace kcob {

namespace {

using IntPoly = std::vector<Integer>;  // lowest degree first

Integer eval(const IntPoly& p, const Integer& x) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly to_rat(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& v : p) c.emplace_back(v);
    return RatPoly(std::move(c));
}

// Prime factorization by trial division up to 10^6 plus a primality test on
// what remains. Returns false if a composite cofactor survives.
bool factor_integer(Integer n, std::vector<std::pair<Integer, unsigned>>& out) {
    out.clear();
    n = abs(n);
    for (unsigned long q = 2; q <= 1000000 && Integer(q) * q <= n; q += (q == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
            ++e;
        }
        if (e) out.emplace_back(Integer(q), e);
    }
    if (n == 1) return true;
    if (Integer(1000000) * 1000000 >= n || is_prime(n)) {
        out.emplace_back(n, 1);
        return true;
    }
    return false;
}

std::optional<std::vector<Integer>> try_positive_divisors(const Integer& n) {
    if (sgn(n) == 0) throw std::logic_error("positive_divisors: zero has no finite divisor set");
    std::vector<std::pair<Integer, unsigned>> primes;
    if (!factor_integer(n, primes)) return std::nullopt;
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [q, e] : primes) {
        const std::size_t base = divs.size();
        Integer power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= q;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    auto d = try_positive_divisors(n);
    if (!d) throw std::domain_error("factor_rational_poly: coefficient " + n.get_str() + " is too large to factor");
    return *d;
}

// Rational roots of a primitive integer polynomial with nonzero constant term.
std::vector<Rational> rational_roots(const IntPoly& p) {
    std::vector<Rational> roots;
    const auto nums = positive_divisors(p.front());
    const auto dens = positive_divisors(p.back());
    for (const auto& q : dens)
        for (const auto& a : nums) {
            if (gcd(a, q) != 1) continue;
            for (int s : {1, -1}) {
                Rational r(a * s, q);
                r.canonicalize();
                if (sgn(to_rat(p).evaluate(r)) == 0) roots.push_back(r);
            }
        }
    return roots;
}

Integer norm2_ceil(const IntPoly& p) {
    Integer sum = 0;
    for (const auto& c : p) sum += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), sum.get_mpz_t());
    if (root * root < sum) root += 1;
    return root;
}

// Searches for an integer factor of exact degree d of the primitive, squarefree
// polynomial p that has no rational roots. Returns an empty vector if none.
//
// Values g(x_i) must divide p(x_i). An integer polynomial has integral divided
// differences at integer nodes, so the search runs depth-first over the Newton
// coefficients and prunes any branch that goes fractional.
class KroneckerSearch {
public:
    KroneckerSearch(const IntPoly& p, std::size_t d) : p_(p), d_(d) {
        const long deg = static_cast<long>(p.size()) - 1;
        const long reach = 3 * deg + 10;
        std::vector<std::pair<Integer, Integer>> values;
        for (long x = -reach; x <= reach; ++x) values.emplace_back(Integer(x), eval(p, Integer(x)));
        // No rational roots, so every value is nonzero. Small values are cheap
        // to factor and tend to have few divisors.
        std::stable_sort(values.begin(), values.end(),
                         [](const auto& a, const auto& b) { return abs(a.second) < abs(b.second); });
        for (const auto& [x, v] : values) {
            if (points_.size() >= 2 * (d + 1) + 4) break;
            if (auto divs = try_positive_divisors(v)) points_.push_back({x, std::move(*divs)});
        }
        if (points_.size() < d + 1) throw std::domain_error("factor_rational_poly: no usable evaluation points");
        // Points with the fewest divisors keep the tree narrow.
        std::stable_sort(points_.begin(), points_.end(), [](const Point& a, const Point& b) {
            if (a.divs.size() != b.divs.size()) return a.divs.size() < b.divs.size();
            return abs(a.x) < abs(b.x);
        });
        points_.resize(d + 1);
        bound_ = (Integer(1) << static_cast<unsigned long>(d)) * norm2_ceil(p);
        table_.assign(d + 1, std::vector<Integer>(d + 1));
    }

    IntPoly run() {
        found_.clear();
        descend(0);
        return found_;
    }

private:
    struct Point {
        Integer x;
        std::vector<Integer> divs;
    };

    // table_[k][j] = g[x_j, ..., x_k] for j <= k.
    void descend(std::size_t k) {
        if (!found_.empty()) return;
        if (k > d_) {
            check_leaf();
            return;
        }
        for (const auto& dv : points_[k].divs) {
            for (int s : {1, -1}) {
                // g and -g are the same factor, so fix the sign at the first node.
                if (k == 0 && s < 0) continue;
                if (try_value(k, dv * s)) descend(k + 1);
                if (!found_.empty()) return;
            }
        }
    }

    bool try_value(std::size_t k, const Integer& y) {
        table_[k][k] = y;
        for (std::size_t j = k; j-- > 0;) {
            Integer num = table_[k][j + 1] - table_[k - 1][j];
            Integer den = points_[k].x - points_[j].x;
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
            mpz_divexact(table_[k][j].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        return true;
    }

    void check_leaf() {
        const Integer& lead = table_[d_][0];
        if (sgn(lead) == 0) return;
        if (!mpz_divisible_p(p_.back().get_mpz_t(), lead.get_mpz_t())) return;
        // Newton form to monomial basis.
        IntPoly g{table_[d_][0]};
        for (std::size_t k = d_; k-- > 0;) {
            IntPoly next(g.size() + 1);
            for (std::size_t i = 0; i < g.size(); ++i) {
                next[i + 1] += g[i];
                next[i] -= g[i] * points_[k].x;
            }
            next[0] += table_[k][0];
            g = std::move(next);
        }
        for (const auto& c : g)
            if (abs(c) > bound_) return;
        if (divides(to_rat(g), to_rat(p_))) found_ = to_rat(g).primitive_integer_coeffs();
    }

    const IntPoly& p_;
    std::size_t d_;
    std::vector<Point> points_;
    Integer bound_;
    std::vector<std::vector<Integer>> table_;
    IntPoly found_;
};

IntPoly kronecker_factor(const IntPoly& p, std::size_t d) { return KroneckerSearch(p, d).run(); }

void split_irreducible(const IntPoly& p, std::vector<RatPoly>& out) {
    const std::size_t deg = p.size() - 1;
    if (deg <= 3) {
        out.push_back(to_rat(p).monic());
        return;
    }
    for (std::size_t d = 2; d <= deg / 2; ++d) {
        IntPoly g = kronecker_factor(p, d);
        if (g.empty()) continue;
        RatPoly h = divmod(to_rat(p), to_rat(g)).first;
        split_irreducible(g, out);
        split_irreducible(h.primitive_integer_coeffs(), out);
        return;
    }
    out.push_back(to_rat(p).monic());
}

// Irreducible monic factors of a squarefree polynomial.
std::vector<RatPoly> factor_squarefree(const RatPoly& f) {
    std::vector<RatPoly> out;
    RatPoly rest = f.monic();
    if (sgn(rest.coeff(0)) == 0) {
        out.push_back(RatPoly::linear(Rational(0)));
        rest = divmod(rest, out.back()).first;
    }
    if (rest.degree() <= 0) return out;
    IntPoly p = rest.primitive_integer_coeffs();
    for (const auto& r : rational_roots(p)) {
        RatPoly lin = RatPoly::linear(r);
        out.push_back(lin);
        rest = divmod(rest, lin).first;
    }
    if (rest.degree() >= 1) split_irreducible(rest.primitive_integer_coeffs(), out);
    return out;
}

}  // namespace

RatPoly Factorization::expand() const {
    RatPoly p(unit);
    for (const auto& [f, k] : factors) p *= pow(f, k);
    return p;
}

std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<RatPoly, unsigned>> out;
    RatPoly m = f.monic();
    if (m.degree() == 0) return out;
    RatPoly a0 = gcd(m, m.derivative());
    RatPoly b = divmod(m, a0).first;
    RatPoly c = divmod(m.derivative(), a0).first;
    RatPoly d = c - b.derivative();
    for (unsigned i = 1; b.degree() > 0; ++i) {
        RatPoly a = gcd(b, d);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        if (a.degree() > 0) out.emplace_back(a, i);
    }
    return out;
}

Factorization factor_rational_poly(const RatPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_rational_poly: zero polynomial");
    if (f.degree() > kMaxFactorDegree) {
        throw std::invalid_argument("factor_rational_poly: degree " + std::to_string(f.degree()) +
                                    " exceeds the supported maximum of 12");
    }
    Factorization result;
    result.unit = f.leading();
    for (const auto& [part, mult] : squarefree_decomposition(f))
        for (auto& g : factor_squarefree(part)) result.factors.emplace_back(std::move(g), mult);
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

bool is_irreducible(const RatPoly& f) {
    if (f.degree() < 1) return false;
    Factorization fac = factor_rational_poly(f);
    return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

}  // namespace kcob

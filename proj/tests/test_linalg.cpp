#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kcob/factor.hpp"
#include "kcob/poly_matrix.hpp"
#include "kcob/smith.hpp"

using namespace kcob;

namespace {

// Cofactor expansion; independent of the Bareiss code under test.
Integer cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (sgn(m(0, c)) == 0) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
        for (std::size_t k = 0; k < n; ++k)
            if (k != c) cols.push_back(k);
        Integer term = m(0, c) * cofactor_det(m.submatrix(rows, cols));
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

// Determinantal divisors: D_k = gcd of all k x k minors; d_k = D_k / D_{k-1}.
std::vector<Integer> minors_oracle(const IntMatrix& m) {
    std::vector<Integer> d;
    Integer prev = 1;
    const std::size_t top = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= top; ++k) {
        Integer g = 0;
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k)) g = gcd(g, cofactor_det(m.submatrix(rs, cs)));
        if (sgn(g) == 0) {
            d.resize(top, 0);
            return d;
        }
        d.push_back(g / prev);
        prev = g;
    }
    return d;
}

std::size_t minors_rank_mod_p(const IntMatrix& m, long p) {
    const std::size_t top = std::min(m.rows(), m.cols());
    for (std::size_t k = top; k >= 1; --k)
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k)) {
                Integer det = cofactor_det(m.submatrix(rs, cs));
                if (!mpz_divisible_ui_p(det.get_mpz_t(), static_cast<unsigned long>(p))) return k;
            }
    return 0;
}

RatPoly cofactor_poly_det(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return RatPoly(Rational(1));
    if (n == 1) return m(0, 0);
    RatPoly total;
    for (std::size_t c = 0; c < n; ++c) {
        PolyMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) minor(r - 1, cc++) = m(r, k);
        }
        RatPoly term = m(0, c) * cofactor_poly_det(minor);
        if (c % 2) term = -term;
        total += term;
    }
    return total;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> e(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
    return m;
}

// Rational-root test plus a small brute-force search for integer factors.
bool oracle_irreducible(const RatPoly& f) {
    auto p = f.primitive_integer_coeffs();
    const long deg = f.degree();
    if (deg == 1) return true;
    for (long num = -60; num <= 60; ++num)
        for (long den = 1; den <= 60; ++den)
            if (sgn(f.evaluate(Rational(num, den))) == 0) return false;
    if (deg <= 3) return true;
    // Monic-in-lead-divisor quadratic factors with small coefficients.
    for (long a = 1; a <= 6; ++a)
        for (long b = -12; b <= 12; ++b)
            for (long c = -12; c <= 12; ++c) {
                if (c == 0) continue;
                RatPoly q{c, b, a};
                if (divides(q, f) && q.degree() < deg) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(IntMatrix{{0, 3}, {3, 0}}).diagonal == std::vector<Integer>{3, 3});
    CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("smith transforms reproduce the diagonal") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> dim(1, 6);
        IntMatrix m = random_matrix(rng, dim(rng), dim(rng));
        SmithForm s = smith_normal_form(m);
        CHECK(abs(determinant(s.left)) == 1);
        CHECK(abs(determinant(s.right)) == 1);
        IntMatrix d = s.left * m * s.right;
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                CHECK(d(i, j) == (i == j ? s.diagonal[i] : Integer(0)));
        CHECK(s.diagonal == minors_oracle(m));
    }
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(0, 5);
        std::size_t n = dim(rng);
        IntMatrix m = random_matrix(rng, n, n);
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("cokernel groups") {
    CHECK(cokernel_group(IntMatrix{{4, 1}, {1, -2}}).to_string() == "Z9");
    CHECK(cokernel_group(IntMatrix{{0, 3}, {3, 0}}).to_string() == "Z3 + Z3");
    AbelianGroup free2 = cokernel_group(IntMatrix(2, 2));
    CHECK(free2.invariant_factors() == std::vector<Integer>{0, 0});
    CHECK(free2.to_string() == "Z + Z");
    // Wide and tall shapes.
    CHECK(cokernel_group(IntMatrix{{2, 0, 0}}).to_string() == "Z2 + Z + Z");
    CHECK(cokernel_group(IntMatrix{{2}, {4}}).to_string() == "Z2");
}

TEST_CASE("cokernel invariant under unimodular changes") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(0, 3), coef(-3, 3);
    for (int trial = 0; trial < 80; ++trial) {
        IntMatrix m = random_matrix(rng, 4, 4);
        AbelianGroup base = cokernel_group(m);
        IntMatrix t = m;
        for (int step = 0; step < 10; ++step) {
            std::size_t a = pick(rng), b = pick(rng);
            if (a == b) continue;
            if (step % 2) t.add_row_multiple(a, b, coef(rng));
            else t.add_col_multiple(a, b, coef(rng));
        }
        t.swap_rows(0, 3);
        t.negate_col(1);
        CHECK(cokernel_group(t) == base);
    }
}

TEST_CASE("abelian group normalization") {
    auto g = AbelianGroup::from_cyclic_orders({6, 4, 1, 0});
    CHECK(g.to_string() == "Z2 + Z12 + Z");
    CHECK(g.free_rank() == 1);
    CHECK(g.torsion_order() == 24);
    CHECK(g.dim_mod_p(2) == 3);
    CHECK(g.dim_mod_p(3) == 2);
    CHECK(g.primary_part(2).to_string() == "Z2 + Z4");
    CHECK(AbelianGroup().to_string() == "0");
    CHECK_THROWS_AS(AbelianGroup({Integer(4), Integer(6)}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({Integer(1)}), std::invalid_argument);
    CHECK(power(AbelianGroup({Integer(7)}), 2).to_string() == "Z7 + Z7");
}

TEST_CASE("rank mod p") {
    CHECK(rank_mod_p(IntMatrix{{0, 3}, {0, -1}}, 7) == 1);
    CHECK(rank_mod_p(IntMatrix(3, 4), 5) == 0);
    CHECK(rank_mod_p(IntMatrix::identity(4), 2) == 4);
    CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 9), std::invalid_argument);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 80; ++trial) {
        std::uniform_int_distribution<int> dim(1, 4);
        IntMatrix m = random_matrix(rng, dim(rng), dim(rng), -4, 4);
        for (long p : {2L, 3L, 7L}) CHECK(rank_mod_p(m, p) == minors_rank_mod_p(m, p));
    }
}

TEST_CASE("polynomial smith form") {
    PolyMatrix d(2, 2);
    d(0, 0) = RatPoly{-1, 1};
    d(1, 1) = RatPoly{2, -3, 1};
    auto dec = poly_smith_normal_form(d);
    REQUIRE(dec.invariant_factors.size() == 2);
    CHECK(dec.invariant_factors[0] == RatPoly{-1, 1});
    CHECK(dec.invariant_factors[1] == RatPoly{2, -3, 1});

    IntMatrix a1{{2, 1}, {0, -1}};
    auto alex = poly_smith_normal_form(PolyMatrix::linear_pencil(a1, a1.transpose()));
    REQUIRE(alex.invariant_factors.size() == 1);
    CHECK(alex.invariant_factors[0].to_string() == "t^2 - 5/2*t + 1");

    PolyMatrix c(1, 1);
    c(0, 0) = RatPoly{5};
    CHECK(poly_smith_normal_form(c).invariant_factors.empty());

    PolyMatrix z(1, 2);
    z(0, 0) = RatPoly{0, 1};
    auto zd = poly_smith_normal_form(z);
    REQUIRE(zd.invariant_factors.size() == 2);
    CHECK(zd.invariant_factors[0] == RatPoly{0, 1});
    CHECK(zd.invariant_factors[1].is_zero());
}

TEST_CASE("poly smith product matches determinant") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = dim(rng);
        IntMatrix a = random_matrix(rng, n, n, -3, 3), b = random_matrix(rng, n, n, -3, 3);
        PolyMatrix pm = PolyMatrix::linear_pencil(a, b);
        RatPoly det = cofactor_poly_det(pm);
        CHECK(determinant(pm) == det);
        if (det.is_zero()) continue;
        RatPoly prod = poly_smith_normal_form(pm).order();
        CHECK(prod == det.monic());
    }
}

TEST_CASE("factorization examples") {
    auto f = factor_rational_poly(RatPoly{2, -5, 2});
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == RatPoly::linear(Rational(2)));
    CHECK(f.factors[1].first == RatPoly::linear(Rational(1, 2)));
    CHECK(f.unit == 2);

    auto g = factor_rational_poly(RatPoly{1, 0, 1});
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first == RatPoly({1, 0, 1}));

    auto h = factor_rational_poly(pow(RatPoly{-1, 1}, 3));
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0].second == 3u);

    CHECK_THROWS_AS(factor_rational_poly(RatPoly{}), std::invalid_argument);
    CHECK_THROWS_AS(factor_rational_poly(RatPoly::monomial(Rational(1), 13)), std::invalid_argument);
}

TEST_CASE("factorization finds non-linear factors") {
    // (t^2+1)(t^2+t+1)(t^2-2)^2 (t-3)
    RatPoly p = RatPoly{1, 0, 1} * RatPoly{1, 1, 1} * pow(RatPoly{-2, 0, 1}, 2) * RatPoly{-3, 1};
    auto f = factor_rational_poly(p * Rational(-3));
    CHECK(f.expand() == p * Rational(-3));
    CHECK(f.factors.size() == 4);
    // x^4 + 1 and the Aurifeuillean-looking x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
    CHECK(is_irreducible(RatPoly{1, 0, 0, 0, 1}));
    CHECK_FALSE(is_irreducible(RatPoly{4, 0, 0, 0, 1}));
    CHECK(factor_rational_poly(RatPoly{4, 0, 0, 0, 1}).factors.size() == 2);
    // two cubics
    RatPoly q = RatPoly{-2, 0, 0, 1} * RatPoly{1, 1, 0, 2};
    auto fq = factor_rational_poly(q);
    CHECK(fq.factors.size() == 2);
    CHECK(fq.expand() == q);
}

TEST_CASE("factorization reconstructs random products") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> c(-4, 4), deg(1, 3), count(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        RatPoly prod(Rational(1));
        int k = count(rng);
        for (int i = 0; i < k; ++i) {
            std::vector<Rational> co(deg(rng) + 1);
            for (auto& x : co) x = c(rng);
            if (sgn(co.back()) == 0) co.back() = 1;
            prod *= RatPoly(co);
        }
        if (prod.degree() < 1 || prod.degree() > 9) continue;
        auto f = factor_rational_poly(prod);
        CHECK(f.expand() == prod);
        for (const auto& [fac, mult] : f.factors) {
            CHECK(fac.leading() == 1);
            if (fac.degree() <= 6) CHECK(oracle_irreducible(fac));
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcob/bounds.hpp"
#include "kcob/covers.hpp"

using namespace kcob;

namespace {

DecoratedKnot copies(const char* name, long n) {
    DecoratedKnot k = *builtin_knot(name);
    k.summands = n;
    return k;
}

const DecoratedKnot U = *builtin_knot("unknot");

Integer ceil_half(long x) { return Integer((x + 1) / 2); }

}  // namespace

TEST_CASE("budgets and handle counts") {
    CHECK(branched_handle_counts(2, CobordismBudget::from(0, 1, 0)) == HandleCounts{2, 2, 0});
    CHECK(branched_handle_counts(3, CobordismBudget::from(1, 0, 0)) == HandleCounts{0, 6, 2});
    CHECK(branched_handle_counts(2, CobordismBudget::from(0, 0, 0)) == HandleCounts{0, 0, 0});
    CHECK(unbranched_handle_counts(3, CobordismBudget::from(1, 0, 0)) == HandleCounts{0, 6, 0});
    CHECK(CobordismBudget::from(2, 3, 4).c1 == 11);
    CHECK_THROWS_AS((CobordismBudget{0, 1, 3, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS(CobordismBudget::from(-1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(branched_handle_counts(1, CobordismBudget::from(0, 0, 0)), std::invalid_argument);
}

TEST_CASE("eigenspace bound on the pretzel family") {
    for (long n = 1; n <= 5; ++n)
        for (long m = 1; m <= n; ++m) {
            auto k1 = copies("P1", n), k0 = copies("P2", m);
            CHECK(bound_c0_eigen(k1, k0, 0, 2, 3, -1).lower_bound == n);
            BoundRequest at5{BoundKind::CyclicEigenspace, 2, 5, -1, std::nullopt};
            auto c2 = bound_c2(at5, k1, k0, 0);
            CHECK(c2.lower_bound == m);
            CHECK(c2.direction == Direction::Reversed);
        }
    auto p = copies("P1", 3);
    CHECK(bound_c0_eigen(p, p, 0, 2, 3, -1).lower_bound == 0);
    CHECK(bound_c0_eigen(p, U, 0, 2, 3, 5).lower_bound == 3);
}

TEST_CASE("invalid eigen parameters") {
    auto p = copies("P1", 1);
    CHECK_THROWS_AS(bound_c0_eigen(p, U, 0, 3, 7, 3), std::invalid_argument);
    CHECK_THROWS_AS(bound_c0_eigen(p, U, 0, 3, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(bound_c0_eigen(p, U, 0, 2, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(bound_c0_eigen(p, U, -1, 2, 3, 2), std::invalid_argument);
}

TEST_CASE("averaged bound") {
    for (long n = 1; n <= 5; ++n) CHECK(bound_c0_averaged(copies("P1", n), U, 0, 2, 3).lower_bound == n);
    CHECK(bound_c0_averaged(copies("6_1", 2), copies("6_1", 2), 0, 3, 7).lower_bound == 0);
    // 6_1 at n = 3, p = 7: dim H_1 (x) F_7 = 2 per copy, divided by 2(n-1) = 4.
    CHECK(bound_c0_averaged(copies("6_1", 5), U, 0, 3, 7).lower_bound == 3);
    CHECK(bound_c0_averaged(copies("6_1", 5), U, 1, 3, 7).lower_bound == 2);
}

TEST_CASE("Alexander bounds") {
    const RatPoly t_minus_2 = RatPoly::linear(Rational(2));
    for (long n = 1; n <= 6; ++n)
        for (long g = 0; g <= 3; ++g) {
            Integer expect = ceil_half(n) - g;
            if (expect < 0) expect = 0;
            CHECK(bound_c0_alexander_primary(copies("6_1", n), U, g, t_minus_2).lower_bound == expect);
            CHECK(bound_c0_alexander(copies("6_1", n), U, g).lower_bound == expect);
        }
    // Distinct irreducible factors on the two sides.
    const RatPoly ten_factor = RatPoly::linear(Rational(3, 2));
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m <= 4; ++m)
            for (long g = 0; g <= 2; ++g) {
                auto k1 = copies("6_1", n), k0 = copies("10_3", m);
                Integer e0 = ceil_half(n) - g, e2 = ceil_half(m) - g;
                if (e0 < 0) e0 = 0;
                if (e2 < 0) e2 = 0;
                CHECK(bound_c0_alexander_primary(k1, k0, g, t_minus_2).lower_bound == e0);
                CHECK(bound_c2({BoundKind::AlexanderPrimary, 0, 0, 0, ten_factor}, k1, k0, g).lower_bound == e2);
            }
    CHECK(bound_c0_alexander(copies("6_1", 2), copies("6_1", 2), 0).lower_bound == 0);
    CHECK_THROWS_AS(bound_c0_alexander_primary(U, U, 0, RatPoly{2, -3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(bound_c0_alexander_primary(U, U, 0, RatPoly{3}), std::invalid_argument);
}

TEST_CASE("c2 bound is the swapped c0 bound") {
    std::vector<BoundRequest> reqs{{BoundKind::CyclicEigenspace, 3, 7, 2, std::nullopt},
                                   {BoundKind::CyclicAveraged, 2, 5, 0, std::nullopt},
                                   {BoundKind::AlexanderRank, 0, 0, 0, std::nullopt}};
    auto k1 = copies("6_1", 2), k0 = copies("P2", 3);
    for (const auto& r : reqs) {
        auto a = bound_c2(r, k1, k0, 1);
        auto b = bound_c0(r, k0, k1, 1);
        CHECK(a.direction == Direction::Reversed);
        b.direction = Direction::Reversed;
        CHECK(a == b);
    }
    CHECK(bound_c2(reqs[0], k1, k1, 0).lower_bound == 0);
}

TEST_CASE("bounds decrease by one per genus until zero") {
    std::vector<DecoratedKnot> ks{copies("P1", 4), copies("P2", 2), copies("6_1", 5), copies("10_3", 3), U,
                                  copies("P(3,-3,3)", 2)};
    std::vector<BoundRequest> reqs{{BoundKind::CyclicEigenspace, 2, 3, 2, std::nullopt},
                                   {BoundKind::CyclicEigenspace, 3, 7, 4, std::nullopt},
                                   {BoundKind::CyclicAveraged, 3, 7, 0, std::nullopt},
                                   {BoundKind::CyclicAveraged, 2, 5, 0, std::nullopt},
                                   {BoundKind::AlexanderRank, 0, 0, 0, std::nullopt}};
    for (const auto& a : ks)
        for (const auto& b : ks)
            for (const auto& r : reqs)
                for (long g = 0; g < 8; ++g) {
                    Integer now = bound_c0(r, a, b, g).lower_bound, next = bound_c0(r, a, b, g + 1).lower_bound;
                    CHECK(next == (now > 0 ? Integer(now - 1) : Integer(0)));
                }
}

TEST_CASE("eigen maximum dominates the averaged bound") {
    std::vector<DecoratedKnot> ks{copies("P1", 4), copies("P2", 2), copies("6_1", 5), copies("10_3", 3), U,
                                  copies("P(3,-3,3)", 2)};
    for (const auto& a : ks)
        for (const auto& b : ks)
            for (std::uint64_t n = 2; n <= 6; ++n)
                for (std::uint64_t p = n + 1; p <= 61; ++p) {
                    if (!is_prime(p) || (p - 1) % n != 0) continue;
                    Integer best = 0;
                    for (auto z : roots_of_unity(n, p)) {
                        Integer v = bound_c0_eigen(a, b, 0, n, p, Integer(static_cast<unsigned long>(z))).lower_bound;
                        if (v > best) best = v;
                    }
                    CHECK(best >= bound_c0_averaged(a, b, 0, n, p).lower_bound);
                }
}

TEST_CASE("obstruction staircase for 4P1 vs 2P2") {
    auto k1 = copies("P1", 4), k0 = copies("P2", 2);
    std::vector<QuadrantUnion> expect{QuadrantUnion::quadrant(4, 2), QuadrantUnion::quadrant(3, 1),
                                      QuadrantUnion::quadrant(2, 0), QuadrantUnion::quadrant(1, 0),
                                      QuadrantUnion::quadrant(0, 0)};
    for (long g = 0; g <= 4; ++g) {
        auto small = obstruction_staircase(k1, k0, g, {2, 5});
        CHECK(small.staircase == expect[g]);
        auto full = obstruction_staircase(k1, k0, g);
        CHECK(full.staircase == expect[g]);
        CHECK(*realized_staircase(k1, k0, g) == expect[g]);
        REQUIRE(full.best_c0);
        CHECK(full.best_c0->direction == Direction::Forward);
        CHECK(full.best_c2->direction == Direction::Reversed);
    }
    CHECK(obstruction_staircase(U, U, 3).staircase == QuadrantUnion::quadrant(0, 0));
    CHECK(*realized_staircase(U, U, 0) == QuadrantUnion::quadrant(0, 0));
    CHECK_FALSE(realized_staircase(copies("6_1", 1), U, 0).has_value());
}

TEST_CASE("obstruction meets realization on the pretzel family") {
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m <= n; ++m)
            for (long g = 0; g <= n + 1; ++g) {
                auto k1 = copies("P1", n), k0 = copies("P2", m);
                auto outer = obstruction_staircase(k1, k0, g, {3, 13}).staircase;
                auto inner = *realized_staircase(k1, k0, g);
                StaircaseBounds sb{inner, outer};
                CHECK(sb.consistent());
                CHECK(sb.exact());
            }
}

TEST_CASE("certificate JSON round trip") {
    auto res = obstruction_staircase(copies("6_1", 3), copies("10_3", 1), 0, {3, 19});
    CHECK(res.certificates.size() > 10);
    for (const auto& c : res.certificates) CHECK(certificate_from_json(certificate_to_json(c)) == c);
    BoundCertificate big;
    big.kind = BoundKind::Metacyclic;
    big.k1 = "x";
    big.k0 = "y";
    big.parameters["alpha"] = Integer("1000000000000000000000000");
    big.lower_bound = Integer("500000000000000000000000");
    auto j = certificate_to_json(big);
    CHECK(j["parameters"]["alpha"].is_string());
    CHECK(certificate_from_json(j) == big);
    CHECK(certificate_from_json(nlohmann::json::parse(j.dump())) == big);

    j["lower_bound"] = -1;
    CHECK_THROWS_AS(certificate_from_json(j), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"({"kind": "nope"})")), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json(nlohmann::json::array()), std::invalid_argument);
}

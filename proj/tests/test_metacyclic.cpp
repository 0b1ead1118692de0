#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kcob/covers.hpp"
#include "kcob/errors.hpp"
#include "kcob/linking_form.hpp"
#include "kcob/metacyclic.hpp"
#include "kcob/smith.hpp"

using namespace kcob;

namespace {

AbelianGroup Z(std::initializer_list<long> orders) {
    std::vector<Integer> v;
    for (long o : orders) v.emplace_back(o);
    return AbelianGroup::from_cyclic_orders(v);
}

DecoratedKnot decorated_pretzel(const char* j1, const char* j2, std::size_t band1 = 0, std::size_t band2 = 1) {
    DecoratedKnot p = *builtin_knot("P(3,-3,3)");
    p.decorations.push_back({band1, std::make_shared<const DecoratedKnot>(*builtin_knot(j1)), 1});
    p.decorations.push_back({band2, std::make_shared<const DecoratedKnot>(*builtin_knot(j2)), 1});
    return p;
}

// Independent oracle for a rank-2 form: every subgroup is generated by two
// elements, so close all pairs and test the form with exact rationals.
std::set<std::vector<std::uint64_t>> brute_metabolizers_rank2(const LinkingForm& f) {
    const auto o0 = f.orders()[0], o1 = f.orders()[1];
    auto idx = [&](std::uint32_t a, std::uint32_t b) { return std::uint64_t(a) * o1 + b; };
    std::set<std::vector<std::uint64_t>> out;
    for (std::uint32_t a0 = 0; a0 < o0; ++a0)
        for (std::uint32_t b0 = 0; b0 < o1; ++b0)
            for (std::uint32_t a1 = 0; a1 < o0; ++a1)
                for (std::uint32_t b1 = 0; b1 < o1; ++b1) {
                    std::set<std::uint64_t> s;
                    std::vector<std::pair<std::uint32_t, std::uint32_t>> elems;
                    for (std::uint32_t i = 0; i < std::max(o0, o1); ++i)
                        for (std::uint32_t j = 0; j < std::max(o0, o1); ++j) {
                            std::uint32_t a = (i * a0 + j * a1) % o0, b = (i * b0 + j * b1) % o1;
                            if (s.insert(idx(a, b)).second) elems.emplace_back(a, b);
                        }
                    if (s.size() * s.size() != f.group_order()) continue;
                    bool iso = true;
                    for (auto [xa, xb] : elems)
                        for (auto [ya, yb] : elems) {
                            Rational v = f.value(0, 0) * xa * ya + f.value(0, 1) * xa * yb +
                                         f.value(1, 0) * xb * ya + f.value(1, 1) * xb * yb;
                            v.canonicalize();
                            if (v.get_den() != 1) iso = false;
                        }
                    if (iso) out.insert(std::vector<std::uint64_t>(s.begin(), s.end()));
                }
    return out;
}

}  // namespace

TEST_CASE("relation matrix quotient") {
    CHECK(mv_quotient_group() == Z({3}));
    // Determinant divisors: one factor 3 and no free part.
    auto snf = smith_normal_form(mv_relation_matrix());
    CHECK(snf.diagonal == std::vector<Integer>{1, 1, 1, 1, 1, 3});
    // Without beta1 = 0 the class of gamma is free.
    IntMatrix m = mv_relation_matrix().submatrix({0, 1, 3, 4, 5}, {0, 1, 2, 3, 4, 5});
    CHECK(cokernel_group(m) == AbelianGroup::free(1));
    CHECK(mv_quotient_with_torsion(Z({7, 7})) == Z({3, 7, 7, 7, 7}));
    CHECK(mv_quotient_with_torsion(AbelianGroup{}) == Z({3}));
}

TEST_CASE("metacyclic homology of K(1,J)") {
    CHECK(metacyclic_homology_K1J(*builtin_knot("6_1")) == Z({3, 7, 7, 7, 7}));
    CHECK(metacyclic_homology_K1J(*builtin_knot("10_3")) == Z({3, 19, 19, 19, 19}));
    CHECK(metacyclic_homology_K1J(*builtin_knot("unknot")) == Z({3}));
    DecoratedKnot two = *builtin_knot("6_1");
    two.summands = 2;
    CHECK(metacyclic_homology_K1J(two) == Z({3, 7, 7, 7, 7, 7, 7, 7, 7}));
    CHECK(metacyclic_homology_K1J(two).to_string() == "Z7 + Z7 + Z7 + Z7 + Z7 + Z7 + Z7 + Z21");
    // 3-primary part is Z3 whenever the companion cover is prime to 3.
    for (const char* name : {"6_1", "10_3", "P1", "P2", "P4"}) {
        auto h = metacyclic_homology_K1J(*builtin_knot(name));
        auto m3 = branched_cover_homology(builtin_knot(name)->seifert, 3);
        if (gcd(m3.torsion_order(), Integer(3)) == 1) CHECK(h.primary_part(3) == Z({3}));
    }
}

TEST_CASE("metacyclic eigen table") {
    for (long a = 0; a < 20; ++a) {
        CHECK(metacyclic_eigen_betti(Family::Alpha, a, 7) == 2 * a);
        CHECK(metacyclic_eigen_betti(Family::Alpha, a, 19) == 0);
        CHECK(metacyclic_eigen_betti(Family::Beta, a, 7) == 0);
        CHECK(metacyclic_eigen_betti(Family::Beta, a, 19) == 2 * a);
    }
    CHECK(metacyclic_eigen_betti(Family::Alpha, 3, 7) == 6);
    CHECK(metacyclic_eigen_betti(Family::Beta, 2, 19) == 4);
    CHECK_THROWS_AS(metacyclic_eigen_betti(Family::Alpha, 1, 13), std::invalid_argument);
    CHECK(family_from_string("6_1") == Family::Alpha);
    CHECK_THROWS_AS(family_from_string("gamma"), std::invalid_argument);
}

TEST_CASE("lens covers") {
    CHECK(lens_cover_decomposition(1, 1).to_string() == "L(3,2)");
    CHECK(lens_cover_decomposition(2, 1).to_string() == "L(3,2) # 3L(9,2)");
    CHECK(lens_cover_decomposition(2, 2).to_string() == "2L(3,2) # 2S1xS2");
    CHECK(lens_cover_decomposition(2, 2).to_json() == nlohmann::json{{"L(3,2)", 2}, {"S1xS2", 2}});
    CHECK_THROWS_AS(lens_cover_decomposition(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(lens_cover_decomposition(2, 3), std::invalid_argument);
}

TEST_CASE("multi-summand eigen Betti numbers") {
    CHECK(multi_eigen_betti(Family::Alpha, 3, 2, 1, 7) == 5);
    CHECK(multi_eigen_betti(Family::Alpha, 3, 1, 0, 19) == 0);
    CHECK(multi_eigen_betti(Family::Alpha, 3, 0, 9, 7) == 0);
    CHECK(multi_eigen_betti(Family::Beta, 3, 0, 9, 19) == 0);
    for (long n = 1; n <= 5; ++n)
        for (long a = 1; a <= n; ++a)
            for (long c = 0; c < 4; ++c) {
                CHECK(multi_eigen_betti(Family::Alpha, n, a, c, 7) == 2 * a * c + a - 1);
                CHECK(multi_eigen_betti(Family::Alpha, n, a, c, 19) == a - 1);
                CHECK(multi_eigen_betti(Family::Beta, n, a, c, 19) == 2 * a * c + a - 1);
                CHECK(multi_eigen_betti(Family::Beta, n, a, c, 7) == a - 1);
            }
    for (long c = 0; c < 6; ++c)
        CHECK(multi_eigen_betti(Family::Alpha, 4, 1, c, 7) == metacyclic_eigen_betti(Family::Alpha, c, 7));
    CHECK_THROWS_AS(multi_eigen_betti(Family::Alpha, 2, 3, 1, 7), std::invalid_argument);
}

TEST_CASE("metacyclic c0 bound and realization") {
    CHECK(metacyclic_c0_bound(10, 1, 0, 1).lower_bound == 5);
    CHECK(metacyclic_c0_bound(0, 1, 0, 1).lower_bound == 0);
    CHECK(metacyclic_c0_bound(10, 1, 2, 5).lower_bound == 3);
    auto cert = metacyclic_c0_bound(10, 1, 0, 1);
    CHECK(cert.kind == BoundKind::Metacyclic);
    CHECK(certificate_from_json(certificate_to_json(cert)) == cert);
    CHECK_THROWS_AS(metacyclic_c0_bound(10, 1, 1, 2), std::invalid_argument);
    Integer huge("123456789012345678901234567890");
    CHECK(metacyclic_c0_bound(huge, 1, 0, 1).lower_bound == huge / 2);

    CHECK(realization_upper(1, 1, 1, 0, 0) == std::pair<Integer, Integer>{3, 1});
    CHECK(realization_upper(1, 1, 0, 0, 1) == std::pair<Integer, Integer>{0, 0});
    CHECK_THROWS_AS(realization_upper(2, 1, 0, 0, 2), std::invalid_argument);

    // The obstruction never exceeds the realized value.
    for (long alpha = 0; alpha < 8; ++alpha)
        for (long m = 1; m < 4; ++m)
            for (long g = 0; g < 3; ++g)
                for (long n = 2 * g + 1; n < 2 * g + 4; ++n)
                    for (long beta = 0; beta < 3; ++beta) {
                        if (g > m * (2 * beta + 1)) continue;
                        CHECK(metacyclic_c0_bound(alpha, m, g, n).lower_bound <=
                              realization_upper(n, m, alpha, beta, g).first);
                    }
}

TEST_CASE("linking forms") {
    auto f = LinkingForm::standard(1, 1);
    CHECK(f.group_order() == 81);
    CHECK(f.pair({1, 0}, {1, 0}) == Rational(2, 9));
    CHECK(f.pair({0, 1}, {0, 1}) == Rational(7, 9));
    CHECK(f.pair({1, 1}, {2, 2}) == 0);
    CHECK(f.element_at(f.index_of({4, 7})) == Element{4, 7});
    CHECK_THROWS_AS(LinkingForm({9}, {{Rational(1, 3)}}), std::invalid_argument);  // singular
    CHECK_THROWS_AS(LinkingForm({9}, {{Rational(1, 2)}}), std::invalid_argument);  // not defined
    CHECK_THROWS_AS(LinkingForm({3, 3}, {{Rational(1, 3), Rational(1, 3)}, {Rational(0), Rational(1, 3)}}),
                    std::invalid_argument);
}

TEST_CASE("metabolizers of the standard form on Z9 + Z9") {
    auto f = LinkingForm::standard(1, 1);
    auto mets = enumerate_metabolizers(f);
    std::set<std::vector<std::uint64_t>> got;
    for (const auto& m : mets) got.insert(m.members);
    CHECK(got == brute_metabolizers_rank2(f));
    auto has = [&](const std::vector<Element>& gens) { return got.count(span(f, gens)) > 0; };
    CHECK(has({{1, 1}}));
    CHECK(has({{3, 0}, {0, 3}}));
    CHECK_FALSE(has({{0, 1}}));
    CHECK(is_metabolizer(f, {{1, 1}}));
    CHECK(is_metabolizer(f, {{3, 0}, {0, 3}}));
    CHECK_FALSE(is_metabolizer(f, {{0, 1}}));
    for (const auto& m : mets) {
        CHECK(m.order() * m.order() == f.group_order());
        CHECK(is_metabolizer(f, m.generators));
        CHECK(span(f, m.generators) == m.members);
    }
}

TEST_CASE("metabolizers of other forms match the rank-2 oracle") {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{1, -1}, {1, 1}, {2, 2}, {1, 4}}) {
        LinkingForm f({9, 9}, {{Rational(a, 9), Rational(0)}, {Rational(0), Rational(b, 9)}});
        std::set<std::vector<std::uint64_t>> got;
        for (const auto& m : enumerate_metabolizers(f)) got.insert(m.members);
        CHECK(got == brute_metabolizers_rank2(f));
    }
    LinkingForm hyperbolic({7, 7}, {{Rational(0), Rational(1, 7)}, {Rational(1, 7), Rational(0)}});
    std::set<std::vector<std::uint64_t>> got;
    for (const auto& m : enumerate_metabolizers(hyperbolic)) got.insert(m.members);
    CHECK(got == brute_metabolizers_rank2(hyperbolic));
    CHECK(got.size() == 2);
}

TEST_CASE("metabolizer enumeration limits") {
    CHECK_THROWS_AS(enumerate_metabolizers(LinkingForm::standard(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(metabolizer_support_check(3, 2, 0), std::invalid_argument);
}

TEST_CASE("support check") {
    for (auto [n, m, g] : std::vector<std::array<std::uint32_t, 3>>{{1, 1, 0}, {2, 1, 0}, {2, 2, 0}, {3, 1, 1}}) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(g);
        auto res = metabolizer_support_check(n, m, g);
        CHECK(res.status == SupportStatus::Holds);
        CHECK_FALSE(res.subgroups.empty());
        auto form = LinkingForm::standard(n, m);
        for (const auto& s : res.subgroups) {
            REQUIRE(s.witness);
            const Element& x = *s.witness;
            CHECK(s.subgroup.contains(form, x));
            CHECK(std::all_of(x.begin(), x.end(), [](auto c) { return c % 3 == 0; }));
            CHECK(std::any_of(x.begin(), x.begin() + n, [](auto c) { return c != 0; }));
        }
    }
    CHECK(metabolizer_support_check(1, 1, 1).status == SupportStatus::HypothesisViolated);
    // Without the hypothesis the conclusion can fail: n = 1, g = 1 on (Z9)^3
    // admits the isotropic subgroup 0 + 3Z9 + 0.
    auto form = LinkingForm::standard(1, 2);
    auto all = enumerate_isotropic_subgroups(form, 3);
    bool escape = std::any_of(all.begin(), all.end(), [&](const Metabolizer& s) {
        return std::none_of(s.members.begin(), s.members.end(), [&](auto idx) {
            auto x = form.element_at(idx);
            return idx != 0 && x[0] % 3 == 0 && x[0] != 0 && x[1] % 3 == 0 && x[2] % 3 == 0;
        });
    });
    CHECK(escape);
}

TEST_CASE("isotropic subgroups are isotropic and complete on small groups") {
    auto form = LinkingForm::standard(2, 1);
    auto subs = enumerate_isotropic_subgroups(form, 1);
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& s : subs) {
        CHECK(seen.insert(s.members).second);
        for (auto a : s.members)
            for (auto b : s.members) REQUIRE(form.pair_residue(form.element_at(a), form.element_at(b)) == 0);
    }
    // Every cyclic isotropic subgroup appears.
    for (std::uint64_t i = 0; i < form.group_order(); ++i) {
        Element x = form.element_at(i);
        if (form.pair_residue(x, x) != 0) continue;
        CHECK(seen.count(span(form, {x})) == 1);
    }
    // Sorted by member list.
    CHECK(std::is_sorted(subs.begin(), subs.end(),
                         [](const auto& a, const auto& b) { return a.members < b.members; }));
}

TEST_CASE("reversibility cases for P(U,U)") {
    auto r = reversibility_cases(decorated_pretzel("unknot", "unknot"));
    CHECK(r.cover_homology == Z({7, 7}));
    CHECK(r.eigen_betti == std::map<std::uint64_t, std::size_t>{{1, 0}, {2, 1}, {4, 1}});
    CHECK(r.subspaces_examined == 2850);
    CHECK(r.metabolizers.size() == 10);
    CHECK(r.case_counts() == std::array<std::size_t, 3>{1, 1, 8});
    for (const auto& m : r.metabolizers) {
        if (m.case_number != 3) continue;
        auto [a, b, c, d] = m.abcd;
        CHECK((a * c + 49 - b * d) % 7 == 0);
    }
    const auto& first = r.metabolizers.front();
    CHECK(first.case_number == 1);
    REQUIRE(first.couplings.size() == 2);
    CHECK(first.couplings[0].cover == "M3(P)");
    CHECK(first.couplings[0].companion == "J1");
    CHECK(first.couplings[1].cover == "M3(P*)");
    CHECK(first.couplings[1].companion == "J2");
    auto j = r.to_json();
    CHECK(j["case_counts"] == nlohmann::json{1, 1, 8});
}

TEST_CASE("reversibility companions follow the bands") {
    auto r = reversibility_cases(decorated_pretzel("6_1", "10_3"));
    CHECK(r.companions[0].name == "6_1");
    CHECK(r.companions[0].m7 == Z({127, 127}));
    CHECK(r.companions[1].name == "10_3");
    CHECK(r.companions[1].m7 == Z({2059, 2059}));
    auto s = reversibility_cases(decorated_pretzel("6_1", "10_3", 1, 0));
    CHECK(s.companions[0].name == "10_3");
    CHECK(s.companions[1].name == "6_1");
    CHECK(s.companions[0].band == 0);
    CHECK_THROWS_AS(reversibility_cases(*builtin_knot("6_1")), std::invalid_argument);
    CHECK_THROWS_AS(reversibility_cases(decorated_pretzel("6_1", "10_3", 0, 0)), std::invalid_argument);
    DecoratedKnot wrong = *builtin_knot("P1");
    wrong.decorations.push_back({0, std::make_shared<const DecoratedKnot>(*builtin_knot("6_1")), 1});
    CHECK_THROWS_AS(reversibility_cases(wrong), std::invalid_argument);
}

#include "kcob/metacyclic.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kcob/covers.hpp"
#include "kcob/errors.hpp"
#include "kcob/json_io.hpp"
#include "kcob/smith.hpp"

namespace kcob {

using nlohmann::json;

IntMatrix mv_relation_matrix() {
    // alpha = -2 gamma; beta1 + beta2 = 3 gamma; beta1 = 0; alpha = m1;
    // beta2 = 0; alpha = m2.
    return IntMatrix{{1, 0, 0, 0, 0, 2},  {0, 1, 1, 0, 0, -3}, {0, 1, 0, 0, 0, 0},
                     {1, 0, 0, -1, 0, 0}, {0, 0, 1, 0, 0, 0},  {1, 0, 0, 0, -1, 0}};
}

AbelianGroup mv_quotient_group() { return cokernel_group(mv_relation_matrix()); }

AbelianGroup mv_quotient_with_torsion(const AbelianGroup& t) {
    IntMatrix tp = IntMatrix::diagonal(t.invariant_factors());
    return cokernel_group(block_diagonal(mv_relation_matrix(), block_diagonal(tp, tp)));
}

namespace {

constexpr unsigned long kMaxSummands = 10000;

std::size_t small_count(const Integer& v, const char* what) {
    if (sgn(v) < 0 || v > kMaxSummands)
        throw std::out_of_range(std::string(what) + " must be between 0 and 10000, got " + v.get_str());
    return v.get_ui();
}

// Smallest primitive cube root of unity in F_p.
std::uint64_t cube_root(std::uint64_t p) {
    for (auto z : roots_of_unity(3, p))
        if (z != 1) return z;
    throw std::invalid_argument("F_" + std::to_string(p) + " has no primitive cube root of unity");
}

void require_field(std::uint64_t p) {
    if (p != 7 && p != 19) throw std::invalid_argument("metacyclic eigenspaces are tabulated over F_7 and F_19 only");
}

// The prime whose eigenspace sees the family's companion.
std::uint64_t home_prime(Family f) { return f == Family::Alpha ? 7 : 19; }

}  // namespace

AbelianGroup metacyclic_homology_K1J(const DecoratedKnot& j) {
    j.validate();
    const std::size_t copies = small_count(j.summands, "summand count");
    const AbelianGroup single = branched_cover_homology(j.seifert, 3);
    const AbelianGroup m3 = power(single, copies);
    AbelianGroup closed = direct_sum(AbelianGroup::from_cyclic_orders({Integer(3)}), power(m3, 2));
    if (copies <= 64) {
        AbelianGroup mv = mv_quotient_with_torsion(m3);
        if (mv != closed)
            throw InvariantViolation("metacyclic homology: closed form " + closed.to_string() +
                                     " disagrees with the relation matrix " + mv.to_string());
    }
    return closed;
}

std::string to_string(Family f) { return f == Family::Alpha ? "alpha" : "beta"; }

Family family_from_string(const std::string& s) {
    if (s == "alpha" || s == "6_1") return Family::Alpha;
    if (s == "beta" || s == "10_3") return Family::Beta;
    throw std::invalid_argument("unknown family '" + s + "' (expected alpha or beta)");
}

DecoratedKnot family_companion(Family f) { return *builtin_knot(f == Family::Alpha ? "6_1" : "10_3"); }

Integer metacyclic_eigen_betti(Family family, const Integer& coeff, std::uint64_t p) {
    require_field(p);
    if (sgn(coeff) < 0) throw std::invalid_argument("companion coefficient must be nonnegative");
    const Integer table = p == home_prime(family) ? Integer(2 * coeff) : Integer(0);
    // Each copy of the companion contributes two lifts of M_3(J).
    const std::size_t beta = eigenspace_betti(family_companion(family).seifert, 3, p, Integer(cube_root(p)));
    const Integer derived = 2 * coeff * static_cast<unsigned long>(beta);
    if (derived != table)
        throw InvariantViolation("metacyclic eigen Betti: table gives " + table.get_str() + ", companion cover gives " +
                                 derived.get_str());
    return table;
}

std::string CoverDescription::to_string() const {
    if (summands.empty()) return "S3";
    std::ostringstream os;
    bool first = true;
    // Fixed display order.
    for (const char* name : {"L(3,2)", "L(9,2)", "S1xS2"}) {
        auto it = summands.find(name);
        if (it == summands.end()) continue;
        if (!first) os << " # ";
        first = false;
        if (it->second != 1) os << it->second.get_str();
        os << name;
    }
    return os.str();
}

json CoverDescription::to_json() const {
    json j = json::object();
    for (const auto& [name, k] : summands) j[name] = integer_to_json(k);
    return j;
}

CoverDescription lens_cover_decomposition(const Integer& n, const Integer& a) {
    if (sgn(a) < 1 || a > n)
        throw std::invalid_argument("lens cover needs 1 <= a <= n, got a=" + a.get_str() + " n=" + n.get_str());
    CoverDescription d;
    auto put = [&](const char* name, const Integer& k) {
        if (sgn(k) != 0) d.summands[name] = k;
    };
    put("L(3,2)", a);
    put("L(9,2)", 3 * (n - a));
    put("S1xS2", 2 * (a - 1));
    return d;
}

Integer multi_eigen_betti(Family family, const Integer& n, const Integer& a, const Integer& coeff, std::uint64_t p) {
    require_field(p);
    if (sgn(a) < 0 || a > n)
        throw std::invalid_argument("multi eigen Betti needs 0 <= a <= n, got a=" + a.get_str() + " n=" + n.get_str());
    if (sgn(coeff) < 0) throw std::invalid_argument("companion coefficient must be nonnegative");
    if (sgn(a) == 0) return 0;
    const Integer closed = p == home_prime(family) ? Integer(2 * a * coeff + a - 1) : Integer(a - 1);
    // a companion eigenspaces plus one per pair of S1xS2 summands.
    const CoverDescription cover = lens_cover_decomposition(n, a);
    Integer handles = 0;
    if (auto it = cover.summands.find("S1xS2"); it != cover.summands.end()) handles = it->second / 2;
    const Integer derived = a * metacyclic_eigen_betti(family, coeff, p) + handles;
    if (derived != closed)
        throw InvariantViolation("multi eigen Betti: closed form " + closed.get_str() + " disagrees with " +
                                 derived.get_str());
    return closed;
}

BoundCertificate metacyclic_c0_bound(const Integer& alpha, const Integer& m, const Integer& g, const Integer& n) {
    if (sgn(alpha) < 0) throw std::invalid_argument("alpha must be nonnegative");
    if (sgn(g) < 0) throw std::invalid_argument("genus must be nonnegative");
    if (sgn(m) < 1) throw std::invalid_argument("m must be positive");
    if (n <= 2 * g)
        throw std::invalid_argument("the metacyclic bound needs n > 2g (n=" + n.get_str() + ", g=" + g.get_str() + ")");
    BoundCertificate c;
    c.kind = BoundKind::Metacyclic;
    c.direction = Direction::Forward;
    c.k1 = n.get_str() + "*K(1," + alpha.get_str() + "*6_1)";
    c.k0 = m.get_str() + "*K(1,beta*10_3)";
    c.genus = g;
    c.parameters = {{"alpha", alpha}, {"m", m}, {"n", n}};
    c.source_invariant = 2 * alpha + 1;
    c.target_invariant = m;
    Integer num = 2 * alpha + 1 - m - 4 * g;
    Integer q;
    mpz_cdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), 4);
    c.lower_bound = sgn(q) > 0 ? q : Integer(0);
    return c;
}

std::pair<Integer, Integer> realization_upper(const Integer& n, const Integer& m, const Integer& alpha,
                                              const Integer& beta, const Integer& g) {
    if (sgn(n) < 0 || sgn(m) < 0 || sgn(alpha) < 0 || sgn(beta) < 0)
        throw std::invalid_argument("realization parameters must be nonnegative");
    Integer c0 = n * (2 * alpha + 1), c2 = m * (2 * beta + 1);
    if (sgn(g) < 0 || g > c0 || g > c2)
        throw std::invalid_argument("realization needs 0 <= g <= min(" + c0.get_str() + ", " + c2.get_str() +
                                    "), got g=" + g.get_str());
    return {c0 - g, c2 - g};
}

// ---- reversibility ----

namespace {

constexpr std::uint32_t kP = 7;
using Vec = std::array<std::uint32_t, 4>;
using Basis = std::array<Vec, 2>;

const Vec kEigen{2, 4, 4, 2};
const char* const kVectorNames[4] = {"z", "w", "z*", "w*"};
const char* const kCovers[4] = {"M3(P)", "M3(P)", "M3(P*)", "M3(P*)"};
const char* const kCompanions[4] = {"J1", "J2", "J1", "J2"};

std::uint32_t inv7(std::uint32_t x) {
    for (std::uint32_t y = 1; y < kP; ++y)
        if (x * y % kP == 1) return y;
    throw std::logic_error("no inverse mod 7");
}

// Pairing scaled by 7/u: z.w = 1, z*.w* = -1.
std::uint32_t pairing(const Vec& x, const Vec& y) {
    long v = long(x[0] * y[1] + x[1] * y[0]) - long(x[2] * y[3] + x[3] * y[2]);
    return static_cast<std::uint32_t>(((v % 7) + 7) % 7);
}

Vec act(const Vec& x) {
    Vec y;
    for (int i = 0; i < 4; ++i) y[i] = x[i] * kEigen[i] % kP;
    return y;
}

// Is x in the row space of a reduced basis?
bool in_span(const Basis& b, const Vec& x) {
    for (std::uint32_t s = 0; s < kP; ++s)
        for (std::uint32_t t = 0; t < kP; ++t) {
            bool eq = true;
            for (int i = 0; i < 4 && eq; ++i) eq = (s * b[0][i] + t * b[1][i]) % kP == x[i];
            if (eq) return true;
        }
    return false;
}

// All 2-dimensional subspaces of F_7^4 in reduced row echelon form.
std::vector<Basis> all_planes() {
    std::vector<Basis> out;
    for (int p0 = 0; p0 < 4; ++p0)
        for (int p1 = p0 + 1; p1 < 4; ++p1) {
            // Free slots: row 0 after p0 except p1; row 1 after p1.
            std::vector<std::pair<int, int>> free;
            for (int c = p0 + 1; c < 4; ++c)
                if (c != p1) free.emplace_back(0, c);
            for (int c = p1 + 1; c < 4; ++c) free.emplace_back(1, c);
            std::size_t total = 1;
            for (std::size_t i = 0; i < free.size(); ++i) total *= kP;
            for (std::size_t code = 0; code < total; ++code) {
                Basis b{};
                b[0][p0] = 1;
                b[1][p1] = 1;
                std::size_t c = code;
                for (auto [r, col] : free) {
                    b[r][col] = static_cast<std::uint32_t>(c % kP);
                    c /= kP;
                }
                out.push_back(b);
            }
        }
    return out;
}

Basis reduce(Basis b) {
    // Gaussian elimination to RREF over F_7 on two rows.
    int row = 0;
    for (int col = 0; col < 4 && row < 2; ++col) {
        int piv = -1;
        for (int r = row; r < 2; ++r)
            if (b[r][col]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(b[row], b[piv]);
        std::uint32_t s = inv7(b[row][col]);
        for (auto& v : b[row]) v = v * s % kP;
        for (int r = 0; r < 2; ++r)
            if (r != row && b[r][col]) {
                std::uint32_t f = b[r][col];
                for (int i = 0; i < 4; ++i) b[r][i] = (b[r][i] + kP * kP - f * b[row][i]) % kP;
            }
        ++row;
    }
    if (row != 2) throw std::logic_error("reduce: vectors are dependent");
    return b;
}

std::array<std::uint32_t, 2> normalize_pair(std::uint32_t x, std::uint32_t y) {
    std::uint32_t s = inv7(x ? x : y);
    return {x * s % kP, y * s % kP};
}

EquivariantMetabolizer classify(const Basis& b) {
    EquivariantMetabolizer m;
    m.basis = b;
    // Project onto the eigenspaces: E2 = span(z, w*), E4 = span(w, z*).
    Vec e2{}, e4{};
    // Each invariant plane is a sum of its intersections with E2 and E4.
    std::vector<Vec> in2, in4;
    for (std::uint32_t s = 0; s < kP; ++s)
        for (std::uint32_t t = 0; t < kP; ++t) {
            Vec v;
            for (int i = 0; i < 4; ++i) v[i] = (s * b[0][i] + t * b[1][i]) % kP;
            if (v == Vec{}) continue;
            if (v[1] == 0 && v[2] == 0) in2.push_back(v);
            if (v[0] == 0 && v[3] == 0) in4.push_back(v);
        }
    const bool has2 = !in2.empty();
    const bool has4 = !in4.empty();
    if (has2) e2 = in2.front();
    if (has4) e4 = in4.front();
    auto couple = [&](int idx) { m.couplings.push_back({kCovers[idx], kVectorNames[idx], kCompanions[idx]}); };
    if (in2.size() == kP * kP - 1) {
        m.case_number = 1;
        couple(0);
        couple(3);
    } else if (in4.size() == kP * kP - 1) {
        m.case_number = 2;
        couple(1);
        couple(2);
    } else if (has2 && has4) {
        m.case_number = 3;
        auto ab = normalize_pair(e2[0], e2[3]);
        auto cd = normalize_pair(e4[1], e4[2]);
        m.abcd = {ab[0], ab[1], cd[0], cd[1]};
        if (ab[0]) couple(0);
        if (cd[0]) couple(1);
        if (cd[1]) couple(2);
        if (ab[1]) couple(3);
    } else {
        throw InvariantViolation("invariant plane is not spanned by eigenvectors");
    }
    return m;
}

// The same list built directly from eigenlines: E2, E4, and the planes
// (a z + b w*) + (c w + d z*) with ac = bd.
std::set<Basis> eigenline_planes() {
    std::set<Basis> out;
    out.insert(reduce({Vec{1, 0, 0, 0}, Vec{0, 0, 0, 1}}));
    out.insert(reduce({Vec{0, 1, 0, 0}, Vec{0, 0, 1, 0}}));
    std::vector<std::array<std::uint32_t, 2>> lines{{0, 1}};
    for (std::uint32_t b = 0; b < kP; ++b) lines.push_back({1, b});
    for (auto [a, b] : lines)
        for (auto [c, d] : lines)
            if ((a * c + kP * kP - b * d) % kP == 0) out.insert(reduce({Vec{a, 0, 0, b}, Vec{0, c, d, 0}}));
    return out;
}

CompanionHomology companion_homology(const BandDecoration& d, const char* label) {
    CompanionHomology h;
    h.label = label;
    h.name = d.companion->name;
    h.band = d.band;
    h.m7 = branched_cover_homology(d.companion->seifert, 7);
    h.multiplicity = d.copies * d.companion->summands;
    return h;
}

}  // namespace

std::array<std::size_t, 3> ReversibilityReport::case_counts() const {
    std::array<std::size_t, 3> c{};
    for (const auto& m : metabolizers) ++c.at(static_cast<std::size_t>(m.case_number - 1));
    return c;
}

json ReversibilityReport::to_json() const {
    json j;
    j["cover_homology"] = cover_homology.to_string();
    json eig = json::object();
    for (const auto& [z, b] : eigen_betti) eig[std::to_string(z)] = b;
    j["eigen_betti_F7"] = eig;
    json comps = json::array();
    for (const auto& c : companions)
        comps.push_back({{"label", c.label},
                         {"name", c.name},
                         {"band", c.band},
                         {"m7_homology", c.m7.to_string()},
                         {"multiplicity", integer_to_json(c.multiplicity)}});
    j["companions"] = comps;
    j["subspaces_examined"] = subspaces_examined;
    auto counts = case_counts();
    j["case_counts"] = {counts[0], counts[1], counts[2]};
    json mets = json::array();
    for (const auto& m : metabolizers) {
        json e;
        e["case"] = m.case_number;
        e["basis"] = {m.basis[0], m.basis[1]};
        if (m.case_number == 3) e["abcd"] = m.abcd;
        json cs = json::array();
        for (const auto& c : m.couplings) cs.push_back({{"cover", c.cover}, {"vector", c.vector}, {"companion", c.companion}});
        e["couplings"] = cs;
        mets.push_back(e);
    }
    j["metabolizers"] = mets;
    return j;
}

ReversibilityReport reversibility_cases(const DecoratedKnot& p) {
    p.validate();
    if (p.summands != 1) throw std::invalid_argument("reversibility cases need a single knot, not a multiple");
    if (p.decorations.size() != 2 || p.decorations[0].band == p.decorations[1].band)
        throw std::invalid_argument("reversibility cases need companions on two distinct bands");
    ReversibilityReport r;
    r.cover_homology = branched_cover_homology(p.seifert, 3);
    if (r.cover_homology != AbelianGroup::from_cyclic_orders({Integer(7), Integer(7)}))
        throw std::invalid_argument("reversibility cases need H_1(M_3) = Z7 + Z7, got " + r.cover_homology.to_string());
    for (const auto& [key, b] : eigenspace_table(p.seifert, 3, 7).entries) r.eigen_betti[key.zeta] = b;
    if (r.eigen_betti != std::map<std::uint64_t, std::size_t>{{1, 0}, {2, 1}, {4, 1}})
        throw std::invalid_argument("reversibility cases need deck eigenvalues exactly {2, 4} over F_7");

    auto decs = p.decorations;
    std::sort(decs.begin(), decs.end(), [](const auto& a, const auto& b) { return a.band < b.band; });
    r.companions = {companion_homology(decs[0], "J1"), companion_homology(decs[1], "J2")};

    std::set<Basis> found;
    for (const auto& b : all_planes()) {
        ++r.subspaces_examined;
        if (pairing(b[0], b[0]) || pairing(b[0], b[1]) || pairing(b[1], b[1])) continue;
        if (!in_span(b, act(b[0])) || !in_span(b, act(b[1]))) continue;
        found.insert(b);
    }
    if (found != eigenline_planes())
        throw InvariantViolation("equivariant metabolizers: plane search and eigenline construction disagree");
    for (const auto& b : found) r.metabolizers.push_back(classify(b));
    std::stable_sort(r.metabolizers.begin(), r.metabolizers.end(),
                     [](const auto& a, const auto& b) { return a.case_number < b.case_number; });
    return r;
}

}  // namespace kcob

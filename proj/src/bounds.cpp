#include "kcob/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include "kcob/covers.hpp"
#include "kcob/factor.hpp"
#include "kcob/json_io.hpp"

namespace kcob {

using nlohmann::json;

CobordismBudget CobordismBudget::from(const Integer& g, const Integer& c0, const Integer& c2) {
    CobordismBudget b{g, c0, c0 + c2 + 2 * g, c2};
    b.validate();
    return b;
}

void CobordismBudget::validate() const {
    if (sgn(g) < 0 || sgn(c0) < 0 || sgn(c1) < 0 || sgn(c2) < 0)
        throw std::invalid_argument("cobordism budget entries must be nonnegative");
    if (c1 != c0 + c2 + 2 * g) {
        throw std::invalid_argument("cobordism budget violates c1 = c0 + c2 + 2g: c1 = " + c1.get_str() +
                                    ", expected " + Integer(c0 + c2 + 2 * g).get_str());
    }
}

HandleCounts branched_handle_counts(std::uint64_t n, const CobordismBudget& b) {
    HandleCounts h = unbranched_handle_counts(n, b);
    h.h3 += 2 * b.g;
    return h;
}

HandleCounts unbranched_handle_counts(std::uint64_t n, const CobordismBudget& b) {
    if (n < 2) throw std::invalid_argument("cover order n must be >= 2");
    b.validate();
    const Integer nn(std::to_string(n));
    return {nn * b.c0, nn * b.c1, nn * b.c2};
}

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::CyclicEigenspace: return "cyclic-eigenspace";
        case BoundKind::CyclicAveraged: return "cyclic-averaged";
        case BoundKind::AlexanderRank: return "alexander-rank";
        case BoundKind::AlexanderPrimary: return "alexander-primary";
        case BoundKind::Metacyclic: return "metacyclic";
    }
    return "unknown";
}

std::string to_string(Direction d) { return d == Direction::Forward ? "forward" : "reversed"; }

std::string BoundCertificate::describe() const {
    std::ostringstream os;
    os << (direction == Direction::Forward ? "c0" : "c2") << " >= " << lower_bound.get_str() << "  [" << to_string(kind);
    for (const auto& [k, v] : parameters) os << ' ' << k << '=' << v.get_str();
    if (f) os << " f=" << f->to_string();
    os << "; " << source_invariant.get_str() << " vs " << target_invariant.get_str() << ", g=" << genus.get_str() << ']';
    return os.str();
}

namespace {

BoundKind kind_from_string(const std::string& s) {
    for (BoundKind k : {BoundKind::CyclicEigenspace, BoundKind::CyclicAveraged, BoundKind::AlexanderRank,
                        BoundKind::AlexanderPrimary, BoundKind::Metacyclic})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("certificate: unknown kind '" + s + "'");
}

const json& field(const json& j, const char* name) {
    if (!j.contains(name)) throw std::invalid_argument(std::string("certificate: missing field '") + name + "'");
    return j.at(name);
}

std::string string_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string()) throw std::invalid_argument(std::string("certificate: field '") + name + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

json certificate_to_json(const BoundCertificate& c) {
    json j;
    j["kind"] = to_string(c.kind);
    j["direction"] = to_string(c.direction);
    j["k1"] = c.k1;
    j["k0"] = c.k0;
    j["g"] = integer_to_json(c.genus);
    json params = json::object();
    for (const auto& [k, v] : c.parameters) params[k] = integer_to_json(v);
    if (c.f) {
        json coeffs = json::array();
        for (const auto& q : c.f->coeffs()) coeffs.push_back(q.get_str());
        params["f"] = coeffs;
    }
    j["parameters"] = params;
    j["invariants"] = {integer_to_json(c.source_invariant), integer_to_json(c.target_invariant)};
    j["lower_bound"] = integer_to_json(c.lower_bound);
    return j;
}

BoundCertificate certificate_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("certificate: expected an object");
    BoundCertificate c;
    c.kind = kind_from_string(string_field(j, "kind"));
    const std::string dir = string_field(j, "direction");
    if (dir == "forward") c.direction = Direction::Forward;
    else if (dir == "reversed") c.direction = Direction::Reversed;
    else throw std::invalid_argument("certificate: unknown direction '" + dir + "'");
    c.k1 = string_field(j, "k1");
    c.k0 = string_field(j, "k0");
    c.genus = integer_from_json(field(j, "g"), "certificate.g");
    const json& params = field(j, "parameters");
    if (!params.is_object()) throw std::invalid_argument("certificate: parameters must be an object");
    for (const auto& [k, v] : params.items()) {
        if (k == "f") {
            if (!v.is_array()) throw std::invalid_argument("certificate: f must be a coefficient array");
            std::vector<Rational> coeffs;
            for (const auto& q : v) {
                if (!q.is_string()) throw std::invalid_argument("certificate: f coefficients must be strings");
                Rational r;
                if (r.set_str(q.get<std::string>(), 10) != 0 || sgn(r.get_den()) == 0)
                    throw std::invalid_argument("certificate: bad rational '" + q.get<std::string>() + "'");
                coeffs.push_back(r);
            }
            c.f = RatPoly(std::move(coeffs));
        } else {
            c.parameters[k] = integer_from_json(v, "certificate.parameters." + k);
        }
    }
    const json& inv = field(j, "invariants");
    if (!inv.is_array() || inv.size() != 2) throw std::invalid_argument("certificate: invariants must be a pair");
    c.source_invariant = integer_from_json(inv[0], "certificate.invariants[0]");
    c.target_invariant = integer_from_json(inv[1], "certificate.invariants[1]");
    c.lower_bound = integer_from_json(field(j, "lower_bound"), "certificate.lower_bound");
    if (sgn(c.lower_bound) < 0) throw std::invalid_argument("certificate: lower_bound must be >= 0");
    return c;
}

Integer knot_eigen_betti(const DecoratedKnot& k, std::uint64_t n, std::uint64_t p, const Integer& zeta) {
    return k.summands * Integer(static_cast<unsigned long>(eigenspace_betti(k.seifert, n, p, zeta)));
}

Integer knot_betti_mod_p(const DecoratedKnot& k, std::uint64_t n, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (n % p == 0) throw std::invalid_argument("p = " + std::to_string(p) + " divides the cover order");
    const std::size_t d = branched_cover_homology(k.seifert, n).dim_mod_p(Integer(static_cast<unsigned long>(p)));
    return k.summands * Integer(static_cast<unsigned long>(d));
}

Integer knot_alexander_rank(const DecoratedKnot& k) {
    return k.summands * Integer(static_cast<unsigned long>(alexander_invariants(k.seifert).rank));
}

Integer knot_alexander_primary_rank(const DecoratedKnot& k, const RatPoly& f) {
    const auto inv = alexander_invariants(k.seifert);
    auto it = inv.primary_ranks.find(f.monic());
    const std::size_t r = it == inv.primary_ranks.end() ? 0 : it->second;
    return k.summands * Integer(static_cast<unsigned long>(r));
}

namespace {

Integer clamp_ceil(const Integer& num, const Integer& den) {
    Integer q = ceil_div(num, den);
    return sgn(q) < 0 ? Integer(0) : q;
}

BoundCertificate compute(const BoundRequest& req, const DecoratedKnot& src, const DecoratedKnot& dst,
                         const Integer& g) {
    if (sgn(g) < 0) throw std::invalid_argument("genus must be >= 0");
    BoundCertificate c;
    c.kind = req.kind;
    c.k1 = src.name;
    c.k0 = dst.name;
    c.genus = g;
    switch (req.kind) {
        case BoundKind::CyclicEigenspace: {
            Integer z;
            mpz_fdiv_r_ui(z.get_mpz_t(), req.zeta.get_mpz_t(), req.p == 0 ? 1 : req.p);
            c.source_invariant = knot_eigen_betti(src, req.n, req.p, req.zeta);
            c.target_invariant = knot_eigen_betti(dst, req.n, req.p, req.zeta);
            c.parameters = {{"n", Integer(std::to_string(req.n))}, {"p", Integer(std::to_string(req.p))}, {"zeta", z}};
            c.lower_bound = clamp_ceil(c.source_invariant - c.target_invariant - 2 * g, 2);
            break;
        }
        case BoundKind::CyclicAveraged: {
            if (req.n < 2) throw std::invalid_argument("cover order n must be >= 2");
            c.source_invariant = knot_betti_mod_p(src, req.n, req.p);
            c.target_invariant = knot_betti_mod_p(dst, req.n, req.p);
            c.parameters = {{"n", Integer(std::to_string(req.n))}, {"p", Integer(std::to_string(req.p))}};
            const Integer nm1(std::to_string(req.n - 1));
            c.lower_bound = clamp_ceil(c.source_invariant - c.target_invariant - 2 * g * nm1, 2 * nm1);
            break;
        }
        case BoundKind::AlexanderRank:
            c.source_invariant = knot_alexander_rank(src);
            c.target_invariant = knot_alexander_rank(dst);
            c.lower_bound = clamp_ceil(c.source_invariant - c.target_invariant - 2 * g, 2);
            break;
        case BoundKind::AlexanderPrimary: {
            if (!req.f) throw std::invalid_argument("primary Alexander bound needs a polynomial f");
            if (req.f->degree() < 1 || !is_irreducible(*req.f))
                throw std::invalid_argument("f = " + req.f->to_string() + " is not irreducible over Q");
            c.f = req.f->monic();
            c.source_invariant = knot_alexander_primary_rank(src, *c.f);
            c.target_invariant = knot_alexander_primary_rank(dst, *c.f);
            c.lower_bound = clamp_ceil(c.source_invariant - c.target_invariant - 2 * g, 2);
            break;
        }
        case BoundKind::Metacyclic:
            throw std::invalid_argument("metacyclic bounds are computed by metacyclic_c0_bound");
    }
    return c;
}

}  // namespace

BoundCertificate bound_c0(const BoundRequest& req, const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g) {
    return compute(req, k1, k0, g);
}

BoundCertificate bound_c2(const BoundRequest& req, const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g) {
    BoundCertificate c = bound_c0(req, k0, k1, g);
    c.direction = Direction::Reversed;
    return c;
}

BoundCertificate bound_c0_eigen(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g, std::uint64_t n,
                                std::uint64_t p, const Integer& zeta) {
    return bound_c0({BoundKind::CyclicEigenspace, n, p, zeta, std::nullopt}, k1, k0, g);
}

BoundCertificate bound_c0_averaged(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g,
                                   std::uint64_t n, std::uint64_t p) {
    return bound_c0({BoundKind::CyclicAveraged, n, p, 0, std::nullopt}, k1, k0, g);
}

BoundCertificate bound_c0_alexander(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g) {
    return bound_c0({BoundKind::AlexanderRank, 0, 0, 0, std::nullopt}, k1, k0, g);
}

BoundCertificate bound_c0_alexander_primary(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g,
                                            const RatPoly& f) {
    return bound_c0({BoundKind::AlexanderPrimary, 0, 0, 0, f}, k1, k0, g);
}

ObstructionResult obstruction_staircase(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g,
                                        SearchLimits limits) {
    if (limits.max_n < 1 || limits.max_p < 1) throw std::invalid_argument("search limits must be positive");
    if (limits.max_p > 10000) throw std::invalid_argument("prime limit above 10^4 is not supported");
    std::vector<BoundRequest> requests;
    for (std::uint64_t n = 2; n <= limits.max_n; ++n)
        for (std::uint64_t p = n + 1; p <= limits.max_p; ++p) {
            if (!is_prime(p) || (p - 1) % n != 0) continue;
            for (std::uint64_t z : roots_of_unity(n, p))
                if (z != 1) requests.push_back({BoundKind::CyclicEigenspace, n, p, Integer(static_cast<unsigned long>(z)), std::nullopt});
            requests.push_back({BoundKind::CyclicAveraged, n, p, 0, std::nullopt});
        }
    requests.push_back({BoundKind::AlexanderRank, 0, 0, 0, std::nullopt});
    std::map<RatPoly, bool> factors;
    for (const auto* k : {&k1, &k0})
        for (const auto& [f, _] : alexander_invariants(k->seifert).primary_ranks) factors[f] = true;
    for (const auto& [f, _] : factors) requests.push_back({BoundKind::AlexanderPrimary, 0, 0, 0, f});

    ObstructionResult out;
    for (const auto& req : requests) {
        out.certificates.push_back(bound_c0(req, k1, k0, g));
        if (!out.best_c0 || out.certificates.back().lower_bound > out.best_c0->lower_bound)
            out.best_c0 = out.certificates.back();
        out.certificates.push_back(bound_c2(req, k1, k0, g));
        if (!out.best_c2 || out.certificates.back().lower_bound > out.best_c2->lower_bound)
            out.best_c2 = out.certificates.back();
    }
    out.staircase = QuadrantUnion::quadrant(to_int64(out.best_c0->lower_bound), to_int64(out.best_c2->lower_bound));
    return out;
}

std::optional<QuadrantUnion> realized_staircase(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g) {
    if (sgn(g) < 0) throw std::invalid_argument("genus must be >= 0");
    auto plain = [](const DecoratedKnot& k, const SeifertMatrix& v) { return k.decorations.empty() && k.seifert == v; };
    if (plain(k1, SeifertMatrix()) && plain(k0, SeifertMatrix())) return QuadrantUnion::quadrant(0, 0);
    if (!plain(k1, pretzel_Pk(1)) || !plain(k0, pretzel_Pk(2))) return std::nullopt;
    auto drop = [&](const Integer& x) { return to_int64(x > g ? Integer(x - g) : Integer(0)); };
    return QuadrantUnion::quadrant(drop(k1.summands), drop(k0.summands));
}

}  // namespace kcob

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcob/knot.hpp"
#include "kcob/polynomial.hpp"
#include "kcob/quadrant.hpp"

namespace kcob {

/// (g, c0, c1, c2) with c1 = c0 + c2 + 2g.
struct CobordismBudget {
    Integer g, c0, c1, c2;

    /// Fills in c1. Throws std::invalid_argument on negative entries.
    static CobordismBudget from(const Integer& g, const Integer& c0, const Integer& c2);
    /// Throws std::invalid_argument unless all entries are >= 0 and the
    /// saddle count matches.
    void validate() const;
};

struct HandleCounts {
    Integer h1, h2, h3;
    friend bool operator==(const HandleCounts&, const HandleCounts&) = default;
};

/// (n c0, n c1, n c2 + 2g) for the n-fold branched cover of the cobordism.
HandleCounts branched_handle_counts(std::uint64_t n, const CobordismBudget& b);
/// (n c0, n c1, n c2) for the unbranched cover of the complement.
HandleCounts unbranched_handle_counts(std::uint64_t n, const CobordismBudget& b);

enum class BoundKind { CyclicEigenspace, CyclicAveraged, AlexanderRank, AlexanderPrimary, Metacyclic };
/// Forward: a bound on c0 for K1 -> K0. Reversed: a bound on c2, obtained by
/// running the c0 bound on K0 -> K1.
enum class Direction { Forward, Reversed };

std::string to_string(BoundKind k);
std::string to_string(Direction d);

struct BoundCertificate {
    BoundKind kind = BoundKind::CyclicEigenspace;
    Direction direction = Direction::Forward;
    std::string k1;
    std::string k0;
    Integer genus;
    /// n, p, zeta for cyclic bounds; alpha, m, n for the metacyclic bound.
    std::map<std::string, Integer> parameters;
    /// Irreducible factor for the primary Alexander bound.
    std::optional<RatPoly> f;
    /// Invariant of the source and target knots in the computation
    /// (after the swap for Reversed).
    Integer source_invariant;
    Integer target_invariant;
    Integer lower_bound;

    std::string describe() const;
    friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

nlohmann::json certificate_to_json(const BoundCertificate& c);
/// Throws std::invalid_argument on schema violations.
BoundCertificate certificate_from_json(const nlohmann::json& j);

/// Abelian invariants of a decorated knot: decorations are ignored and
/// summands multiply.
Integer knot_eigen_betti(const DecoratedKnot& k, std::uint64_t n, std::uint64_t p, const Integer& zeta);
Integer knot_betti_mod_p(const DecoratedKnot& k, std::uint64_t n, std::uint64_t p);
Integer knot_alexander_rank(const DecoratedKnot& k);
Integer knot_alexander_primary_rank(const DecoratedKnot& k, const RatPoly& f);

struct BoundRequest {
    BoundKind kind = BoundKind::CyclicEigenspace;
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    Integer zeta;
    std::optional<RatPoly> f;
};

/// max(0, ceil((b(K1) - b(K0)) / 2 - g)), or with 2(n-1) in place of 2 for
/// the averaged form. Metacyclic requests are rejected here.
BoundCertificate bound_c0(const BoundRequest& req, const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g);
/// The c0 bound with the knots swapped, reported as a bound on c2.
BoundCertificate bound_c2(const BoundRequest& req, const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g);

BoundCertificate bound_c0_eigen(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g, std::uint64_t n,
                                std::uint64_t p, const Integer& zeta);
BoundCertificate bound_c0_averaged(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g,
                                   std::uint64_t n, std::uint64_t p);
BoundCertificate bound_c0_alexander(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g);
/// Throws std::invalid_argument if f is not irreducible over Q.
BoundCertificate bound_c0_alexander_primary(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g,
                                            const RatPoly& f);

struct SearchLimits {
    std::uint64_t max_n = 6;
    std::uint64_t max_p = 97;
};

struct ObstructionResult {
    QuadrantUnion staircase;
    std::optional<BoundCertificate> best_c0;
    std::optional<BoundCertificate> best_c2;
    std::vector<BoundCertificate> certificates;
};

/// Sweeps every cyclic bound over n in 2..N, primes p <= P with p = 1 mod n
/// and all n-th roots of unity, plus the Alexander bounds, in both
/// directions. The staircase is Q(best c0, best c2); ties keep the first
/// certificate in sweep order.
ObstructionResult obstruction_staircase(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g,
                                        SearchLimits limits = {});

/// Realized staircase for (nP1, mP2): Q(max(n-g,0), max(m-g,0)). Also
/// Q(0,0) for unknot to unknot. nullopt for pairs outside the catalog.
std::optional<QuadrantUnion> realized_staircase(const DecoratedKnot& k1, const DecoratedKnot& k0, const Integer& g);

}  // namespace kcob

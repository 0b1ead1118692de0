#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "kcob/abelian_group.hpp"
#include "kcob/knot.hpp"
#include "kcob/poly_matrix.hpp"

namespace kcob {

/// (V^T - V)^{-1} V^T. Throws std::domain_error if V - V^T is not unimodular.
IntMatrix gamma_matrix(const IntMatrix& v);
inline IntMatrix gamma_matrix(const SeifertMatrix& v) { return gamma_matrix(v.matrix()); }

/// H_1 of the n-fold cyclic branched cover, presented by Gamma^n - (Gamma - I)^n.
/// For n = 2 the result is checked against V + V^T (InvariantViolation on
/// mismatch). Throws std::invalid_argument for n < 2.
AbelianGroup branched_cover_homology(const SeifertMatrix& v, std::uint64_t n);

/// All zeta in F_p with zeta^n = 1, ascending. Exhaustive search; p <= 10^4.
std::vector<std::uint64_t> roots_of_unity(std::uint64_t n, std::uint64_t p);

/// Dimension of the zeta-eigenspace of the deck transformation on
/// H_1(M_n; F_p): corank of zeta*V - V^T, and 0 for zeta = 1.
/// zeta is taken mod p, so -1 is accepted. Throws std::invalid_argument if p
/// is not prime, p divides n, or zeta^n != 1.
std::size_t eigenspace_betti(const SeifertMatrix& v, std::uint64_t n, std::uint64_t p, const Integer& zeta);

struct EigenKey {
    std::uint64_t n;
    std::uint64_t p;
    std::uint64_t zeta;
    friend auto operator<=>(const EigenKey&, const EigenKey&) = default;
};

struct EigenBettiTable {
    std::map<EigenKey, std::size_t> entries;

    std::size_t at(std::uint64_t n, std::uint64_t p, std::uint64_t zeta) const;
    /// Sum over zeta for one (n, p) row.
    std::size_t row_sum(std::uint64_t n, std::uint64_t p) const;
    void merge(const EigenBettiTable& other);
};

/// One row of the table: every n-th root of unity in F_p. Requires
/// p = 1 mod n (std::domain_error otherwise). The row sum is checked against
/// dim H_1(M_n) (x) F_p and an InvariantViolation thrown on mismatch.
EigenBettiTable eigenspace_table(const SeifertMatrix& v, std::uint64_t n, std::uint64_t p);

struct AlexanderInvariants {
    ModuleDecomposition decomposition;
    std::size_t rank = 0;
    /// Irreducible monic f -> number of invariant factors divisible by f.
    std::map<RatPoly, std::size_t> primary_ranks;
};

/// Cokernel of tV - V^T over Q[t].
AlexanderInvariants alexander_invariants(const SeifertMatrix& v);

/// Determinant of tV - V^T, the Alexander polynomial up to a unit.
RatPoly alexander_polynomial(const SeifertMatrix& v);

}  // namespace kcob

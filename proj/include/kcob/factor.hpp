#pragma once

#include <utility>
#include <vector>

#include "kcob/polynomial.hpp"

namespace kcob {

struct Factorization {
    Rational unit;
    /// Monic irreducible factors with multiplicities, sorted by RatPoly order.
    std::vector<std::pair<RatPoly, unsigned>> factors;

    RatPoly expand() const;
};

inline constexpr long kMaxFactorDegree = 12;

/// Monic squarefree decomposition (Yun): f = lc * prod a_i^i.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f);

/// Complete factorization over Q. Strategy: squarefree split, rational-root
/// extraction, then a Kronecker search for integer factors of degree up to
/// half the remaining degree, filtered by the Landau-Mignotte bound.
/// Throws std::invalid_argument for the zero polynomial or degree > 12.
Factorization factor_rational_poly(const RatPoly& f);

bool is_irreducible(const RatPoly& f);

}  // namespace kcob

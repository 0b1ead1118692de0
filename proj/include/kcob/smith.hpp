#pragma once

#include <cstdint>
#include <vector>

#include "kcob/abelian_group.hpp"
#include "kcob/int_matrix.hpp"

namespace kcob {

struct SmithForm {
    /// d_1 | d_2 | ... of length min(rows, cols), all nonnegative.
    std::vector<Integer> diagonal;
    /// Unimodular transforms with left * m * right == diag(diagonal) (padded).
    IntMatrix left;
    IntMatrix right;
};

/// Smith normal form with minimal-absolute-value pivoting.
SmithForm smith_normal_form(const IntMatrix& m);

/// Z^cols / (row space of m), i.e. the group presented by m with one
/// relation per row.
AbelianGroup cokernel_group(const IntMatrix& m);

/// Rank of m reduced mod p. Throws std::invalid_argument if p is not prime.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

}  // namespace kcob

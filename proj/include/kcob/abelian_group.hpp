#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kcob/integer.hpp"

namespace kcob {

/// Finitely generated abelian group in invariant-factor form
/// Z/d1 + Z/d2 + ... with d1 | d2 | ..., every d >= 2 or d == 0 (a free Z).
/// Free summands therefore sit at the end of the list.
class AbelianGroup {
public:
    AbelianGroup() = default;
    /// Validates the divisibility chain; throws std::invalid_argument.
    explicit AbelianGroup(std::vector<Integer> invariant_factors);

    /// Normalizes an arbitrary list of cyclic orders (1s dropped, 0 = Z).
    static AbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);
    static AbelianGroup free(std::size_t rank);

    const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
    bool is_trivial() const noexcept { return factors_.empty(); }
    std::size_t free_rank() const;
    std::size_t torsion_count() const { return factors_.size() - free_rank(); }
    /// Order of the torsion subgroup.
    Integer torsion_order() const;
    /// dim over F_p of G (x) F_p: the number of factors divisible by p (0 included).
    std::size_t dim_mod_p(const Integer& p) const;
    /// The p-primary part of the torsion, as a group.
    AbelianGroup primary_part(const Integer& p) const;

    /// "0", "Z", "Z7 + Z7", "Z3 + Z + Z"
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::vector<Integer> factors_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
/// k-fold direct sum of a group with itself.
AbelianGroup power(const AbelianGroup& g, std::size_t k);

}  // namespace kcob

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kcob/integer.hpp"

namespace kcob {

/// Coordinates of a group element, one per cyclic summand.
using Element = std::vector<std::uint32_t>;

/// Symmetric Q/Z-valued pairing on Z/o_1 + ... + Z/o_k, given by its values
/// on the standard generators.
class LinkingForm {
public:
    /// Throws std::invalid_argument unless the values are symmetric,
    /// well defined on the cyclic summands, and nonsingular, or if the group
    /// has more than 10^6 elements.
    LinkingForm(std::vector<std::uint32_t> orders, const std::vector<std::vector<Rational>>& values);

    /// (Z9)^(n+m) with 2/9 on the first n summands and -2/9 on the last m.
    static LinkingForm standard(std::uint32_t n, std::uint32_t m);

    const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
    std::uint64_t group_order() const noexcept { return size_; }
    /// Value in [0, 1).
    Rational pair(const Element& x, const Element& y) const;
    Rational value(std::size_t i, std::size_t j) const;

    // Dense indexing of group elements, mixed radix with the first summand
    // varying slowest.
    std::uint64_t index_of(const Element& x) const;
    Element element_at(std::uint64_t index) const;

    /// Pairing as a residue mod denominator(): lambda(x, y) = r / denominator().
    std::uint64_t pair_residue(const Element& x, const Element& y) const;
    std::uint64_t denominator() const noexcept { return den_; }

private:
    std::vector<std::uint32_t> orders_;
    std::uint64_t size_ = 1;
    std::uint64_t den_ = 1;
    std::vector<std::uint64_t> residues_;  // k x k, scaled by den_
};

struct Metabolizer {
    /// Greedy canonical generators: scanning elements in index order, keep
    /// each one not already in the span of those kept.
    std::vector<Element> generators;
    /// Sorted element indices.
    std::vector<std::uint64_t> members;

    std::uint64_t order() const { return members.size(); }
    bool contains(const LinkingForm& form, const Element& x) const;
    friend bool operator==(const Metabolizer&, const Metabolizer&) = default;
};

/// Every subgroup on which the form vanishes identically and whose order is
/// at least min_order, sorted by member list. Requires |G| <= 9^4
/// (std::invalid_argument otherwise).
std::vector<Metabolizer> enumerate_isotropic_subgroups(const LinkingForm& form, std::uint64_t min_order);

/// Isotropic subgroups M with |M|^2 = |G|.
std::vector<Metabolizer> enumerate_metabolizers(const LinkingForm& form);

/// Subgroup generated by `gens`, as sorted indices.
std::vector<std::uint64_t> span(const LinkingForm& form, const std::vector<Element>& gens);

/// Pairwise check of the form on the span of `gens`, plus |M|^2 = |G|.
bool is_metabolizer(const LinkingForm& form, const std::vector<Element>& gens);

enum class SupportStatus { Holds, Fails, HypothesisViolated };

struct SupportWitness {
    Metabolizer subgroup;
    /// An order-3 element with a nonzero coordinate among the first n, if any.
    std::optional<Element> witness;
};

struct SupportCheck {
    SupportStatus status = SupportStatus::HypothesisViolated;
    std::vector<SupportWitness> subgroups;
};

/// For the standard form on (Z9)^n + (Z9)^m: does every isotropic subgroup of
/// order >= 3^(n+m-2g) contain an order-3 element that is nonzero somewhere
/// in the first n coordinates? Needs n + m <= 4 (std::invalid_argument).
/// Returns HypothesisViolated without searching when n <= 2g.
SupportCheck metabolizer_support_check(std::uint32_t n, std::uint32_t m, std::uint32_t g);

}  // namespace kcob

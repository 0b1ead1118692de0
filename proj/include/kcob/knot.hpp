#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kcob/int_matrix.hpp"

namespace kcob {

/// Square integer matrix V of even size with det(V - V^T) = +-1.
class SeifertMatrix {
public:
    /// The unknot (0x0).
    SeifertMatrix() = default;
    /// Throws std::invalid_argument unless V is square, of even size, and
    /// V - V^T is unimodular.
    explicit SeifertMatrix(IntMatrix v);

    const IntMatrix& matrix() const noexcept { return v_; }
    std::size_t size() const noexcept { return v_.rows(); }
    std::size_t genus() const noexcept { return v_.rows() / 2; }

    friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.v_ == b.v_; }

private:
    IntMatrix v_;
};

/// [[0,k],[k+1,0]]
SeifertMatrix pretzel_Pk(const Integer& k);
/// A_k = [[k+1,1],[0,-k]], the natural basis for K(k,J).
SeifertMatrix two_bridge_KkJ(const Integer& k);
/// B_k = [[0,k+1],[k,-k]], a unimodularly congruent basis.
SeifertMatrix two_bridge_KkJ_alt(const Integer& k);
SeifertMatrix pretzel_P333();

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix mirror(const SeifertMatrix& a);
SeifertMatrix reverse(const SeifertMatrix& a);

struct DecoratedKnot;

/// A companion knot tied into one band of the Seifert surface, `copies` times.
struct BandDecoration {
    std::size_t band = 0;
    std::shared_ptr<const DecoratedKnot> companion;
    Integer copies = 1;
};

struct DecoratedKnot {
    std::string name;
    SeifertMatrix seifert;
    std::vector<BandDecoration> decorations;
    /// n in nK.
    Integer summands = 1;

    /// Throws std::invalid_argument on a bad band index, negative copies,
    /// missing companion or summands < 1.
    void validate() const;

    /// Seifert matrix of the full connected sum. Throws std::out_of_range if
    /// summands is too large to expand (more than 256 copies).
    SeifertMatrix expanded_seifert() const;
};

bool operator==(const DecoratedKnot& a, const DecoratedKnot& b);
bool operator==(const BandDecoration& a, const BandDecoration& b);

DecoratedKnot make_knot(std::string name, SeifertMatrix seifert, Integer summands = 1);

/// Block sum with re-indexed decorations. Each side is expanded to its full
/// summand count first, so the result has summands == 1.
DecoratedKnot connected_sum(const DecoratedKnot& a, const DecoratedKnot& b);
/// Mirrors the Seifert form and every companion.
DecoratedKnot mirror(const DecoratedKnot& k);
/// Reverses orientation of the knot and every companion.
DecoratedKnot reverse(const DecoratedKnot& k);

/// Built-in knots: unknot, 6_1, 10_3, P<k> (k >= 1), P(3,-3,3), K(<k>,U).
std::optional<DecoratedKnot> builtin_knot(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace kcob

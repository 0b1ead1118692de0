#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kcob {

/// Q(a, b) = { (i, j) : i >= a, j >= b } in the nonnegative quadrant.
struct Corner {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend auto operator<=>(const Corner&, const Corner&) = default;
};

/// Finite union of quadrants, stored as its antichain of minimal corners in
/// lexicographic order. The empty list is the empty set.
class QuadrantUnion {
public:
    QuadrantUnion() = default;

    /// Minimal antichain generating the upward closure of `points`.
    /// Throws std::invalid_argument on a negative coordinate.
    static QuadrantUnion normalize(std::vector<Corner> points);
    static QuadrantUnion quadrant(std::int64_t a, std::int64_t b) { return normalize({{a, b}}); }

    const std::vector<Corner>& corners() const noexcept { return corners_; }
    bool empty() const noexcept { return corners_.empty(); }
    bool member(std::int64_t c0, std::int64_t c2) const;
    /// True iff other is a subset of this set.
    bool contains(const QuadrantUnion& other) const;
    bool is_everything() const { return member(0, 0); }

    /// "Q(2,3) u Q(5,1)", or "empty".
    std::string to_string() const;

    friend bool operator==(const QuadrantUnion&, const QuadrantUnion&) = default;

private:
    std::vector<Corner> corners_;
};

QuadrantUnion normalize(std::vector<Corner> points);
bool member(const QuadrantUnion& s, std::int64_t c0, std::int64_t c2);
QuadrantUnion unite(const QuadrantUnion& x, const QuadrantUnion& y);
QuadrantUnion intersect(const QuadrantUnion& x, const QuadrantUnion& y);

/// Points guaranteed one genus higher: each corner steps down in either
/// coordinate where it can; Q(0,0) is fixed.
QuadrantUnion genus_shift(const QuadrantUnion& s);

/// Corners move by (+b_K0, 0). Requires b_K0 >= 1.
QuadrantUnion g_to_b(const QuadrantUnion& s, std::int64_t b_K0);
/// Corners move by (-1, +b_K0). Requires b_K0 >= 1 and every a >= 1.
QuadrantUnion b_to_g(const QuadrantUnion& s, std::int64_t b_K0);
/// Corners move by (-1, 0). Requires every a >= 1.
QuadrantUnion b_vs_gU(const QuadrantUnion& s);

struct GenusTriple {
    std::int64_t g = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend auto operator<=>(const GenusTriple&, const GenusTriple&) = default;
};

/// Sets indexed by genus 0, 1, 2, ...
struct GenusFamily {
    std::vector<QuadrantUnion> per_genus;

    /// The last set is everything and no earlier one is.
    bool stabilized() const;
    /// Iterates genus_shift from `start` until Q(0,0) is reached. Throws
    /// std::invalid_argument for the empty set, which never stabilizes.
    static GenusFamily propagate(const QuadrantUnion& start);
};

/// All corners as (g, a, b), lexicographically sorted. Throws
/// std::invalid_argument unless the family is stabilized.
std::vector<GenusTriple> to_sequence(const GenusFamily& f);
/// Inverse of to_sequence. A genus with no triples is the empty set.
/// Throws std::invalid_argument on unsorted, non-minimal or unterminated input.
GenusFamily from_sequence(const std::vector<GenusTriple>& seq);

std::string sequence_to_string(const std::vector<GenusTriple>& seq);

/// Known-subset (realized) and known-superset (obstruction) staircases for
/// one genus. The true set lies between them.
struct StaircaseBounds {
    QuadrantUnion inner;
    QuadrantUnion outer;

    bool consistent() const { return outer.contains(inner); }
    bool exact() const { return inner == outer; }
};

}  // namespace kcob

#include "kcob/quadrant.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kcob {

QuadrantUnion QuadrantUnion::normalize(std::vector<Corner> points) {
    for (const auto& p : points) {
        if (p.a < 0 || p.b < 0) {
            throw std::invalid_argument("quadrant corner (" + std::to_string(p.a) + "," + std::to_string(p.b) +
                                        ") has a negative coordinate");
        }
    }
    std::sort(points.begin(), points.end());
    QuadrantUnion out;
    // Sorted by a ascending; a corner survives iff its b is below every b
    // seen so far.
    for (const auto& p : points) {
        if (out.corners_.empty() || p.b < out.corners_.back().b) out.corners_.push_back(p);
    }
    return out;
}

bool QuadrantUnion::member(std::int64_t c0, std::int64_t c2) const {
    for (const auto& c : corners_)
        if (c0 >= c.a && c2 >= c.b) return true;
    return false;
}

bool QuadrantUnion::contains(const QuadrantUnion& other) const {
    for (const auto& c : other.corners_)
        if (!member(c.a, c.b)) return false;
    return true;
}

std::string QuadrantUnion::to_string() const {
    if (corners_.empty()) return "empty";
    std::ostringstream os;
    for (std::size_t i = 0; i < corners_.size(); ++i) {
        if (i) os << " u ";
        os << "Q(" << corners_[i].a << "," << corners_[i].b << ")";
    }
    return os.str();
}

QuadrantUnion normalize(std::vector<Corner> points) { return QuadrantUnion::normalize(std::move(points)); }

bool member(const QuadrantUnion& s, std::int64_t c0, std::int64_t c2) { return s.member(c0, c2); }

QuadrantUnion unite(const QuadrantUnion& x, const QuadrantUnion& y) {
    std::vector<Corner> pts = x.corners();
    pts.insert(pts.end(), y.corners().begin(), y.corners().end());
    return normalize(std::move(pts));
}

QuadrantUnion intersect(const QuadrantUnion& x, const QuadrantUnion& y) {
    std::vector<Corner> pts;
    for (const auto& p : x.corners())
        for (const auto& q : y.corners()) pts.push_back({std::max(p.a, q.a), std::max(p.b, q.b)});
    return normalize(std::move(pts));
}

QuadrantUnion genus_shift(const QuadrantUnion& s) {
    std::vector<Corner> pts;
    for (const auto& c : s.corners()) {
        if (c.a > 0) pts.push_back({c.a - 1, c.b});
        if (c.b > 0) pts.push_back({c.a, c.b - 1});
        if (c.a == 0 && c.b == 0) pts.push_back(c);
    }
    return normalize(std::move(pts));
}

namespace {

void require_b(std::int64_t b_K0) {
    if (b_K0 < 1) throw std::invalid_argument("transfer needs b(K0) >= 1, got " + std::to_string(b_K0));
}

void require_positive_a(const QuadrantUnion& s, const char* what) {
    for (const auto& c : s.corners())
        if (c.a < 1) {
            throw std::invalid_argument(std::string(what) + ": corner (" + std::to_string(c.a) + "," +
                                        std::to_string(c.b) + ") has c0 = 0");
        }
}

QuadrantUnion translate(const QuadrantUnion& s, std::int64_t da, std::int64_t db) {
    std::vector<Corner> pts;
    constexpr std::int64_t top = std::numeric_limits<std::int64_t>::max();
    for (const auto& c : s.corners()) {
        if (c.a > top - std::max<std::int64_t>(da, 0) || c.b > top - std::max<std::int64_t>(db, 0))
            throw std::out_of_range("quadrant corner overflows 64 bits");
        pts.push_back({c.a + da, c.b + db});
    }
    return normalize(std::move(pts));
}

}  // namespace

QuadrantUnion g_to_b(const QuadrantUnion& s, std::int64_t b_K0) {
    require_b(b_K0);
    return translate(s, b_K0, 0);
}

QuadrantUnion b_to_g(const QuadrantUnion& s, std::int64_t b_K0) {
    require_b(b_K0);
    require_positive_a(s, "b_to_g");
    return translate(s, -1, b_K0);
}

QuadrantUnion b_vs_gU(const QuadrantUnion& s) {
    require_positive_a(s, "b_vs_gU");
    return translate(s, -1, 0);
}

bool GenusFamily::stabilized() const {
    if (per_genus.empty() || !per_genus.back().is_everything()) return false;
    for (std::size_t g = 0; g + 1 < per_genus.size(); ++g)
        if (per_genus[g].is_everything()) return false;
    return true;
}

GenusFamily GenusFamily::propagate(const QuadrantUnion& start) {
    if (start.empty()) throw std::invalid_argument("cannot propagate the empty set");
    GenusFamily f;
    f.per_genus.push_back(start);
    // Each step lowers min(a + b) by one, so this terminates.
    while (!f.per_genus.back().is_everything()) f.per_genus.push_back(genus_shift(f.per_genus.back()));
    return f;
}

std::vector<GenusTriple> to_sequence(const GenusFamily& f) {
    if (!f.stabilized()) throw std::invalid_argument("to_sequence: family has not stabilized at Q(0,0)");
    std::vector<GenusTriple> seq;
    for (std::size_t g = 0; g < f.per_genus.size(); ++g)
        for (const auto& c : f.per_genus[g].corners()) seq.push_back({static_cast<std::int64_t>(g), c.a, c.b});
    return seq;
}

GenusFamily from_sequence(const std::vector<GenusTriple>& seq) {
    if (seq.empty()) throw std::invalid_argument("from_sequence: empty sequence");
    if (!std::is_sorted(seq.begin(), seq.end()) || std::adjacent_find(seq.begin(), seq.end()) != seq.end())
        throw std::invalid_argument("from_sequence: triples are not strictly increasing");
    GenusFamily f;
    for (const auto& t : seq) {
        if (t.g < 0) throw std::invalid_argument("from_sequence: negative genus");
        if (static_cast<std::size_t>(t.g) >= f.per_genus.size()) f.per_genus.resize(t.g + 1);
    }
    std::vector<std::vector<Corner>> raw(f.per_genus.size());
    for (const auto& t : seq) raw[t.g].push_back({t.a, t.b});
    for (std::size_t g = 0; g < raw.size(); ++g) {
        f.per_genus[g] = normalize(raw[g]);
        if (f.per_genus[g].corners() != raw[g])
            throw std::invalid_argument("from_sequence: corners at g=" + std::to_string(g) + " are not minimal");
    }
    if (!f.stabilized()) throw std::invalid_argument("from_sequence: sequence must end at its first (g,0,0)");
    return f;
}

std::string sequence_to_string(const std::vector<GenusTriple>& seq) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) os << ',';
        os << '(' << seq[i].g << ',' << seq[i].a << ',' << seq[i].b << ')';
    }
    os << ')';
    return os.str();
}

}  // namespace kcob

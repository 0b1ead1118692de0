#include "kcob/knot.hpp"

#include <regex>
#include <stdexcept>

namespace kcob {

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
    if (!v_.is_square()) throw std::invalid_argument("Seifert matrix must be square");
    if (v_.rows() % 2 != 0) throw std::invalid_argument("Seifert matrix must have even size");
    Integer d = determinant(v_ - v_.transpose());
    if (abs(d) != 1) {
        throw std::invalid_argument("Seifert matrix has det(V - V^T) = " + d.get_str() + ", expected +-1");
    }
}

namespace {

void require_positive(const Integer& k, const char* what) {
    if (k < 1) throw std::invalid_argument(std::string(what) + ": k must be >= 1, got " + k.get_str());
}

IntMatrix two_by_two(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    return IntMatrix(2, 2, {a, b, c, d});
}

}  // namespace

SeifertMatrix pretzel_Pk(const Integer& k) {
    require_positive(k, "pretzel_Pk");
    return SeifertMatrix(two_by_two(0, k, k + 1, 0));
}

SeifertMatrix two_bridge_KkJ(const Integer& k) {
    require_positive(k, "two_bridge_KkJ");
    return SeifertMatrix(two_by_two(k + 1, 1, 0, -k));
}

SeifertMatrix two_bridge_KkJ_alt(const Integer& k) {
    require_positive(k, "two_bridge_KkJ_alt");
    return SeifertMatrix(two_by_two(0, k + 1, k, -k));
}

SeifertMatrix pretzel_P333() { return pretzel_Pk(1); }

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    return SeifertMatrix(block_diagonal(a.matrix(), b.matrix()));
}

SeifertMatrix mirror(const SeifertMatrix& a) { return SeifertMatrix(-a.matrix()); }

SeifertMatrix reverse(const SeifertMatrix& a) { return SeifertMatrix(a.matrix().transpose()); }

void DecoratedKnot::validate() const {
    if (summands < 1) throw std::invalid_argument("knot '" + name + "': summands must be >= 1");
    for (const auto& d : decorations) {
        if (d.band >= seifert.size()) {
            throw std::invalid_argument("knot '" + name + "': band index " + std::to_string(d.band) +
                                        " out of range for a " + std::to_string(seifert.size()) +
                                        "x" + std::to_string(seifert.size()) + " Seifert matrix");
        }
        if (!d.companion) throw std::invalid_argument("knot '" + name + "': decoration without companion");
        if (sgn(d.copies) < 0) throw std::invalid_argument("knot '" + name + "': negative copies");
        d.companion->validate();
    }
}

SeifertMatrix DecoratedKnot::expanded_seifert() const {
    if (summands > 256) {
        throw std::out_of_range("knot '" + name + "': " + summands.get_str() +
                                " summands is too many to expand into one matrix");
    }
    const long n = summands.get_si();
    IntMatrix v;
    for (long i = 0; i < n; ++i) v = block_diagonal(v, seifert.matrix());
    return SeifertMatrix(std::move(v));
}

bool operator==(const BandDecoration& a, const BandDecoration& b) {
    if (a.band != b.band || a.copies != b.copies) return false;
    if (!a.companion || !b.companion) return !a.companion && !b.companion;
    return *a.companion == *b.companion;
}

bool operator==(const DecoratedKnot& a, const DecoratedKnot& b) {
    return a.name == b.name && a.seifert == b.seifert && a.summands == b.summands &&
           a.decorations == b.decorations;
}

DecoratedKnot make_knot(std::string name, SeifertMatrix seifert, Integer summands) {
    DecoratedKnot k{std::move(name), std::move(seifert), {}, std::move(summands)};
    k.validate();
    return k;
}

namespace {

// Decorations of the summands-fold sum, bands shifted by `offset`.
void append_expanded(const DecoratedKnot& k, std::size_t& offset, IntMatrix& v,
                     std::vector<BandDecoration>& decos) {
    const SeifertMatrix full = k.expanded_seifert();
    const long n = k.summands.get_si();
    for (long i = 0; i < n; ++i) {
        for (auto d : k.decorations) {
            d.band += offset + static_cast<std::size_t>(i) * k.seifert.size();
            decos.push_back(std::move(d));
        }
    }
    v = block_diagonal(v, full.matrix());
    offset += full.size();
}

std::string summand_label(const DecoratedKnot& k) {
    return k.summands == 1 ? k.name : k.summands.get_str() + k.name;
}

}  // namespace

DecoratedKnot connected_sum(const DecoratedKnot& a, const DecoratedKnot& b) {
    DecoratedKnot out;
    out.name = summand_label(a) + " # " + summand_label(b);
    std::size_t offset = 0;
    IntMatrix v;
    append_expanded(a, offset, v, out.decorations);
    append_expanded(b, offset, v, out.decorations);
    out.seifert = SeifertMatrix(std::move(v));
    return out;
}

DecoratedKnot mirror(const DecoratedKnot& k) {
    DecoratedKnot out = k;
    out.name = "-" + k.name;
    out.seifert = mirror(k.seifert);
    for (auto& d : out.decorations) d.companion = std::make_shared<const DecoratedKnot>(mirror(*d.companion));
    return out;
}

DecoratedKnot reverse(const DecoratedKnot& k) {
    DecoratedKnot out = k;
    out.name = k.name + "^r";
    out.seifert = reverse(k.seifert);
    for (auto& d : out.decorations) d.companion = std::make_shared<const DecoratedKnot>(reverse(*d.companion));
    return out;
}

std::optional<DecoratedKnot> builtin_knot(const std::string& name) {
    if (name == "unknot" || name == "U") return make_knot("unknot", SeifertMatrix());
    if (name == "6_1") return make_knot("6_1", two_bridge_KkJ(1));
    if (name == "10_3") return make_knot("10_3", two_bridge_KkJ(2));
    if (name == "P(3,-3,3)") return make_knot("P(3,-3,3)", pretzel_P333());
    static const std::regex pk(R"(P([1-9][0-9]*))");
    static const std::regex kk(R"(K\(([1-9][0-9]*),U\))");
    std::smatch m;
    if (std::regex_match(name, m, pk)) return make_knot(name, pretzel_Pk(parse_integer(m[1].str())));
    if (std::regex_match(name, m, kk)) return make_knot(name, two_bridge_KkJ(parse_integer(m[1].str())));
    return std::nullopt;
}

std::vector<std::string> builtin_names() { return {"unknot", "6_1", "10_3", "P<k>", "P(3,-3,3)", "K(<k>,U)"}; }

}  // namespace kcob

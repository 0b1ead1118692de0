#include "kcob/linking_form.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kcob {

LinkingForm::LinkingForm(std::vector<std::uint32_t> orders, const std::vector<std::vector<Rational>>& values)
    : orders_(std::move(orders)) {
    const std::size_t k = orders_.size();
    if (values.size() != k) throw std::invalid_argument("linking form: value matrix has the wrong size");
    for (auto o : orders_) {
        if (o < 2) throw std::invalid_argument("linking form: cyclic orders must be >= 2");
        size_ *= o;
        if (size_ > 1000000) throw std::invalid_argument("linking form: group has more than 10^6 elements");
        den_ = std::lcm(den_, static_cast<std::uint64_t>(o));
    }
    residues_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (values[i].size() != k) throw std::invalid_argument("linking form: value matrix is not square");
        for (std::size_t j = 0; j < k; ++j) {
            Rational v = values[i][j];
            v.canonicalize();
            if (v != values[j][i]) throw std::invalid_argument("linking form: values are not symmetric");
            // Must be killed by the order of either generator.
            Rational a = v * orders_[i], b = v * orders_[j];
            a.canonicalize();
            b.canonicalize();
            if (a.get_den() != 1 || b.get_den() != 1)
                throw std::invalid_argument("linking form: value " + v.get_str() + " is not defined on the summands");
            Rational scaled = v * static_cast<unsigned long>(den_);
            scaled.canonicalize();
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), scaled.get_num_mpz_t(), den_);
            residues_[i * k + j] = r.get_ui();
        }
    }
    // Nonsingular: no nonzero element pairs trivially with every generator.
    for (std::uint64_t idx = 1; idx < size_; ++idx) {
        Element x = element_at(idx);
        bool dead = true;
        for (std::size_t j = 0; j < k && dead; ++j) {
            Element e(k, 0);
            e[j] = 1;
            if (pair_residue(x, e) != 0) dead = false;
        }
        if (dead) throw std::invalid_argument("linking form is singular");
    }
}

LinkingForm LinkingForm::standard(std::uint32_t n, std::uint32_t m) {
    const std::size_t k = n + m;
    if (k == 0) throw std::invalid_argument("standard form needs n + m >= 1");
    std::vector<std::vector<Rational>> v(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) v[i][i] = i < n ? Rational(2, 9) : Rational(-2, 9);
    return LinkingForm(std::vector<std::uint32_t>(k, 9), v);
}

std::uint64_t LinkingForm::pair_residue(const Element& x, const Element& y) const {
    const std::size_t k = orders_.size();
    unsigned __int128 acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < k; ++j)
            acc += static_cast<unsigned __int128>(x[i]) * y[j] % den_ * residues_[i * k + j] % den_;
    }
    return static_cast<std::uint64_t>(acc % den_);
}

Rational LinkingForm::pair(const Element& x, const Element& y) const {
    Rational r(Integer(std::to_string(pair_residue(x, y))), Integer(std::to_string(den_)));
    r.canonicalize();
    return r;
}

Rational LinkingForm::value(std::size_t i, std::size_t j) const {
    Rational r(Integer(std::to_string(residues_.at(i * orders_.size() + j))), Integer(std::to_string(den_)));
    r.canonicalize();
    return r;
}

std::uint64_t LinkingForm::index_of(const Element& x) const {
    if (x.size() != orders_.size()) throw std::invalid_argument("element has the wrong number of coordinates");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + x[i] % orders_[i];
    return idx;
}

Element LinkingForm::element_at(std::uint64_t index) const {
    Element x(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
        x[i] = static_cast<std::uint32_t>(index % orders_[i]);
        index /= orders_[i];
    }
    return x;
}

namespace {

constexpr std::uint64_t kMaxEnumeration = 6561;  // 9^4

// Element arithmetic on precomputed coordinates.
class Group {
public:
    explicit Group(const LinkingForm& f) : form_(f), k_(f.orders().size()) {
        const std::uint64_t n = f.group_order();
        coords_.resize(n * k_);
        for (std::uint64_t i = 0; i < n; ++i) {
            Element e = f.element_at(i);
            std::copy(e.begin(), e.end(), coords_.begin() + static_cast<std::ptrdiff_t>(i * k_));
        }
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < k_; ++i) {
            const auto o = form_.orders()[i];
            idx = idx * o + (coords_[a * k_ + i] + coords_[b * k_ + i]) % o;
        }
        return idx;
    }

    Element element(std::uint64_t a) const {
        return Element(coords_.begin() + static_cast<std::ptrdiff_t>(a * k_),
                       coords_.begin() + static_cast<std::ptrdiff_t>((a + 1) * k_));
    }

    std::uint64_t size() const { return form_.group_order(); }

private:
    const LinkingForm& form_;
    std::size_t k_;
    std::vector<std::uint32_t> coords_;
};

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::uint64_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set(Bits& b, std::uint64_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

struct Node {
    Bits bits;
    std::vector<std::uint64_t> members;
    std::vector<std::uint64_t> gens;
};

// H + <x> given H as a member list.
std::vector<std::uint64_t> extend(const Group& g, const std::vector<std::uint64_t>& h, std::uint64_t x, const Bits& hb) {
    std::vector<std::uint64_t> out = h;
    std::uint64_t step = x;
    while (!test(hb, step)) {
        for (auto m : h) out.push_back(g.add(m, step));
        step = g.add(step, x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Metabolizer to_metabolizer(const Group& g, const std::vector<std::uint64_t>& members) {
    Metabolizer m;
    m.members = members;
    // Greedy generators in index order.
    Bits span_bits((g.size() + 63) / 64, 0);
    std::vector<std::uint64_t> span{0};
    set(span_bits, 0);
    for (auto x : members) {
        if (test(span_bits, x)) continue;
        m.generators.push_back(g.element(x));
        span = extend(g, span, x, span_bits);
        for (auto s : span) set(span_bits, s);
    }
    return m;
}

}  // namespace

bool Metabolizer::contains(const LinkingForm& form, const Element& x) const {
    return std::binary_search(members.begin(), members.end(), form.index_of(x));
}

std::vector<Metabolizer> enumerate_isotropic_subgroups(const LinkingForm& form, std::uint64_t min_order) {
    if (form.group_order() > kMaxEnumeration) {
        throw std::invalid_argument("metabolizer enumeration supports groups of order <= 9^4, got " +
                                    std::to_string(form.group_order()));
    }
    const Group g(form);
    const std::uint64_t n = g.size();
    std::vector<Element> elems(n);
    std::vector<bool> self_isotropic(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        elems[i] = g.element(i);
        self_isotropic[i] = form.pair_residue(elems[i], elems[i]) == 0;
    }

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Node> stack;
    Node root{Bits((n + 63) / 64, 0), {0}, {}};
    set(root.bits, 0);
    seen.insert(root.members);
    stack.push_back(std::move(root));
    std::vector<std::vector<std::uint64_t>> found;

    while (!stack.empty()) {
        Node h = std::move(stack.back());
        stack.pop_back();
        if (h.members.size() >= min_order) found.push_back(h.members);
        Bits covered = h.bits;
        for (std::uint64_t x = 1; x < n; ++x) {
            if (test(covered, x) || !self_isotropic[x]) continue;
            bool orth = true;
            for (auto gen : h.gens)
                if (form.pair_residue(elems[x], elems[gen]) != 0) {
                    orth = false;
                    break;
                }
            if (!orth) continue;
            std::vector<std::uint64_t> child = extend(g, h.members, x, h.bits);
            // Every generator of child/H gives the same child; skip them all.
            // They are the elements whose class has the same order as x's.
            std::uint64_t d = child.size() / h.members.size();
            std::uint64_t step = x;
            for (std::uint64_t k = 1; k < d; ++k, step = g.add(step, x)) {
                if (std::gcd(k, d) != 1) continue;
                for (auto m : h.members) set(covered, g.add(m, step));
            }
            if (!seen.insert(child).second) continue;
            Node c{Bits((n + 63) / 64, 0), child, h.gens};
            for (auto m : child) set(c.bits, m);
            c.gens.push_back(x);
            stack.push_back(std::move(c));
        }
    }

    std::sort(found.begin(), found.end());
    std::vector<Metabolizer> out;
    out.reserve(found.size());
    for (const auto& members : found) out.push_back(to_metabolizer(g, members));
    return out;
}

std::vector<Metabolizer> enumerate_metabolizers(const LinkingForm& form) {
    std::vector<Metabolizer> out;
    for (auto& m : enumerate_isotropic_subgroups(form, 1))
        if (m.order() * m.order() == form.group_order()) out.push_back(std::move(m));
    return out;
}

std::vector<std::uint64_t> span(const LinkingForm& form, const std::vector<Element>& gens) {
    if (form.group_order() > 1000000) throw std::invalid_argument("group too large");
    const Group g(form);
    Bits bits((g.size() + 63) / 64, 0);
    std::vector<std::uint64_t> members{0};
    set(bits, 0);
    for (const auto& e : gens) {
        members = extend(g, members, form.index_of(e), bits);
        for (auto m : members) set(bits, m);
    }
    return members;
}

bool is_metabolizer(const LinkingForm& form, const std::vector<Element>& gens) {
    auto members = span(form, gens);
    if (members.size() * members.size() != form.group_order()) return false;
    for (auto a : members)
        for (auto b : members)
            if (form.pair_residue(form.element_at(a), form.element_at(b)) != 0) return false;
    return true;
}

SupportCheck metabolizer_support_check(std::uint32_t n, std::uint32_t m, std::uint32_t g) {
    if (n + m > 4) throw std::invalid_argument("support check needs n + m <= 4");
    if (n + m == 0) throw std::invalid_argument("support check needs n + m >= 1");
    SupportCheck out;
    if (n <= 2 * g) {
        out.status = SupportStatus::HypothesisViolated;
        return out;
    }
    const LinkingForm form = LinkingForm::standard(n, m);
    std::uint64_t min_order = 1;
    for (std::uint32_t i = 0; i < n + m - 2 * g; ++i) min_order *= 3;
    out.status = SupportStatus::Holds;
    for (auto& sub : enumerate_isotropic_subgroups(form, min_order)) {
        SupportWitness w{std::move(sub), std::nullopt};
        for (auto idx : w.subgroup.members) {
            Element x = form.element_at(idx);
            bool order3 = idx != 0 && std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c % 3 == 0; });
            bool first_block = std::any_of(x.begin(), x.begin() + n, [](std::uint32_t c) { return c != 0; });
            if (order3 && first_block) {
                w.witness = x;
                break;
            }
        }
        if (!w.witness) out.status = SupportStatus::Fails;
        out.subgroups.push_back(std::move(w));
    }
    return out;
}

}  // namespace kcob

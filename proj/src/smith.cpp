#include "kcob/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcob {

namespace {

struct Pivot {
    std::size_t row;
    std::size_t col;
};

// Smallest |entry| in the trailing block starting at (t, t).
bool find_min_pivot(const IntMatrix& a, std::size_t t, Pivot& out) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            Integer v = abs(a(i, j));
            if (!found || v < best) {
                best = v;
                out = {i, j};
                found = true;
                if (best == 1) return true;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix left = IntMatrix::identity(m.rows());
    IntMatrix right = IntMatrix::identity(m.cols());
    const std::size_t steps = std::min(m.rows(), m.cols());

    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
        a.add_row_multiple(dst, src, f);
        left.add_row_multiple(dst, src, f);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
        a.add_col_multiple(dst, src, f);
        right.add_col_multiple(dst, src, f);
    };

    for (std::size_t t = 0; t < steps; ++t) {
        Pivot piv{};
        if (!find_min_pivot(a, t, piv)) break;
        for (;;) {
            a.swap_rows(t, piv.row);
            left.swap_rows(t, piv.row);
            a.swap_cols(t, piv.col);
            right.swap_cols(t, piv.col);

            bool cleared = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (sgn(a(i, t)) == 0) continue;
                Integer q = floor_div(a(i, t), a(t, t));
                row_add(i, t, -q);
                if (sgn(a(i, t)) != 0) cleared = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (sgn(a(t, j)) == 0) continue;
                Integer q = floor_div(a(t, j), a(t, t));
                col_add(j, t, -q);
                if (sgn(a(t, j)) != 0) cleared = false;
            }
            if (!cleared) {
                find_min_pivot(a, t, piv);
                continue;
            }
            // Pivot must divide the rest of the block; otherwise fold a
            // offending row into row t and reduce again.
            bool divides = true;
            for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        row_add(t, i, Integer(1));
                        divides = false;
                        break;
                    }
            if (!divides) {
                find_min_pivot(a, t, piv);
                continue;
            }
            break;
        }
        if (sgn(a(t, t)) < 0) {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    SmithForm result;
    result.diagonal.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) result.diagonal.push_back(a(t, t));
    result.left = std::move(left);
    result.right = std::move(right);
    return result;
}

AbelianGroup cokernel_group(const IntMatrix& m) {
    SmithForm snf = smith_normal_form(m);
    std::vector<Integer> orders = snf.diagonal;
    // Generators beyond the diagonal carry no relation.
    orders.insert(orders.end(), m.cols() - snf.diagonal.size(), Integer(0));
    return AbelianGroup::from_cyclic_orders(orders);
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: " + std::to_string(p) + " is not prime");
    using u128 = unsigned __int128;
    const Integer P(std::to_string(p));
    std::vector<std::uint64_t> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), m.entries()[i].get_mpz_t(), P.get_mpz_t());
        a[i] = to_uint64(r);
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * m.cols() + c]; };
    auto mulmod = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>((u128)x * y % p); };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(at(piv, c), at(rank, c));
        std::uint64_t inv = powmod(at(rank, col), p - 2);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (at(r, col) == 0) continue;
            std::uint64_t f = mulmod(at(r, col), inv);
            for (std::size_t c = col; c < m.cols(); ++c) {
                std::uint64_t sub = mulmod(f, at(rank, c));
                at(r, c) = at(r, c) >= sub ? at(r, c) - sub : at(r, c) + (p - sub);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace kcob

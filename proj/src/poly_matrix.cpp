#include "kcob/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcob {

PolyMatrix PolyMatrix::linear_pencil(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("linear_pencil: dimension mismatch");
    }
    PolyMatrix m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m(r, c) = RatPoly(std::vector<Rational>{Rational(-b(r, c)), Rational(a(r, c))});
    return m;
}

RatPoly ModuleDecomposition::order() const {
    RatPoly p(Rational(1));
    for (const auto& f : invariant_factors) p *= f;
    return p;
}

namespace {

class Reducer {
public:
    explicit Reducer(const PolyMatrix& m) : a_(m) {}

    std::vector<RatPoly> run() {
        const std::size_t steps = std::min(a_.rows(), a_.cols());
        std::vector<RatPoly> diag;
        for (std::size_t t = 0; t < steps; ++t) {
            if (!move_min_pivot(t)) break;
            for (;;) {
                bool cleared = true;
                for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                    if (a_(i, t).is_zero()) continue;
                    RatPoly q = divmod(a_(i, t), a_(t, t)).first;
                    for (std::size_t c = t; c < a_.cols(); ++c) a_(i, c) -= q * a_(t, c);
                    if (!a_(i, t).is_zero()) cleared = false;
                }
                for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                    if (a_(t, j).is_zero()) continue;
                    RatPoly q = divmod(a_(t, j), a_(t, t)).first;
                    for (std::size_t r = t; r < a_.rows(); ++r) a_(r, j) -= q * a_(r, t);
                    if (!a_(t, j).is_zero()) cleared = false;
                }
                if (!cleared) {
                    move_min_pivot(t);
                    continue;
                }
                bool folded = false;
                for (std::size_t i = t + 1; i < a_.rows() && !folded; ++i)
                    for (std::size_t j = t + 1; j < a_.cols(); ++j)
                        if (!divides(a_(t, t), a_(i, j))) {
                            for (std::size_t c = t; c < a_.cols(); ++c) a_(t, c) += a_(i, c);
                            folded = true;
                            break;
                        }
                if (folded) {
                    move_min_pivot(t);
                    continue;
                }
                break;
            }
            diag.push_back(a_(t, t).monic());
        }
        // Missing diagonal slots are zero relations, i.e. free summands.
        diag.resize(a_.cols(), RatPoly{});
        return diag;
    }

private:
    bool move_min_pivot(std::size_t t) {
        bool found = false;
        std::size_t br = 0, bc = 0;
        long best = 0;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const RatPoly& e = a_(i, j);
                if (e.is_zero()) continue;
                if (!found || e.degree() < best) {
                    found = true;
                    best = e.degree();
                    br = i;
                    bc = j;
                }
            }
        if (!found) return false;
        if (br != t)
            for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(br, c), a_(t, c));
        if (bc != t)
            for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, bc), a_(r, t));
        return true;
    }

    PolyMatrix a_;
};

}  // namespace

ModuleDecomposition poly_smith_normal_form(const PolyMatrix& m) {
    std::vector<RatPoly> diag = Reducer(m).run();
    ModuleDecomposition out;
    for (auto& f : diag) {
        // Nonzero constants are units in Q[t].
        if (!f.is_zero() && f.is_constant()) continue;
        out.invariant_factors.push_back(std::move(f));
    }
    return out;
}

RatPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return RatPoly(Rational(1));
    PolyMatrix a = m;
    RatPoly sign(Rational(1));
    RatPoly prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t s = k + 1;
            while (s < n && a(s, k).is_zero()) ++s;
            if (s == n) return {};
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(s, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = divmod(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev).first;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace kcob

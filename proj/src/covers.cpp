#include "kcob/covers.hpp"

#include <stdexcept>

#include "kcob/errors.hpp"
#include "kcob/factor.hpp"
#include "kcob/smith.hpp"

namespace kcob {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

}  // namespace

IntMatrix gamma_matrix(const IntMatrix& v) {
    const IntMatrix vt = v.transpose();
    IntMatrix inv;
    try {
        inv = inverse_unimodular(vt - v);
    } catch (const std::domain_error&) {
        throw std::domain_error("gamma_matrix: V - V^T is not unimodular");
    }
    return inv * vt;
}

AbelianGroup branched_cover_homology(const SeifertMatrix& v, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("cover order n must be >= 2, got " + std::to_string(n));
    if (n > 100000) throw std::out_of_range("cover order n = " + std::to_string(n) + " is too large");
    if (v.size() == 0) return AbelianGroup();
    const IntMatrix g = gamma_matrix(v);
    const IntMatrix id = IntMatrix::identity(v.size());
    const IntMatrix pres = g.pow(static_cast<unsigned>(n)) - (g - id).pow(static_cast<unsigned>(n));
    AbelianGroup h = cokernel_group(pres);
    if (n == 2) {
        AbelianGroup direct = cokernel_group(v.matrix() + v.matrix().transpose());
        if (!(direct == h)) {
            throw InvariantViolation("double cover homology mismatch: " + h.to_string() + " vs " + direct.to_string());
        }
    }
    return h;
}

std::vector<std::uint64_t> roots_of_unity(std::uint64_t n, std::uint64_t p) {
    require_prime(p);
    if (p > 10000) throw std::domain_error("roots_of_unity: p = " + std::to_string(p) + " exceeds 10^4");
    if (n == 0) throw std::invalid_argument("roots_of_unity: n must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t z = 1; z < p; ++z)
        if (powmod(z, n, p) == 1) out.push_back(z);
    return out;
}

std::size_t eigenspace_betti(const SeifertMatrix& v, std::uint64_t n, std::uint64_t p, const Integer& zeta) {
    require_prime(p);
    if (n == 0) throw std::invalid_argument("cover order must be positive");
    if (n % p == 0) throw std::invalid_argument("p = " + std::to_string(p) + " divides the cover order " + std::to_string(n));
    Integer z;
    mpz_fdiv_r_ui(z.get_mpz_t(), zeta.get_mpz_t(), p);
    const std::uint64_t zu = z.get_ui();
    if (powmod(zu, n, p) != 1) {
        throw std::invalid_argument("zeta = " + zeta.get_str() + " is not an " + std::to_string(n) +
                                    "-th root of unity mod " + std::to_string(p));
    }
    if (zu == 1 || v.size() == 0) return 0;
    const IntMatrix m = v.matrix() * Integer(zu) - v.matrix().transpose();
    return v.size() - rank_mod_p(m, p);
}

std::size_t EigenBettiTable::at(std::uint64_t n, std::uint64_t p, std::uint64_t zeta) const {
    auto it = entries.find({n, p, zeta});
    if (it == entries.end()) {
        throw std::out_of_range("no eigen table entry for (n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                                ", zeta=" + std::to_string(zeta) + ")");
    }
    return it->second;
}

std::size_t EigenBettiTable::row_sum(std::uint64_t n, std::uint64_t p) const {
    std::size_t s = 0;
    for (auto it = entries.lower_bound({n, p, 0}); it != entries.end() && it->first.n == n && it->first.p == p; ++it)
        s += it->second;
    return s;
}

void EigenBettiTable::merge(const EigenBettiTable& other) {
    for (const auto& [k, v] : other.entries) entries[k] = v;
}

EigenBettiTable eigenspace_table(const SeifertMatrix& v, std::uint64_t n, std::uint64_t p) {
    require_prime(p);
    if (n < 2) throw std::invalid_argument("cover order n must be >= 2");
    if ((p - 1) % n != 0) {
        throw std::domain_error("F_" + std::to_string(p) + " has no primitive " + std::to_string(n) + "-th root of unity");
    }
    EigenBettiTable t;
    for (std::uint64_t z : roots_of_unity(n, p)) t.entries[{n, p, z}] = eigenspace_betti(v, n, p, Integer(z));
    const std::size_t expected = branched_cover_homology(v, n).dim_mod_p(Integer(p));
    if (t.row_sum(n, p) != expected) {
        throw InvariantViolation("eigenspace sum " + std::to_string(t.row_sum(n, p)) + " != dim H_1 (x) F_" +
                                 std::to_string(p) + " = " + std::to_string(expected));
    }
    return t;
}

AlexanderInvariants alexander_invariants(const SeifertMatrix& v) {
    AlexanderInvariants out;
    out.decomposition = poly_smith_normal_form(PolyMatrix::linear_pencil(v.matrix(), v.matrix().transpose()));
    out.rank = out.decomposition.rank();
    if (out.decomposition.invariant_factors.empty()) return out;
    const RatPoly& top = out.decomposition.invariant_factors.back();
    if (top.is_zero()) throw InvariantViolation("Alexander module of a knot has a free summand");
    // Every factor divides the last one, so its radical carries all primes.
    for (const auto& [part, _] : squarefree_decomposition(top)) {
        for (const auto& [f, mult] : factor_rational_poly(part).factors) {
            std::size_t count = 0;
            for (const auto& inv : out.decomposition.invariant_factors)
                if (divides(f, inv)) ++count;
            out.primary_ranks[f] = count;
        }
    }
    return out;
}

RatPoly alexander_polynomial(const SeifertMatrix& v) {
    return determinant(PolyMatrix::linear_pencil(v.matrix(), v.matrix().transpose()));
}

}  // namespace kcob

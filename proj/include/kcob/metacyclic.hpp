#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kcob/abelian_group.hpp"
#include "kcob/bounds.hpp"
#include "kcob/int_matrix.hpp"
#include "kcob/knot.hpp"

namespace kcob {

// Surgery on K(1, J): Mayer-Vietoris relations among the generators
// (alpha, beta1, beta2, m1, m2, gamma) of the 3-fold cover of M_2.

/// 6 x 6 relation matrix, one relation per row.
IntMatrix mv_relation_matrix();
/// Cokernel of mv_relation_matrix(); Z3.
AbelianGroup mv_quotient_group();
/// The same presentation with two untouched copies of T adjoined.
AbelianGroup mv_quotient_with_torsion(const AbelianGroup& t);

/// H_1 of the metacyclic cover of K(1, J): Z3 + H_1(M_3(J))^2. The closed form
/// is cross-checked against the relation matrix. Decorations on J are ignored.
/// Throws std::out_of_range when J.summands exceeds 10^4.
AbelianGroup metacyclic_homology_K1J(const DecoratedKnot& j);

/// Companion families: K(1, alpha 6_1) and K(1, beta 10_3).
enum class Family { Alpha, Beta };
std::string to_string(Family f);
/// "alpha"/"6_1" or "beta"/"10_3"; std::invalid_argument otherwise.
Family family_from_string(const std::string& s);
/// The companion knot of the family.
DecoratedKnot family_companion(Family f);

/// Betti number of the primitive-cube-root eigenspace on the metacyclic cover
/// of K(1, coeff J) over F_p, p in {7, 19} (std::invalid_argument otherwise).
Integer metacyclic_eigen_betti(Family family, const Integer& coeff, std::uint64_t p);

struct CoverDescription {
    /// Summand name -> multiplicity, zeros omitted.
    std::map<std::string, Integer> summands;
    std::string to_string() const;
    nlohmann::json to_json() const;
};

/// 3-fold cover of n L(9,2)-cores with a of them lifted: a L(3,2), 3(n-a) L(9,2),
/// 2(a-1) S1xS2. Requires 1 <= a <= n.
CoverDescription lens_cover_decomposition(const Integer& n, const Integer& a);

/// Eigenspace Betti number for a boundary with n summands, a of them carrying
/// the nontrivial character. Requires 0 <= a <= n and p in {7, 19}.
Integer multi_eigen_betti(Family family, const Integer& n, const Integer& a, const Integer& coeff, std::uint64_t p);

/// c0 bound for a genus-g cobordism from n K(1, alpha 6_1) to m K(1, beta 10_3).
/// Throws std::invalid_argument unless n > 2g (and alpha, g >= 0, m >= 1).
BoundCertificate metacyclic_c0_bound(const Integer& alpha, const Integer& m, const Integer& g, const Integer& n);

/// Realized (c0, c2) corner for the same family.
/// Requires 0 <= g <= min(n(2 alpha + 1), m(2 beta + 1)).
std::pair<Integer, Integer> realization_upper(const Integer& n, const Integer& m, const Integer& alpha,
                                              const Integer& beta, const Integer& g);

// Equivariant metabolizers for P(J1, J2) versus its reverse. Coordinates are
// over F_7 in the basis (z, w, z*, w*) of H_1(M_3(P)) + H_1(-M_3(P*)), with
// deck eigenvalues (2, 4, 4, 2).

struct Coupling {
    std::string cover;      // "M3(P)" or "M3(P*)"
    std::string vector;     // "z", "w", "z*", "w*"
    std::string companion;  // "J1" or "J2"
};

struct EquivariantMetabolizer {
    int case_number = 0;  // 1: 2-eigenspace, 2: 4-eigenspace, 3: mixed
    /// Row-reduced spanning vectors.
    std::array<std::array<std::uint32_t, 4>, 2> basis{};
    /// Mixed case only: 2-eigenvector a z + b w*, 4-eigenvector c w + d z*.
    /// Each pair is scaled so its first nonzero entry is 1.
    std::array<std::uint32_t, 4> abcd{};
    std::vector<Coupling> couplings;
};

struct CompanionHomology {
    std::string label;  // "J1" or "J2"
    std::string name;
    std::size_t band = 0;
    /// H_1(M_7) of a single summand of the companion.
    AbelianGroup m7;
    /// Number of summands (copies times the companion's own summands).
    Integer multiplicity;
};

struct ReversibilityReport {
    AbelianGroup cover_homology;
    std::map<std::uint64_t, std::size_t> eigen_betti;  // zeta -> dim over F_7
    std::array<CompanionHomology, 2> companions;
    std::size_t subspaces_examined = 0;
    std::vector<EquivariantMetabolizer> metabolizers;

    std::array<std::size_t, 3> case_counts() const;
    nlohmann::json to_json() const;
};

/// Requires two decorations on distinct bands, H_1(M_3(P)) = Z7 + Z7 and
/// deck eigenvalues exactly {2, 4} over F_7 (std::invalid_argument otherwise).
/// J1 is the companion on the lower-numbered band.
ReversibilityReport reversibility_cases(const DecoratedKnot& p);

}  // namespace kcob

#pragma once

#include "qmu/podles.hpp"
#include "qmu/report.hpp"

namespace qmu {

/// The quantum SO(3) inside O(SU_mu(2)): even-degree subalgebra generated by
/// N = g*g, M = ag, C = ag*, G = g^2, L = a^2.
struct SOmu3Generators {
    NCPoly N, M, C, G, L;
};
SOmu3Generators make_somu3_generators(const Presentation& su2p);

// All nineteen defining relations, verified through the identification.
std::vector<std::pair<std::string, std::vector<NCPoly>>> somu3_relation_residuals(
    const Presentation& su2p, const SOmu3Generators& g);

/// First-leg coefficients of the canonical coaction on the sphere:
///   Delta(A) = 1 (x) T1 + A (x) T2 + B (x) T3 + B* (x) T4,
///   Delta(B) = 1 (x) S1 + A (x) S2 + B (x) S3 + B* (x) S4.
/// Zero residual of the extraction is the concrete linearity statement.
struct CoactionCoefficients {
    NCPoly T1, T2, T3, T4, S1, S2, S3, S4;
    bool extraction_ok = false;
    bool all_even_degree = false;
};
CoactionCoefficients extract_TS(const HopfAlgebra& su2h, const SphereEmbedding& e);

/// The 3x3 corepresentation matrix on the normalized basis {x'_-1, x'_0, x'_1}
/// assembled from the extracted coefficients, and the concrete SO_mu(3)-valued
/// matrix it must equal entrywise.
struct ZMatrices {
    std::vector<std::vector<NCPoly>> Z;        // from T/S, includes the r radical
    std::vector<std::vector<NCPoly>> Z_prime;  // concrete SU_mu(2) entries
};
ZMatrices build_z_matrices(const RadicalTower& tower, const Presentation& su2p,
                           const CoactionCoefficients& ts);

struct IdentityCheck {
    std::string id;
    std::string source;
    NCPoly residual;
    bool pass() const { return residual.is_zero(); }
};

// Z = Z' entrywise, Z*Z = I and ZZ* = I entrywise (scalar arithmetic carries
// the radical), plus the radical-free reformulation obtained by clearing the
// row/column scalings with D = diag(1, r, 1).
std::vector<IdentityCheck> z_unitarity(const RadicalTower& tower, const Presentation& su2p,
                                       const CoactionCoefficients& ts);

// The nine antipode-table entries, via the O(SU_mu(2)) antipode restricted to
// the even subalgebra.
std::vector<IdentityCheck> antipode_table_check(const HopfAlgebra& su2h,
                                                const CoactionCoefficients& ts);

// The frozen identity catalog (equation ids eq5..eq44, rem3.3, lemma ids).
// Empty selection runs everything.
std::vector<IdentityCheck> relation_suite(const RadicalTower& tower, const Presentation& su2p,
                                          const CoactionCoefficients& ts,
                                          const std::vector<std::string>& only = {});
std::vector<std::string> relation_suite_ids();

// The five exact identities sending the canonical generators onto the
// extracted coefficients (computational content of the main theorem).
std::vector<IdentityCheck> homomorphism_map_check(const Presentation& su2p,
                                                  const SOmu3Generators& g,
                                                  const CoactionCoefficients& ts);

struct W32Report {
    bool extraction_ok = false;      // all nine coaction expansions close
    size_t complement_dim = 0;       // h-orthogonal complement of W_{1/2}
    bool intersection_trivial = false;
    bool invariance_ok = false;      // Delta(W'') stays inside W'' (x) algebra
};
W32Report w32_decomposition_check(const HopfAlgebra& su2h, const Presentation& su2p,
                                  const SphereEmbedding& e);

}  // namespace qmu

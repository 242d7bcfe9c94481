#pragma once

#include "qmu/hopf.hpp"

namespace qmu {

/// The Podles sphere realized inside O(SU_mu(2)):
///
///   x_-1 = (mu a^2 + rho (1+mu^2) a g - mu^2 g^2) / (mu (1+mu^2)^{1/2})
///   x_0  = -mu g* a + rho (1 - (1+mu^2) g* g) - g a*
///   x_1  = (mu^2 g*^2 - rho mu (1+mu^2) a* g* - mu a*^2) / (1+mu^2)^{1/2}
///
/// with rho^2 = mu^2 t^2 / ((mu^2+1)^2 (1-t)), and
///
///   A = (1 - t^{-1} x_0)/(1+mu^2),   B = mu (1+mu^2)^{-1/2} t^{-1} x_-1.
///
/// X_c = mu^{1/2} (mu^{-1}-mu)^{-1} c^{-1/2} (1-K^2) + EK + mu FK cuts the
/// sphere out of O(SU_mu(2)) as the right annihilator.
struct SphereEmbedding {
    NCPoly x_m1, x_0, x_1;  // in O(SU_mu(2))
    NCPoly A, B, Bs;
    NCPoly xc;              // in U_mu(su(2))
    Scalar rho, s, lambda_plus, lambda_minus;
};

SphereEmbedding build_sphere_embedding(const RadicalTower& tower, const Presentation& su2p,
                                       const Presentation& uqp);

// Each relation of the sphere presentation as a residual that must normalize
// to zero: the four x-form relations, the two involution facts and the four
// A/B-form relations.
std::vector<std::pair<std::string, NCPoly>> sphere_relation_residuals(
    const RadicalTower& tower, const Presentation& su2p, const SphereEmbedding& e);

// x <| X_c, fully normalized.
NCPoly apply_xc(const PairingContext& ctx, const SphereEmbedding& e, const NCPoly& x);

// Embedded basis elements A^k, A^k B^l, A^k B*^m for k <= k_max, 1 <= l,m <= l_max.
struct SphereBasisElement {
    int k = 0, l = 0;  // l > 0: A^k B^l; l < 0: A^k B*^{-l}; l = 0: A^k
    NCPoly value;
    std::string name;
};
std::vector<SphereBasisElement> sphere_basis(const Presentation& su2p, const SphereEmbedding& e,
                                             int k_max, int l_max);

struct KernelDimensionReport {
    int degree = 0;
    size_t monomial_count = 0;   // SU2 normal monomials of degree <= d
    size_t kernel_dim = 0;       // dim ker(apply_xc) on that span
    size_t sphere_count = 0;     // sphere basis elements of degree <= d
    size_t sphere_rank = 0;      // rank of their coordinate matrix
    bool spaces_coincide = false;
};

// Guarded at d <= 4 to keep the coordinate matrices small.
KernelDimensionReport kernel_dimension_check(const PairingContext& ctx,
                                             const SphereEmbedding& e, int degree);

// h(f(A)) for a polynomial f given by coefficients (f[k] multiplies A^k),
// via the closed geometric summation h(A^k) = (1-mu^2) p_k / (1-mu^{2k+2})
// where p_k = (lambda_+^{k+1} - lambda_-^{k+1})/(lambda_+ - lambda_-) is
// radical-free (p_0 = p_1 = 1, p_k = p_{k-1} + c p_{k-2}).
Scalar haar_poly_in_A(const RadicalTower& tower, const std::vector<Scalar>& coeffs);

// h(A^k) via the two-branch form (gamma_+ lambda_+^k + gamma_- lambda_-^k)
// divided by (1 - mu^{2k+2}); the lamp radical cancels. Cross-check route.
Scalar haar_A_power_two_branch(const RadicalTower& tower, int k);

struct NormLemmaReport {
    Scalar closed_form;                       // the stated common value
    Scalar via_embedding[3];                  // h(x_i* x_i) through haar
    Scalar via_reduction[3];                  // through the A-polynomial forms
    Scalar cross_inner[3];                    // h(x_-1* x_0), h(x_0* x_1), h(x_-1* x_1)
    bool all_equal = false;
    bool orthogonal = false;
};

NormLemmaReport lemma_norm_values(const RadicalTower& tower, const Presentation& su2p,
                                  const SphereEmbedding& e);

}  // namespace qmu

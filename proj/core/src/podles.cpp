#include "qmu/podles.hpp"

#include <stdexcept>

namespace qmu {

namespace {

Scalar mu_pow(int k) { return Scalar::mu_power(k); }

NCPoly word_poly(const Presentation& p,
                 std::vector<std::pair<Word, Scalar>> terms) {
    FreePoly fp;
    for (auto& [w, c] : terms) free_add(fp, w, c);
    return nc_normalize(p, fp);
}

}  // namespace

SphereEmbedding build_sphere_embedding(const RadicalTower& tower, const Presentation& su2p,
                                       const Presentation& uqp) {
    using namespace su2;
    SphereEmbedding e;
    Scalar one(1);
    Scalar mu = tower.mu();
    Scalar mu2 = mu_pow(2);
    Scalar rho = tower.rho();
    Scalar r_inv = tower.atom(Atom::R).inverse();
    Scalar t = tower.t();
    Scalar c = tower.c();

    e.rho = rho;
    e.s = tower.s();
    e.lambda_plus = tower.lambda_plus();
    e.lambda_minus = tower.lambda_minus();

    // x_-1 = (mu a^2 + rho (1+mu^2) a g - mu^2 g^2) * mu^-1 (1+mu^2)^{-1/2}
    Scalar f = mu_pow(-1) * r_inv;
    e.x_m1 = word_poly(su2p, {{Word{a, a}, mu * f},
                              {Word{a, g}, rho * (one + mu2) * f},
                              {Word{g, g}, -mu2 * f}});

    // x_0 = -mu g* a + rho (1 - (1+mu^2) g* g) - g a*
    e.x_0 = word_poly(su2p, {{Word{gs, a}, -mu},
                             {Word{}, rho},
                             {Word{gs, g}, -rho * (one + mu2)},
                             {Word{g, as}, -one}});

    // x_1 = (mu^2 g*^2 - rho mu (1+mu^2) a* g* - mu a*^2) * (1+mu^2)^{-1/2}
    e.x_1 = word_poly(su2p, {{Word{gs, gs}, mu2 * r_inv},
                             {Word{as, gs}, -rho * mu * (one + mu2) * r_inv},
                             {Word{as, as}, -mu * r_inv}});

    // A = (1 - t^-1 x_0)/(1+mu^2),  B = mu (1+mu^2)^{-1/2} t^-1 x_-1
    Scalar inv_1mu2 = (one + mu2).inverse();
    e.A = (NCPoly::unit(Alg::SU2) - e.x_0 * t.inverse()) * inv_1mu2;
    e.B = e.x_m1 * (mu * r_inv * t.inverse());
    e.Bs = nc_star(su2p, e.B);

    // X_c = mu^{1/2} (mu^-1 - mu)^-1 c^{-1/2} (1 - K^2) + EK + mu FK
    using namespace uq;
    Scalar cxc = tower.q() * (mu_pow(-1) - mu).inverse() * tower.atom(Atom::Sigma).inverse();
    (void)c;
    e.xc = word_poly(uqp, {{Word{}, cxc},
                           {Word{K, K}, -cxc},
                           {Word{E, K}, one},
                           {Word{F, K}, mu}});
    return e;
}

std::vector<std::pair<std::string, NCPoly>> sphere_relation_residuals(
    const RadicalTower& tower, const Presentation& p, const SphereEmbedding& e) {
    Scalar one(1);
    Scalar mu2 = mu_pow(2);
    Scalar t = tower.t();
    Scalar c = tower.c();

    // [2] = mu + mu^-1
    Scalar two_q = mu_pow(1) + mu_pow(-1);
    NCPoly unit = NCPoly::unit(Alg::SU2);
    NCPoly x0_t = e.x_0 - unit * t;

    std::vector<std::pair<std::string, NCPoly>> out;
    out.emplace_back("sphere.x1",
                     nc_mul(p, e.x_m1, x0_t) - nc_mul(p, x0_t, e.x_m1) * mu2);
    out.emplace_back("sphere.x2",
                     nc_mul(p, e.x_1, x0_t) - nc_mul(p, x0_t, e.x_1) * mu_pow(-2));
    // -[2] x_-1 x_1 + (mu^2 x_0 + t)(x_0 - t) = [2]^2 (1 - t)
    out.emplace_back("sphere.x3",
                     nc_mul(p, e.x_m1, e.x_1) * (-two_q) +
                         nc_mul(p, e.x_0 * mu2 + unit * t, x0_t) -
                         unit * (two_q * two_q * (one - t)));
    out.emplace_back("sphere.x4",
                     nc_mul(p, e.x_1, e.x_m1) * (-two_q) +
                         nc_mul(p, e.x_0 * mu_pow(-2) + unit * t, x0_t) -
                         unit * (two_q * two_q * (one - t)));
    // x_-1* = -mu^-1 x_1 and x_0* = x_0
    out.emplace_back("sphere.invol_m1", nc_star(p, e.x_m1) + e.x_1 * mu_pow(-1));
    out.emplace_back("sphere.invol_0", nc_star(p, e.x_0) - e.x_0);
    // A* = A, AB = mu^-2 BA, B*B = A - A^2 + c, BB* = mu^2 A - mu^4 A^2 + c
    out.emplace_back("sphere.ab1", nc_star(p, e.A) - e.A);
    out.emplace_back("sphere.ab2", nc_mul(p, e.A, e.B) - nc_mul(p, e.B, e.A) * mu_pow(-2));
    NCPoly A2 = nc_mul(p, e.A, e.A);
    out.emplace_back("sphere.ab3",
                     nc_mul(p, e.Bs, e.B) - (e.A - A2 + unit * c));
    out.emplace_back("sphere.ab4",
                     nc_mul(p, e.B, e.Bs) - (e.A * mu2 - A2 * mu_pow(4) + unit * c));
    return out;
}

NCPoly apply_xc(const PairingContext& ctx, const SphereEmbedding& e, const NCPoly& x) {
    return ctx.act_right(x, e.xc);
}

std::vector<SphereBasisElement> sphere_basis(const Presentation& p, const SphereEmbedding& e,
                                             int k_max, int l_max) {
    std::vector<SphereBasisElement> out;
    std::vector<NCPoly> a_pow{NCPoly::unit(Alg::SU2)};
    for (int k = 1; k <= k_max; ++k) a_pow.push_back(nc_mul(p, a_pow.back(), e.A));
    std::vector<NCPoly> b_pow{NCPoly::unit(Alg::SU2)}, bs_pow{NCPoly::unit(Alg::SU2)};
    for (int l = 1; l <= l_max; ++l) {
        b_pow.push_back(nc_mul(p, b_pow.back(), e.B));
        bs_pow.push_back(nc_mul(p, bs_pow.back(), e.Bs));
    }
    auto name = [](int k, int l) {
        std::string n;
        if (k > 0) n += "A^" + std::to_string(k);
        if (l > 0) n += std::string(n.empty() ? "" : " ") + "B^" + std::to_string(l);
        if (l < 0) n += std::string(n.empty() ? "" : " ") + "B*^" + std::to_string(-l);
        return n.empty() ? std::string("1") : n;
    };
    for (int k = 0; k <= k_max; ++k) {
        out.push_back({k, 0, a_pow[k], name(k, 0)});
        for (int l = 1; l <= l_max; ++l) {
            out.push_back({k, l, nc_mul(p, a_pow[k], b_pow[l]), name(k, l)});
            out.push_back({k, -l, nc_mul(p, a_pow[k], bs_pow[l]), name(k, -l)});
        }
    }
    return out;
}

KernelDimensionReport kernel_dimension_check(const PairingContext& ctx,
                                             const SphereEmbedding& e, int degree) {
    if (degree > 4) throw std::invalid_argument("kernel_dimension_check: degree guard is 4");
    const Presentation& p = ctx.su2().pres();
    KernelDimensionReport rep;
    rep.degree = degree;

    std::vector<NCPoly> images;
    for (int e0 = -degree; e0 <= degree; ++e0)
        for (int e1 = 0; e1 + std::abs(e0) <= degree; ++e1)
            for (int e2 = 0; e2 + e1 + std::abs(e0) <= degree; ++e2) {
                Mono m{e0, e1, e2};
                ++rep.monomial_count;
                images.push_back(apply_xc(ctx, e, NCPoly::monomial(Alg::SU2, m, Scalar(1))));
            }
    size_t rank = span_rank(images);
    rep.kernel_dim = rep.monomial_count - rank;

    std::vector<NCPoly> sphere_elems;
    auto basis = sphere_basis(p, e, degree / 2, degree / 2);
    for (const auto& b : basis)
        if (b.value.max_degree() <= degree) sphere_elems.push_back(b.value);
    rep.sphere_count = sphere_elems.size();
    rep.sphere_rank = span_rank(sphere_elems);
    rep.spaces_coincide =
        rep.sphere_rank == rep.sphere_count && rep.sphere_rank == rep.kernel_dim;
    return rep;
}

Scalar haar_poly_in_A(const RadicalTower& tower, const std::vector<Scalar>& coeffs) {
    Scalar c = tower.c();
    Scalar one(1);
    Scalar mu2 = mu_pow(2);
    Scalar out;
    Scalar p_prev = one, p_prevprev = one;  // p_1, p_0
    for (size_t k = 0; k < coeffs.size(); ++k) {
        Scalar p_k;
        if (k == 0)
            p_k = one;
        else if (k == 1)
            p_k = one;
        else {
            p_k = p_prev + c * p_prevprev;
            p_prevprev = p_prev;
            p_prev = p_k;
        }
        if (coeffs[k].is_zero()) continue;
        Scalar denom = one - Scalar::mu_power(2 * static_cast<int>(k) + 2);
        out += coeffs[k] * (one - mu2) * p_k / denom;
    }
    return out;
}

Scalar haar_A_power_two_branch(const RadicalTower& tower, int k) {
    Scalar one(1);
    Scalar mu2 = mu_pow(2);
    Scalar lp = tower.lambda_plus(), lm = tower.lambda_minus();
    Scalar gap = lp - lm;  // 2 lamp, never zero since c + 1/4 > 0
    Scalar gp = (one - mu2) * lp / gap;
    Scalar gm = (one - mu2) * lm / (-gap);
    Scalar lpk = one, lmk = one;
    for (int i = 0; i < k; ++i) {
        lpk *= lp;
        lmk *= lm;
    }
    return (gp * lpk + gm * lmk) / (one - Scalar::mu_power(2 * k + 2));
}

NormLemmaReport lemma_norm_values(const RadicalTower& tower, const Presentation& p,
                                  const SphereEmbedding& e) {
    NormLemmaReport rep;
    Scalar one(1);
    Scalar mu2 = mu_pow(2);
    Scalar t = tower.t(), c = tower.c();
    Scalar t2 = t * t;

    // t^2 (1-mu^2)(1-mu^6)^-1 [mu^2 + t^-1(mu^4+2mu^2+1) + t(-mu^4-2mu^2-1)]
    Scalar poly1mu2 = mu_pow(4) + mu2 * Scalar(2) + one;
    Scalar bracket = mu2 + t.inverse() * poly1mu2 - t * poly1mu2;
    rep.closed_form = t2 * (one - mu2) * (one - Scalar::mu_power(6)).inverse() * bracket;

    const NCPoly* xs[3] = {&e.x_m1, &e.x_0, &e.x_1};
    for (int i = 0; i < 3; ++i)
        rep.via_embedding[i] = haar(nc_mul(p, nc_star(p, *xs[i]), *xs[i]));

    // x_-1* x_-1 = t^2 mu^-2 (1+mu^2)(A - A^2 + c),
    // x_0* x_0 = t^2 (1 - 2(1+mu^2) A + (1+mu^2)^2 A^2),
    // x_1* x_1 = t^2 (1+mu^2)(mu^2 A - mu^4 A^2 + c)
    Scalar u = one + mu2;
    rep.via_reduction[0] = haar_poly_in_A(
        tower, {t2 * mu_pow(-2) * u * c, t2 * mu_pow(-2) * u, -t2 * mu_pow(-2) * u});
    rep.via_reduction[1] = haar_poly_in_A(tower, {t2, -t2 * Scalar(2) * u, t2 * u * u});
    rep.via_reduction[2] =
        haar_poly_in_A(tower, {t2 * u * c, t2 * u * mu2, -t2 * u * mu_pow(4)});

    rep.cross_inner[0] = haar(nc_mul(p, nc_star(p, e.x_m1), e.x_0));
    rep.cross_inner[1] = haar(nc_mul(p, nc_star(p, e.x_0), e.x_1));
    rep.cross_inner[2] = haar(nc_mul(p, nc_star(p, e.x_m1), e.x_1));

    rep.all_equal = true;
    for (int i = 0; i < 3; ++i)
        if (!(rep.via_embedding[i] == rep.closed_form && rep.via_reduction[i] == rep.closed_form))
            rep.all_equal = false;
    rep.orthogonal = rep.cross_inner[0].is_zero() && rep.cross_inner[1].is_zero() &&
                     rep.cross_inner[2].is_zero();
    return rep;
}

}  // namespace qmu

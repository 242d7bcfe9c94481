#include "qmu/suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace qmu {

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteBuilder {
    SuiteReport rep;
    Clock::time_point mark = Clock::now();

    explicit SuiteBuilder(std::string name, std::string t_label) {
        rep.suite = std::move(name);
        rep.t_label = std::move(t_label);
    }

    long take_millis() {
        auto now = Clock::now();
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - mark).count();
        mark = now;
        return ms;
    }

    void check(const std::string& id, const std::string& source, bool pass,
               const std::string& residual = "", size_t residual_terms = 0) {
        CheckResult c;
        c.id = id;
        c.source = source;
        c.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
        c.residual = pass ? "" : residual;
        c.residual_terms = pass ? 0 : residual_terms;
        c.millis = take_millis();
        rep.checks.push_back(std::move(c));
    }

    void residual_check(const std::string& id, const std::string& source, const NCPoly& r,
                        const Presentation& p) {
        check(id, source, r.is_zero(), r.is_zero() ? "" : r.to_string(p), r.size());
    }

    // A negative control that behaved as expected (it failed) reports the
    // dedicated status; an unexpectedly passing control is a suite failure.
    void negative_control(const std::string& id, const std::string& source,
                          bool control_failed) {
        CheckResult c;
        c.id = id;
        c.source = source;
        c.status = control_failed ? CheckStatus::NegativeControl : CheckStatus::Fail;
        if (!control_failed) c.residual = "negative control unexpectedly passed";
        c.millis = take_millis();
        rep.checks.push_back(std::move(c));
    }
};

Scalar mu_pow(int k) { return Scalar::mu_power(k); }

Rat rat_at(const Scalar& s, const Rat& q0) {
    if (!s.is_radical_free()) throw std::logic_error("rat_at: scalar has radical part");
    return s.is_zero() ? Rat(0) : s.rational_part().eval(q0);
}

// ---------------------------------------------------------------- scalars --

SuiteReport suite_scalars(const Workspace& ws, const SuiteOptions&) {
    SuiteBuilder b("scalars", ws.t_label());
    const RadicalTower& tw = ws.tower();
    Scalar one(1);
    Scalar mu = tw.mu();

    b.check("scalar.tower", "tower construction certified nondegenerate or collapsed", true);
    b.check("scalar.rr", "r * r = 1 + mu^2",
            tw.atom(Atom::R) * tw.atom(Atom::R) == one + mu * mu);
    b.check("scalar.lamp", "(1/2 + lamp)(1/2 - lamp) = -c",
            tw.lambda_plus() * tw.lambda_minus() == -tw.c());
    b.check("scalar.q0", "q^0 = 1", Scalar::q_power(0) == one);
    b.check("scalar.sigma_inv", "sigma^-1 = sigma/c",
            tw.atom(Atom::Sigma).inverse() == tw.atom(Atom::Sigma) / tw.c());
    b.check("scalar.inv_roundtrip", "(1+mu^2)^-1 (1+mu^2) = 1",
            (one + mu * mu).inverse() * (one + mu * mu) == one);
    b.check("scalar.rho", "rho^2 = mu^2 t^2/((mu^2+1)^2 (1-t))",
            tw.rho() * tw.rho() ==
                mu * mu * tw.t() * tw.t() /
                    ((mu * mu + one) * (mu * mu + one) * (one - tw.t())));
    b.check("scalar.s", "s = -c^{-1/2} lambda_-",
            tw.s() == -(tw.atom(Atom::Sigma).inverse() * tw.lambda_minus()));

    // Certified numeric evaluation.
    {
        QInterval i1 = one.eval(Rat(1, 2), 30);
        b.check("scalar.eval_one", "1 evaluates to [1,1]",
                i1.lo == 1 && i1.hi == 1);
        QInterval imu = mu.eval(Rat(1, 2), 30);
        b.check("scalar.eval_mu", "mu at q0 = 1/2 is exactly 1/4",
                imu.contains(Rat(1, 4)) && imu.width() == 0);
        // tau at t = 3/4 collapses to the rational 1/2
        ParamConfig c34;
        c34.t = Rat(3, 4);
        RadicalTower tower34(c34);
        QInterval itau = tower34.atom(Atom::Tau).eval(Rat(1, 2), 40);
        Rat half(1, 2);
        mpq_class tol(1);
        tol >>= 40;
        b.check("scalar.eval_tau34", "tau at t = 3/4 encloses 1/2 at width <= 2^-40",
                itau.contains(half) && itau.width() <= tol);
        b.check("scalar.collapse_tau34", "tau collapses to a rational at t = 3/4",
                tower34.atom(Atom::Tau) == Scalar(Rat(1, 2)));
    }
    // At t = 1/3 the radicand 1 - t equals c/4, so tau resolves to sigma/2.
    {
        ParamConfig c13;
        c13.t = Rat(1, 3);
        RadicalTower tower13(c13);
        b.check("scalar.collapse_tau13", "tau = sigma/2 at t = 1/3",
                tower13.atom(Atom::Tau) == tower13.atom(Atom::Sigma) * Scalar(Rat(1, 2)));
    }
    // Interval consistency: enclosure of a sum within sum of enclosures.
    {
        Scalar x = tw.atom(Atom::Sigma) + tw.atom(Atom::Lamp) * mu;
        Scalar y = tw.rho() - tw.s();
        QInterval ix = x.eval(Rat(1, 2), 50), iy = y.eval(Rat(1, 2), 50);
        QInterval ixy = (x + y).eval(Rat(1, 2), 50);
        QInterval hull = ix + iy;
        mpq_class slack(1);
        slack >>= 48;
        QInterval widened(hull.lo - slack, hull.hi + slack);
        b.check("scalar.eval_additive", "interval of sum within widened sum of intervals",
                ixy.subset_of(widened));
    }
    return b.rep;
}

// ---------------------------------------------------------- presentations --

SuiteReport suite_presentations(const Workspace& ws, const SuiteOptions&) {
    SuiteBuilder b("presentations", ws.t_label());
    const Presentation& su2p = ws.su2().pres();
    const Presentation& uqp = ws.uq().pres();

    for (const auto& [id, res] : su2_relation_residuals(su2p))
        b.residual_check(id, "SU_mu(2) defining relation", res, su2p);
    for (const auto& [id, res] : uq_relation_residuals(uqp))
        b.residual_check(id, "U_mu(su(2)) relation/involution", res, uqp);
    for (const auto& [id, res] : sphere_relation_residuals(ws.tower(), su2p, ws.sphere()))
        b.residual_check(id, "Podles sphere relation", res, su2p);
    for (const auto& [id, residuals] : somu3_relation_residuals(su2p, ws.so3())) {
        bool ok = true;
        size_t terms = 0;
        std::string render;
        for (const NCPoly& r : residuals) {
            if (!r.is_zero()) {
                ok = false;
                terms += r.size();
                render = r.to_string(su2p);
            }
        }
        b.check(id, "SO_mu(3) defining relation", ok, render, terms);
    }

    ConfluenceReport cs = confluence_check(su2p, 6);
    b.check("confluence.su2", "all critical pairs join at bound 6 (" +
                                  std::to_string(cs.pairs.size()) + " overlaps)",
            cs.all_join);
    ConfluenceReport cu = confluence_check(uqp, 6);
    b.check("confluence.uq", "all critical pairs join at bound 6 (" +
                                 std::to_string(cu.pairs.size()) + " overlaps)",
            cu.all_join);
    ConfluenceReport ce = confluence_check(Presentation{su2p.alg, su2p.gen_names,
                                                        su2p.involution, su2p.rank,
                                                        su2p.flagged, {}},
                                           6);
    b.check("confluence.empty", "empty rule set vacuously confluent",
            ce.all_join && ce.pairs.empty());
    return b.rep;
}

// ------------------------------------------------------------------- hopf --

template <typename Fn>
void for_each_mono_upto(int degree, Fn&& fn) {
    for (int d = 0; d <= degree; ++d)
        for (int e0 = -d; e0 <= d; ++e0)
            for (int e1 = 0; std::abs(e0) + e1 <= d; ++e1) {
                int e2 = d - std::abs(e0) - e1;
                fn(Mono{e0, e1, e2});
            }
}

SuiteReport suite_hopf(const Workspace& ws, const SuiteOptions&) {
    SuiteBuilder b("hopf", ws.t_label());
    const int D = 6;

    for (const HopfAlgebra* h : {&ws.su2(), &ws.uq()}) {
        const Presentation& p = h->pres();
        std::string tag = (p.alg == Alg::SU2) ? "su2" : "uq";
        size_t count = 0;
        bool coassoc = true, counit_ok = true, antipode_ok = true;
        for_each_mono_upto(D, [&](const Mono& m) {
            NCPoly x = NCPoly::monomial(p.alg, m, Scalar(1));
            ++count;
            if (!(h->coproduct3_left(x) == h->coproduct3_right(x))) coassoc = false;
            TensorPoly d = h->coproduct(x);
            NCPoly left =
                tensor_apply_left(d, p.alg, [&](const Mono& mm) {
                    return h->counit(NCPoly::monomial(p.alg, mm, Scalar(1)));
                });
            NCPoly right =
                tensor_apply_right(d, p.alg, [&](const Mono& mm) {
                    return h->counit(NCPoly::monomial(p.alg, mm, Scalar(1)));
                });
            if (!(left == x) || !(right == x)) counit_ok = false;
            // m(kappa (x) id) Delta = eps(.) 1 = m(id (x) kappa) Delta
            NCPoly s1(p.alg), s2(p.alg);
            for (const auto& [k, c] : d.terms()) {
                NCPoly l = NCPoly::monomial(p.alg, k.first, Scalar(1));
                NCPoly r = NCPoly::monomial(p.alg, k.second, Scalar(1));
                s1 = s1 + nc_mul(p, h->antipode(l), r) * c;
                s2 = s2 + nc_mul(p, l, h->antipode(r)) * c;
            }
            NCPoly target = NCPoly::unit(p.alg) * h->counit(x);
            if (!(s1 == target) || !(s2 == target)) antipode_ok = false;
        });
        std::string scope = " on all " + std::to_string(count) +
                            " normal monomials to degree " + std::to_string(D);
        b.check("hopf." + tag + ".coassoc", "(Delta x id)Delta = (id x Delta)Delta" + scope,
                coassoc);
        b.check("hopf." + tag + ".counit", "(eps x id)Delta = id = (id x eps)Delta" + scope,
                counit_ok);
        b.check("hopf." + tag + ".antipode",
                "m(kappa x id)Delta = eps(.)1 = m(id x kappa)Delta" + scope, antipode_ok);
    }

    // Haar bi-invariance on O(SU_mu(2)).
    {
        const HopfAlgebra& h = ws.su2();
        bool left_inv = true, right_inv = true;
        size_t count = 0;
        for_each_mono_upto(D, [&](const Mono& m) {
            NCPoly x = NCPoly::monomial(Alg::SU2, m, Scalar(1));
            ++count;
            TensorPoly d = h.coproduct(x);
            NCPoly lhs = tensor_apply_right(d, Alg::SU2,
                                            [&](const Mono& mm) { return haar_mono(mm); });
            if (!(lhs == NCPoly::unit(Alg::SU2) * haar(x))) left_inv = false;
            NCPoly rhs = tensor_apply_left(d, Alg::SU2,
                                           [&](const Mono& mm) { return haar_mono(mm); });
            if (!(rhs == NCPoly::unit(Alg::SU2) * haar(x))) right_inv = false;
        });
        std::string scope =
            " on all " + std::to_string(count) + " normal monomials to degree 6";
        b.check("haar.right_invariance", "(id x h)Delta(x) = h(x) 1" + scope, left_inv);
        b.check("haar.left_invariance", "(h x id)Delta(x) = h(x) 1" + scope, right_inv);
    }
    return b.rep;
}

// ---------------------------------------------------------------- actions --

SuiteReport suite_actions(const Workspace& ws, const SuiteOptions&) {
    SuiteBuilder b("actions", ws.t_label());
    const PairingContext& ctx = ws.pairing();
    const Presentation& sp = ws.su2().pres();

    auto sgen = [&](uint8_t l) { return NCPoly::generator(Alg::SU2, l); };
    auto ugen = [&](uint8_t l) { return NCPoly::generator(Alg::UQ, l); };
    NCPoly zero(Alg::SU2);
    Scalar q = Scalar::q_power(1), qi = Scalar::q_power(-1), mu = mu_pow(1);

    struct Entry {
        const char* id;
        NCPoly f_or_x;
        NCPoly x_or_f;
        NCPoly expected;
        bool left;
    };
    using namespace su2;
    std::vector<Entry> table = {
        {"act.left.E.a", ugen(uq::E), sgen(a), sgen(gs) * (-mu), true},
        {"act.left.E.g", ugen(uq::E), sgen(g), sgen(as), true},
        {"act.left.E.gs", ugen(uq::E), sgen(gs), zero, true},
        {"act.left.E.as", ugen(uq::E), sgen(as), zero, true},
        {"act.left.F.a", ugen(uq::F), sgen(a), zero, true},
        {"act.left.F.g", ugen(uq::F), sgen(g), zero, true},
        {"act.left.F.gs", ugen(uq::F), sgen(gs), sgen(a) * (-mu_pow(-1)), true},
        {"act.left.F.as", ugen(uq::F), sgen(as), sgen(g), true},
        {"act.left.K.a", ugen(uq::K), sgen(a), sgen(a) * qi, true},
        {"act.left.K.g", ugen(uq::K), sgen(g), sgen(g) * qi, true},
        {"act.left.K.gs", ugen(uq::K), sgen(gs), sgen(gs) * q, true},
        {"act.left.K.as", ugen(uq::K), sgen(as), sgen(as) * q, true},
        {"act.left.Kinv.a", ugen(uq::Kinv), sgen(a), sgen(a) * q, true},
        {"act.left.Kinv.g", ugen(uq::Kinv), sgen(g), sgen(g) * q, true},
        {"act.left.Kinv.gs", ugen(uq::Kinv), sgen(gs), sgen(gs) * qi, true},
        {"act.left.Kinv.as", ugen(uq::Kinv), sgen(as), sgen(as) * qi, true},
        {"act.right.a.E", ugen(uq::E), sgen(a), zero, false},
        {"act.right.g.E", ugen(uq::E), sgen(g), sgen(a), false},
        {"act.right.gs.E", ugen(uq::E), sgen(gs), zero, false},
        {"act.right.as.E", ugen(uq::E), sgen(as), sgen(gs) * (-mu), false},
        {"act.right.a.F", ugen(uq::F), sgen(a), sgen(g), false},
        {"act.right.g.F", ugen(uq::F), sgen(g), zero, false},
        {"act.right.gs.F", ugen(uq::F), sgen(gs), sgen(as) * (-mu_pow(-1)), false},
        {"act.right.as.F", ugen(uq::F), sgen(as), zero, false},
        {"act.right.a.K", ugen(uq::K), sgen(a), sgen(a) * qi, false},
        {"act.right.g.K", ugen(uq::K), sgen(g), sgen(g) * q, false},
        {"act.right.gs.K", ugen(uq::K), sgen(gs), sgen(gs) * qi, false},
        {"act.right.as.K", ugen(uq::K), sgen(as), sgen(as) * q, false},
    };
    for (const auto& e : table) {
        NCPoly got = e.left ? ctx.act_left(e.f_or_x, e.x_or_f)
                            : ctx.act_right(e.x_or_f, e.f_or_x);
        b.residual_check(e.id, "generator action table", got - e.expected, sp);
    }

    // Pairing values on generators.
    b.check("pair.K.a", "<K, a> = mu^-1/2",
            ctx.pair(ugen(uq::K), sgen(a)) == Scalar::q_power(-1));
    b.check("pair.E.g", "<E, g> = 1", ctx.pair(ugen(uq::E), sgen(g)) == Scalar(1));
    b.check("pair.F.gs", "<F, -mu g*> = 1",
            ctx.pair(ugen(uq::F), sgen(gs) * (-mu)) == Scalar(1));
    b.check("pair.unit", "<1, x> = eps(x)",
            ctx.pair(NCPoly::unit(Alg::UQ), sgen(a)) == Scalar(1) &&
                ctx.pair(NCPoly::unit(Alg::UQ), sgen(g)) == Scalar());

    // Route consistency and module-involution laws on a few composites.
    {
        NCPoly ag = nc_mul(sp, sgen(a), sgen(g));
        NCPoly ggs = nc_mul(sp, sgen(g), sgen(gs));
        NCPoly w3 = nc_mul(sp, ag, sgen(gs));
        bool consistent = true;
        for (const NCPoly* x : {&ag, &ggs, &w3}) {
            for (uint8_t f : {uq::E, uq::F, uq::K}) {
                NCPoly fu = ugen(f);
                if (!(ctx.act_left(fu, *x) == ctx.act_left_via_pairing(fu, *x)))
                    consistent = false;
                if (!(ctx.act_right(*x, fu) == ctx.act_right_via_pairing(*x, fu)))
                    consistent = false;
            }
        }
        b.check("act.route_consistency",
                "table+Leibniz route equals pairing route on composites", consistent);

        const HopfAlgebra& hu = ws.uq();
        bool invol = true;
        for (uint8_t f : {uq::E, uq::F, uq::K}) {
            for (const NCPoly* x : {&ag, &ggs}) {
                NCPoly fu = ugen(f);
                NCPoly lhs = nc_star(sp, ctx.act_left(fu, *x));
                NCPoly rhs = ctx.act_left(nc_star(ws.uq().pres(), hu.antipode(fu)),
                                          nc_star(sp, *x));
                if (!(lhs == rhs)) invol = false;
                NCPoly lhs2 = nc_star(sp, ctx.act_right(*x, fu));
                NCPoly rhs2 = ctx.act_right(nc_star(sp, *x),
                                            nc_star(ws.uq().pres(), hu.antipode(fu)));
                if (!(lhs2 == rhs2)) invol = false;
            }
        }
        b.check("act.involution_law", "(f |> x)* = S(f)* |> x* and right analogue", invol);
    }
    return b.rep;
}

// ------------------------------------------------------------------- haar --

SuiteReport suite_haar(const Workspace& ws, const SuiteOptions&) {
    SuiteBuilder b("haar", ws.t_label());
    const Presentation& p = ws.su2().pres();
    const SphereEmbedding& e = ws.sphere();
    Scalar one(1);
    Scalar mu2 = mu_pow(2);

    b.check("haar.unit", "h(1) = 1", haar(NCPoly::unit(Alg::SU2)) == one);
    {
        NCPoly ggs = nc_mul(p, NCPoly::generator(Alg::SU2, su2::g),
                            NCPoly::generator(Alg::SU2, su2::gs));
        b.check("haar.ggs", "h(g g*) = (1-mu^2)/(1-mu^4)",
                haar(ggs) == (one - mu2) / (one - mu_pow(4)));
    }
    b.check("haar.A", "h(A) = (1+mu^2)^-1", haar(e.A) == (one + mu2).inverse());
    b.check("haar.B", "h(B) = 0", haar(e.B).is_zero());
    {
        NCPoly a = NCPoly::generator(Alg::SU2, su2::a);
        NCPoly g = NCPoly::generator(Alg::SU2, su2::g);
        b.check("haar.inner_ag", "<a, g> = 0", inner_product(p, a, g).is_zero());
        b.check("haar.inner_aa", "<a, a> = mu^2/(1+mu^2)",
                inner_product(p, a, a) == mu2 / (one + mu2));
        b.check("haar.inner_unit", "<1, 1> = 1",
                inner_product(p, NCPoly::unit(Alg::SU2), NCPoly::unit(Alg::SU2)) == one);
    }
    // h(f(A)) closed form against the embedding and the two-branch route.
    {
        bool ok = true;
        NCPoly apow = NCPoly::unit(Alg::SU2);
        for (int k = 0; k <= 4; ++k) {
            std::vector<Scalar> coeffs(k + 1, Scalar());
            coeffs[k] = Scalar(1);
            Scalar closed = haar_poly_in_A(ws.tower(), coeffs);
            Scalar branch = haar_A_power_two_branch(ws.tower(), k);
            if (!(closed == haar(apow)) || !(branch == closed)) ok = false;
            apow = nc_mul(p, apow, e.A);
        }
        b.check("haar.poly_in_A", "h(A^k) closed form = embedding = two-branch, k <= 4", ok);
        b.check("haar.A2", "h(A^2) = (1-mu^2)(1+c)/(1-mu^6)",
                haar_poly_in_A(ws.tower(), {Scalar(), Scalar(), Scalar(1)}) ==
                    (one - mu2) * (one + ws.tower().c()) / (one - mu_pow(6)));
    }
    {
        NormLemmaReport nr = lemma_norm_values(ws.tower(), p, e);
        b.check("haar.norm_closed_form",
                "h(x_i* x_i) equals the stated closed form via both routes", nr.all_equal);
        b.check("haar.norm_orthogonal", "x_-1, x_0, x_1 mutually h-orthogonal",
                nr.orthogonal);
        // The three reduction identities to polynomials in A.
        Scalar t = ws.tower().t(), c = ws.tower().c();
        Scalar t2 = t * t, u = one + mu2;
        NCPoly A2 = nc_mul(p, e.A, e.A);
        NCPoly i1 = nc_mul(p, nc_star(p, e.x_m1), e.x_m1) -
                    (e.A - A2 + NCPoly::unit(Alg::SU2) * c) * (t2 * mu_pow(-2) * u);
        NCPoly i2 = nc_mul(p, nc_star(p, e.x_0), e.x_0) -
                    (NCPoly::unit(Alg::SU2) - e.A * (Scalar(2) * u) + A2 * (u * u)) * t2;
        NCPoly i3 = nc_mul(p, nc_star(p, e.x_1), e.x_1) -
                    (e.A * mu2 - A2 * mu_pow(4) + NCPoly::unit(Alg::SU2) * c) * (t2 * u);
        b.residual_check("haar.reduction_xm1", "x_-1* x_-1 = t^2 mu^-2 (1+mu^2)(A - A^2 + c)",
                         i1, p);
        b.residual_check("haar.reduction_x0",
                         "x_0* x_0 = t^2 (1 - 2(1+mu^2) A + (1+mu^2)^2 A^2)", i2, p);
        b.residual_check("haar.reduction_x1", "x_1* x_1 = t^2 (1+mu^2)(mu^2 A - mu^4 A^2 + c)",
                         i3, p);
    }
    return b.rep;
}

// ----------------------------------------------------------------- sphere --

SuiteReport suite_sphere(const Workspace& ws, const SuiteOptions&) {
    SuiteBuilder b("sphere", ws.t_label());
    const Presentation& sp = ws.su2().pres();
    const PairingContext& ctx = ws.pairing();
    const SphereEmbedding& e = ws.sphere();

    // Delta(X_c) = 1 (x) X_c + X_c (x) K^2.
    {
        const HopfAlgebra& hu = ws.uq();
        const Presentation& up = hu.pres();
        NCPoly k2 = nc_mul(up, NCPoly::generator(Alg::UQ, uq::K),
                           NCPoly::generator(Alg::UQ, uq::K));
        TensorPoly expected = TensorPoly::simple(NCPoly::unit(Alg::UQ), e.xc) +
                              TensorPoly::simple(e.xc, k2);
        TensorPoly got = hu.coproduct(e.xc);
        TensorPoly diff = got - expected;
        b.check("sphere.xc_primitive", "Delta(X_c) = 1 x X_c + X_c x K^2", diff.is_zero(),
                diff.is_zero() ? "" : diff.to_string(up, up));
    }
    b.residual_check("sphere.xc_unit", "1 <| X_c = 0",
                     apply_xc(ctx, e, NCPoly::unit(Alg::SU2)), sp);

    auto basis = sphere_basis(sp, e, 3, 3);
    bool all_annihilated = true;
    for (const auto& el : basis) {
        NCPoly r = apply_xc(ctx, e, el.value);
        if (!r.is_zero()) all_annihilated = false;
    }
    b.check("sphere.xc_annihilates",
            "x <| X_c = 0 for all " + std::to_string(basis.size()) +
                " basis elements with k, l <= 3",
            all_annihilated);
    {
        std::vector<NCPoly> vals;
        for (const auto& el : basis) vals.push_back(el.value);
        b.check("sphere.basis_independent",
                "basis elements with k, l <= 3 are linearly independent",
                span_rank(vals) == vals.size());
    }
    {
        NCPoly g = NCPoly::generator(Alg::SU2, su2::g);
        b.check("sphere.xc_gamma", "g <| X_c != 0 (gamma is not a sphere element)",
                !apply_xc(ctx, e, g).is_zero());
        auto small = sphere_basis(sp, e, 1, 1);
        std::vector<NCPoly> vals;
        for (const auto& el : small) vals.push_back(el.value);
        b.check("sphere.gamma_not_in_span", "g not in span{1, A, B, B*, AB, AB*}",
                !solve_in_span(g, vals).coeffs.has_value());
    }

    for (int d = 0; d <= 4; ++d) {
        KernelDimensionReport kr = kernel_dimension_check(ctx, e, d);
        std::ostringstream src;
        src << "dim ker(. <| X_c) on degree <= " << d << ": kernel " << kr.kernel_dim
            << ", sphere " << kr.sphere_count;
        b.check("sphere.kernel_d" + std::to_string(d), src.str(), kr.spaces_coincide);
    }
    return b.rep;
}

// -------------------------------------------------------------------- so3 --

SuiteReport suite_so3(const Workspace& ws, const SuiteOptions&) {
    SuiteBuilder b("so3", ws.t_label());
    const Presentation& sp = ws.su2().pres();
    CoactionCoefficients ts = extract_TS(ws.su2(), ws.sphere());
    b.check("so3.extract", "Delta(A), Delta(B) expand over {1,A,B,B*} with zero residual",
            ts.extraction_ok);
    if (!ts.extraction_ok) return b.rep;
    b.check("so3.even_degree", "all T_i, S_i lie in the even-degree subalgebra",
            ts.all_even_degree);

    // Expected concrete values of the matrix entries.
    NCPoly T2_expected =
        NCPoly::unit(Alg::SU2) - ws.so3().N * (mu_pow(2) + Scalar(1));
    b.residual_check("so3.T2_value", "T2 = 1 - (1+mu^2) g*g", ts.T2 - T2_expected, sp);
    b.residual_check("so3.T1_relation", "T1 = (1 - T2)/(1+mu^2)",
                     ts.T1 - (NCPoly::unit(Alg::SU2) - ts.T2) * (mu_pow(2) + Scalar(1)).inverse(),
                     sp);

    for (auto& c : z_unitarity(ws.tower(), sp, ts))
        b.residual_check(c.id, c.source, c.residual, sp);
    for (auto& c : antipode_table_check(ws.su2(), ts))
        b.residual_check(c.id, c.source, c.residual, sp);
    for (auto& c : homomorphism_map_check(sp, ws.so3(), ts))
        b.residual_check(c.id, c.source, c.residual, sp);
    return b.rep;
}

SuiteReport suite_lemmas(const Workspace& ws, const SuiteOptions& opts) {
    SuiteBuilder b("lemmas", ws.t_label());
    CoactionCoefficients ts = extract_TS(ws.su2(), ws.sphere());
    if (!ts.extraction_ok) {
        b.check("so3.extract", "extraction precondition", false);
        return b.rep;
    }
    for (auto& c : relation_suite(ws.tower(), ws.su2().pres(), ts, opts.only))
        b.residual_check(c.id, c.source, c.residual, ws.su2().pres());
    return b.rep;
}

// --------------------------------------------------------------- spectral --

SuiteReport suite_spectral(const Workspace& ws, const SuiteOptions& opts) {
    SuiteBuilder b("spectral", ws.t_label());
    SpectralContext& sc = ws.spectral();
    const Presentation& sp = ws.su2().pres();
    const SphereEmbedding& e = ws.sphere();

    std::vector<int> levels{1};
    if (opts.extended) levels.push_back(3);

    // Low-level payload values stated for 2l = 1.
    {
        const LevelBlock& blk = sc.level(1);
        Scalar s = ws.tower().s();
        Scalar mu = mu_pow(1);
        NCPoly as = NCPoly::generator(Alg::SU2, su2::as);
        NCPoly gs = NCPoly::generator(Alg::SU2, su2::gs);
        NCPoly a = NCPoly::generator(Alg::SU2, su2::a);
        NCPoly g = NCPoly::generator(Alg::SU2, su2::g);
        b.residual_check("spec.payload_pp", "v~(k=1/2, N=1/2) = a* - s g*",
                         blk.find(1, 1)->payload - (as - gs * s), sp);
        b.residual_check("spec.payload_mp", "v~(k=-1/2, N=1/2) = g + s mu^-1 a",
                         blk.find(-1, 1)->payload - (g + a * (s * mu.inverse())), sp);
        b.residual_check("spec.payload_pm", "v~(k=1/2, N=-1/2) = -mu g* - mu s a*",
                         blk.find(1, -1)->payload - (gs * (-mu) + as * (-mu * s)), sp);
        b.check("spec.norm_pp", "||v~(1/2,1/2)||^2 = (1 + s^2)/(1+mu^2)",
                blk.find(1, 1)->squared_norm ==
                    (Scalar(1) + s * s) / (Scalar(1) + mu_pow(2)));
    }

    for (int lvl : levels) {
        std::string L = std::to_string(lvl);
        GramReport gr = gram_check(sc, lvl);
        b.check("spec.gram_diag_2l" + L, "Gram matrix diagonal at 2l = " + L, gr.diagonal);
        b.check("spec.gram_pos_2l" + L,
                "squared norms nonzero and certified positive at 2l = " + L,
                gr.diagonal_nonzero && gr.numerically_positive);
        b.check("spec.dirac_swap_2l" + L, "D swaps the N-blocks over the full index set",
                dirac_swap_bookkeeping(sc, lvl));
    }

    {
        SpanCheckReport sr = low_level_span_check(sc);
        b.check("spec.low_span", "payloads at 2l = 1 span exactly {a, g, a*, g*}",
                sr.generators_in_span && sr.payloads_in_span && sr.dimension == 4);
    }

    // pi expansions: zero residual and the index support pattern.
    for (int lvl : levels) {
        if (lvl + 2 > sc.max_two_l()) sc.set_max_two_l(lvl + 2);
        std::string L = std::to_string(lvl);
        struct Op {
            const char* name;
            const NCPoly* x;
            int shift;
        };
        Op ops[3] = {{"A", &e.A, 0}, {"B", &e.B, -2}, {"Bs", &e.Bs, +2}};
        for (const Op& op : ops) {
            bool all_ok = true;
            const LevelBlock& blk = sc.level(lvl);
            for (const auto& v : blk.vectors) {
                PiExpansion px = pi_expand(sc, *op.x, op.shift, v.two_l, v.two_k, v.two_j);
                if (!px.residual_zero || !px.support_ok) all_ok = false;
            }
            b.check(std::string("spec.pi_") + op.name + "_2l" + L,
                    std::string("pi(") + op.name +
                        ") expands with zero residual and the stated support at 2l = " + L,
                    all_ok);
        }
    }

    for (int lvl : levels) {
        std::string L = std::to_string(lvl);
        CoactionBlock cb = coaction_block(sc, lvl);
        b.check("spec.coaction_2l" + L,
                "Delta(v~) closes over the level with zero residual at 2l = " + L,
                cb.residual_zero);
        b.check("spec.coaction_nblock_2l" + L,
                "observed: first leg stays in the same N block at 2l = " + L, cb.n_diagonal);
        UnitarityReport ur = weighted_unitarity_check(sc, cb);
        b.check("spec.unitary_cols_2l" + L,
                "weighted column unitarity at 2l = " + L + " (" +
                    std::to_string(ur.columns.checked) + " units)",
                ur.columns.pass);
        b.check("spec.unitary_rows_2l" + L,
                "weighted row unitarity at 2l = " + L + " (" +
                    std::to_string(ur.rows.checked) + " units)",
                ur.rows.pass);

        MatrixIdentityReport r = twisted_trace_invariance(sc, cb, TraceWeight::R);
        b.check("spec.twisted_R_2l" + L, "R-twisted trace invariance at 2l = " + L, r.pass);
        MatrixIdentityReport r0 = twisted_trace_invariance(sc, cb, TraceWeight::R0);
        b.check("spec.twisted_R0_2l" + L, "R0-twisted trace invariance at 2l = " + L, r0.pass);
        MatrixIdentityReport tp = twisted_trace_invariance(sc, cb, TraceWeight::TauPlus);
        b.check("spec.twisted_tauplus_2l" + L, "tau_+ invariance at 2l = " + L, tp.pass);
        MatrixIdentityReport tm = twisted_trace_invariance(sc, cb, TraceWeight::TauMinus);
        b.check("spec.twisted_tauminus_2l" + L, "tau_- invariance at 2l = " + L, tm.pass);
        MatrixIdentityReport un = twisted_trace_invariance(sc, cb, TraceWeight::Untwisted);
        b.negative_control("spec.untwisted_control_2l" + L,
                           "untwisted trace must NOT be invariant for mu != 1", !un.pass);

        LevelStateReport lsA = level_state_check(sc, lvl, e.A);
        b.check("spec.state_A_2l" + L,
                "normalized R-twisted level trace of A equals h(A) at 2l = " + L, lsA.match);
        LevelStateReport lsB = level_state_check(sc, lvl, e.B);
        b.check("spec.state_B_2l" + L,
                "normalized R-twisted level trace of B equals h(B) = 0 at 2l = " + L,
                lsB.match);
        LevelStateReport ls1 = level_state_check(sc, lvl, NCPoly::unit(Alg::SU2));
        b.check("spec.state_unit_2l" + L, "level state of 1 is 1 at 2l = " + L, ls1.match);
    }
    return b.rep;
}

// -------------------------------------------------------------------- w32 --

SuiteReport suite_w32(const Workspace& ws, const SuiteOptions&) {
    SuiteBuilder b("w32", ws.t_label());
    W32Report r = w32_decomposition_check(ws.su2(), ws.su2().pres(), ws.sphere());
    b.check("w32.extraction", "coaction of the 9 spanning elements closes with zero residual",
            r.extraction_ok);
    b.check("w32.dim", "h-orthogonal complement of W_1/2 has dimension 5",
            r.complement_dim == 5);
    b.check("w32.intersection", "W'' and W_1/2 intersect trivially", r.intersection_trivial);
    b.check("w32.invariance", "Delta maps W'' into W'' (x) O(SU_mu(2))", r.invariance_ok);
    return b.rep;
}

// ----------------------------------------------------------------- cindep --

SuiteReport suite_cindep(const Workspace& ws, const SuiteOptions& opts) {
    SuiteBuilder b("cindep", ws.t_label());
    (void)opts;
    std::vector<Rat> ts_values{Rat(1, 2), Rat(1, 3), Rat(2, 3)};
    std::vector<CoactionCoefficients> extractions;
    std::vector<bool> verdicts;
    for (const Rat& t : ts_values) {
        ParamConfig cfg;
        cfg.t = t;
        Workspace w(cfg, 1);
        CoactionCoefficients ts = extract_TS(w.su2(), w.sphere());
        extractions.push_back(ts);
        bool verdict = ts.extraction_ok;
        for (auto& c : relation_suite(w.tower(), w.su2().pres(), ts))
            verdict = verdict && c.pass();
        verdicts.push_back(verdict);
    }
    bool identical = true;
    for (size_t i = 1; i < extractions.size(); ++i) {
        const auto& x = extractions[0];
        const auto& y = extractions[i];
        if (!(x.T1 == y.T1 && x.T2 == y.T2 && x.T3 == y.T3 && x.T4 == y.T4 &&
              x.S1 == y.S1 && x.S2 == y.S2 && x.S3 == y.S3 && x.S4 == y.S4))
            identical = false;
    }
    b.check("cindep.normal_forms",
            "extracted T/S normal forms literally identical at t = 1/2, 1/3, 2/3", identical);
    bool same_verdicts = verdicts[0] && verdicts[1] && verdicts[2];
    b.check("cindep.verdicts", "identity-suite verdicts identical (all pass) across t",
            same_verdicts);
    return b.rep;
}

// ------------------------------------------------------------- properties --

std::shared_ptr<ScalarExpr> random_scalar_tree(std::mt19937_64& rng, int depth) {
    static const char* consts[] = {"mu", "t", "c", "sigma", "lamp", "tau", "r"};
    std::uniform_int_distribution<int> leaf(0, 9), op(0, 2), pick(0, 6);
    if (depth == 0 || leaf(rng) < 3) {
        if (leaf(rng) < 5) {
            std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
            return ScalarExpr::rational(Rat(num(rng), den(rng)));
        }
        return ScalarExpr::constant(consts[pick(rng)]);
    }
    auto a = random_scalar_tree(rng, depth - 1);
    auto c = random_scalar_tree(rng, depth - 1);
    switch (op(rng)) {
        case 0:
            return ScalarExpr::binary(ScalarExpr::Kind::Add, a, c);
        case 1:
            return ScalarExpr::binary(ScalarExpr::Kind::Sub, a, c);
        default:
            return ScalarExpr::binary(ScalarExpr::Kind::Mul, a, c);
    }
}

// Applies random commutative-ring rewrites that preserve the value.
std::shared_ptr<ScalarExpr> ring_rearrange(std::shared_ptr<ScalarExpr> e,
                                           std::mt19937_64& rng, int moves) {
    using K = ScalarExpr::Kind;
    std::function<std::shared_ptr<ScalarExpr>(std::shared_ptr<ScalarExpr>)> once =
        [&](std::shared_ptr<ScalarExpr> n) -> std::shared_ptr<ScalarExpr> {
        if (n->args.empty()) return n;
        std::uniform_int_distribution<int> which(0, 3);
        switch (which(rng)) {
            case 0:  // commute
                if (n->kind == K::Add || n->kind == K::Mul)
                    return ScalarExpr::binary(n->kind, n->args[1], n->args[0]);
                break;
            case 1:  // reassociate to the right
                if ((n->kind == K::Add || n->kind == K::Mul) &&
                    n->args[0]->kind == n->kind)
                    return ScalarExpr::binary(
                        n->kind, n->args[0]->args[0],
                        ScalarExpr::binary(n->kind, n->args[0]->args[1], n->args[1]));
                break;
            case 2:  // distribute
                if (n->kind == K::Mul && n->args[1]->kind == K::Add)
                    return ScalarExpr::binary(
                        K::Add, ScalarExpr::binary(K::Mul, n->args[0], n->args[1]->args[0]),
                        ScalarExpr::binary(K::Mul, n->args[0], n->args[1]->args[1]));
                break;
            default:  // a - b = a + (-1)*b
                if (n->kind == K::Sub)
                    return ScalarExpr::binary(
                        K::Add, n->args[0],
                        ScalarExpr::binary(K::Mul, ScalarExpr::rational(Rat(-1)),
                                           n->args[1]));
                break;
        }
        // recurse into a random child
        std::uniform_int_distribution<size_t> ci(0, n->args.size() - 1);
        size_t k = ci(rng);
        auto copy = std::make_shared<ScalarExpr>(*n);
        copy->args[k] = once(n->args[k]);
        return copy;
    };
    for (int i = 0; i < moves; ++i) e = once(e);
    return e;
}

Word random_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), letter(0, 3);
    Word w(len(rng));
    for (auto& l : w) l = static_cast<uint8_t>(letter(rng));
    return w;
}

SuiteReport suite_properties(const Workspace& ws, const SuiteOptions& opts) {
    SuiteBuilder b("properties", ws.t_label());
    std::mt19937_64 rng(opts.seed);
    const RadicalTower& tw = ws.tower();
    const Presentation& sp = ws.su2().pres();
    const Presentation& up = ws.uq().pres();

    size_t budget = opts.property_cases;
    size_t n_scalar = budget / 4, n_field = budget / 4, n_word = budget / 4;
    size_t n_rest = budget - n_scalar - n_field - n_word;

    {
        size_t fails = 0;
        for (size_t i = 0; i < n_scalar; ++i) {
            auto e1 = random_scalar_tree(rng, 4);
            auto e2 = ring_rearrange(e1, rng, 6);
            if (!(scalar_normalize(*e1, tw) == scalar_normalize(*e2, tw))) ++fails;
        }
        b.check("prop.scalar_normal_form",
                "ring-rearranged expression trees share one normal form (" +
                    std::to_string(n_scalar) + " cases)",
                fails == 0);
    }
    {
        size_t fails = 0;
        for (size_t i = 0; i < n_field; ++i) {
            Scalar x = scalar_normalize(*random_scalar_tree(rng, 3), tw);
            Scalar y = scalar_normalize(*random_scalar_tree(rng, 3), tw);
            Scalar z = scalar_normalize(*random_scalar_tree(rng, 3), tw);
            if (!((x + y) + z == x + (y + z))) ++fails;
            if (!((x * y) * z == x * (y * z))) ++fails;
            if (!(x * y == y * x)) ++fails;
            if (!(x * (y + z) == x * y + x * z)) ++fails;
            if (!x.is_zero() && !(x * x.inverse() == Scalar(1))) ++fails;
        }
        b.check("prop.field_laws",
                "associativity/commutativity/distributivity/inverses (" +
                    std::to_string(n_field) + " triples)",
                fails == 0);
    }
    {
        size_t fails = 0;
        for (size_t i = 0; i < n_word; ++i) {
            const Presentation& p = (i % 2 == 0) ? sp : up;
            Word w = random_word(rng, 6);
            FreePoly fp;
            free_add(fp, w, Scalar(1));
            NCPoly n1 = nc_normalize(p, fp);
            // idempotence
            FreePoly back;
            for (const auto& [m, c] : n1.terms()) free_add(back, mono_to_word(p.alg, m), c);
            if (!(nc_normalize(p, back) == n1)) ++fails;
            // star compatibility: normalize(star word) = star(normalize word)
            Word swd(w.rbegin(), w.rend());
            for (auto& l : swd) l = p.involution[l];
            FreePoly fps;
            free_add(fps, swd, Scalar(1));
            if (!(nc_normalize(p, fps) == nc_star(p, n1))) ++fails;
        }
        b.check("prop.normalize_words",
                "idempotence and involution compatibility on random words (" +
                    std::to_string(n_word) + " cases)",
                fails == 0);
    }
    {
        size_t fails = 0;
        size_t cases = 0;
        for (size_t i = 0; i < n_rest; ++i) {
            const Presentation& p = (i % 2 == 0) ? sp : up;
            FreePoly fa, fb;
            std::uniform_int_distribution<int> coeff(-3, 3);
            free_add(fa, random_word(rng, 4), Scalar(Rat(coeff(rng))) + mu_pow(1));
            free_add(fa, random_word(rng, 4), Scalar(Rat(coeff(rng))));
            free_add(fb, random_word(rng, 4), Scalar(Rat(coeff(rng))) - mu_pow(-1));
            NCPoly a = nc_normalize(p, fa), bb = nc_normalize(p, fb);
            // star anti-homomorphism
            if (!(nc_star(p, nc_mul(p, a, bb)) ==
                  nc_mul(p, nc_star(p, bb), nc_star(p, a))))
                ++fails;
            ++cases;
            // solve_in_span round-trip on a random 2-element independent basis
            if (!a.is_zero() && !bb.is_zero()) {
                std::vector<NCPoly> basis{a, bb};
                if (span_rank(basis) == 2) {
                    NCPoly target = a * mu_pow(1) + bb * Scalar(Rat(2, 3));
                    auto sol = solve_in_span(target, basis);
                    if (!sol.coeffs) {
                        ++fails;
                    } else {
                        NCPoly recon(p.alg);
                        for (size_t k = 0; k < basis.size(); ++k)
                            recon = recon + basis[k] * (*sol.coeffs)[k];
                        if (!(recon == target)) ++fails;
                    }
                }
            }
        }
        b.check("prop.star_and_span",
                "star anti-homomorphism and solve_in_span round-trips (" +
                    std::to_string(cases) + " cases)",
                fails == 0);
    }
    {
        // PBW dimension counts against the free-algebra ideal oracle.
        bool ok = true;
        for (int d = 1; d <= 5; ++d) {
            PbwOracleResult r1 = pbw_dimension_oracle(sp, d, Rat(1, 3));
            PbwOracleResult r2 = pbw_dimension_oracle(up, d, Rat(1, 3));
            if (!r1.match() || !r2.match()) ok = false;
        }
        b.check("prop.pbw_dimensions",
                "quotient slice dimensions match normal-monomial counts (d <= 5, both "
                "algebras)",
                ok);
    }
    {
        // Printer/parser round-trip on randomized normal forms.
        size_t fails = 0;
        for (size_t i = 0; i < 60; ++i) {
            FreePoly fp;
            std::uniform_int_distribution<int> coeff(-4, 4);
            free_add(fp, random_word(rng, 5), Scalar(Rat(coeff(rng), 3)));
            free_add(fp, random_word(rng, 5), mu_pow(coeff(rng)));
            NCPoly x = nc_normalize(sp, fp);
            Parsed back = parse_expr(x.to_string(sp), Alg::SU2, ws);
            NCPoly y = back.is_scalar ? NCPoly::unit(Alg::SU2) * back.scalar : back.poly;
            if (!(y == x)) ++fails;
        }
        b.check("prop.print_parse_roundtrip",
                "printer output parses back to the same normal form (60 cases)", fails == 0);
    }
    return b.rep;
}

}  // namespace

PbwOracleResult pbw_dimension_oracle(const Presentation& p, int degree, const Rat& q0) {
    PbwOracleResult out;
    // Count admissible normal monomials of degree <= d.
    for (int d = 0; d <= degree; ++d)
        for (int e0 = -d; e0 <= d; ++e0)
            for (int e1 = 0; std::abs(e0) + e1 <= d; ++e1) {
                (void)e1;
                ++out.expected;
            }

    // Enumerate all words of length <= degree as columns.
    std::map<Word, size_t> col;
    std::function<void(Word&, int)> enumerate = [&](Word& w, int remaining) {
        col.emplace(w, col.size());
        if (remaining == 0) return;
        for (uint8_t l = 0; l < 4; ++l) {
            w.push_back(l);
            enumerate(w, remaining - 1);
            w.pop_back();
        }
    };
    Word start;
    enumerate(start, degree);
    // fix deterministic ordering
    {
        size_t i = 0;
        for (auto& [w, idx] : col) idx = i++;
    }

    // Sparse rows u (lhs - rhs) v over Q at q0.
    using SparseRow = std::vector<std::pair<size_t, Rat>>;
    std::vector<SparseRow> rows;
    std::vector<Word> contexts;
    {
        std::function<void(Word&, int)> enum_ctx = [&](Word& w, int remaining) {
            contexts.push_back(w);
            if (remaining == 0) return;
            for (uint8_t l = 0; l < 4; ++l) {
                w.push_back(l);
                enum_ctx(w, remaining - 1);
                w.pop_back();
            }
        };
        Word c0;
        enum_ctx(c0, degree);
    }
    for (const auto& rule : p.rules) {
        int rule_deg = static_cast<int>(rule.lhs.size());
        for (const Word& u : contexts) {
            if (static_cast<int>(u.size()) + rule_deg > degree) continue;
            for (const Word& v : contexts) {
                if (static_cast<int>(u.size() + v.size()) + rule_deg > degree) continue;
                std::map<size_t, Rat> entries;
                Word lw = u;
                lw.insert(lw.end(), rule.lhs.begin(), rule.lhs.end());
                lw.insert(lw.end(), v.begin(), v.end());
                entries[col.at(lw)] += 1;
                for (const auto& [body, c] : rule.rhs) {
                    Word rw = u;
                    rw.insert(rw.end(), body.begin(), body.end());
                    rw.insert(rw.end(), v.begin(), v.end());
                    entries[col.at(rw)] -= rat_at(c, q0);
                }
                SparseRow row;
                for (auto& [idx, val] : entries)
                    if (val != 0) row.push_back({idx, val});
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
    }

    // Sparse Gaussian elimination over Q, tracking pivot rows by column.
    std::map<size_t, SparseRow> pivots;  // leading column -> normalized row
    size_t rank = 0;
    for (auto& row : rows) {
        SparseRow cur = std::move(row);
        while (!cur.empty()) {
            size_t lead = cur.front().first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Rat inv = 1 / cur.front().second;
                for (auto& [c, v] : cur) v *= inv;
                pivots.emplace(lead, std::move(cur));
                ++rank;
                break;
            }
            // cur -= cur.lead * pivot
            Rat f = cur.front().second;
            const SparseRow& pv = it->second;
            SparseRow merged;
            size_t a = 0, bidx = 0;
            while (a < cur.size() || bidx < pv.size()) {
                if (bidx == pv.size() || (a < cur.size() && cur[a].first < pv[bidx].first)) {
                    merged.push_back(cur[a++]);
                } else if (a == cur.size() || pv[bidx].first < cur[a].first) {
                    merged.push_back({pv[bidx].first, -f * pv[bidx].second});
                    ++bidx;
                } else {
                    Rat v = cur[a].second - f * pv[bidx].second;
                    if (v != 0) merged.push_back({cur[a].first, v});
                    ++a;
                    ++bidx;
                }
            }
            cur = std::move(merged);
        }
    }
    out.computed = col.size() - rank;
    return out;
}

std::vector<std::string> suite_names() {
    return {"scalars", "presentations", "hopf", "actions", "haar",
            "sphere",  "so3",           "lemmas", "spectral", "w32",
            "cindep",  "properties"};
}

bool is_suite_name(const std::string& name) {
    for (const auto& n : suite_names())
        if (n == name) return true;
    return false;
}

SuiteReport run_suite(const std::string& name, const Workspace& ws, const SuiteOptions& opts) {
    if (name == "scalars") return suite_scalars(ws, opts);
    if (name == "presentations") return suite_presentations(ws, opts);
    if (name == "hopf") return suite_hopf(ws, opts);
    if (name == "actions") return suite_actions(ws, opts);
    if (name == "haar") return suite_haar(ws, opts);
    if (name == "sphere") return suite_sphere(ws, opts);
    if (name == "so3") return suite_so3(ws, opts);
    if (name == "lemmas") return suite_lemmas(ws, opts);
    if (name == "spectral") return suite_spectral(ws, opts);
    if (name == "w32") return suite_w32(ws, opts);
    if (name == "cindep") return suite_cindep(ws, opts);
    if (name == "properties") return suite_properties(ws, opts);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_all_suites(const Workspace& ws, const SuiteOptions& opts) {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, ws, opts));
    return out;
}

}  // namespace qmu

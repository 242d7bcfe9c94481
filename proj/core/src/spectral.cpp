#include "qmu/spectral.hpp"

#include <stdexcept>

namespace qmu {

namespace {

Scalar mu_pow(int k) { return Scalar::mu_power(k); }
Scalar q_pow(int k) { return Scalar::q_power(k); }

NCPoly word_poly(const Presentation& p, std::vector<std::pair<Word, Scalar>> terms) {
    FreePoly fp;
    for (auto& [w, c] : terms) free_add(fp, w, c);
    return nc_normalize(p, fp);
}

}  // namespace

const BasisVector* LevelBlock::find(int two_k, int two_j) const {
    for (const auto& v : vectors)
        if (v.two_k == two_k && v.two_j == two_j) return &v;
    return nullptr;
}

size_t LevelBlock::index_of(int two_k, int two_j) const {
    for (size_t i = 0; i < vectors.size(); ++i)
        if (vectors[i].two_k == two_k && vectors[i].two_j == two_j) return i;
    throw std::out_of_range("LevelBlock: no such vector");
}

SpectralContext::SpectralContext(const PairingContext& pairing, const RadicalTower& tower,
                                 int max_two_l)
    : pairing_(pairing), tower_(tower), max_two_l_(max_two_l) {
    using namespace su2;
    const Presentation& p = pairing_.su2().pres();
    Scalar s = tower_.s();
    Scalar mu = tower_.mu();
    Scalar sigma = tower_.atom(Atom::Sigma);
    Scalar r = tower_.atom(Atom::R);

    // u_{1/2} = a* - s g*,  w_{1/2} = a - mu s g,  u_{-1/2} = E |> w_{1/2}
    u_half_ = word_poly(p, {{Word{as}, Scalar(1)}, {Word{gs}, -s}});
    w_half_ = word_poly(p, {{Word{a}, Scalar(1)}, {Word{g}, -mu * s}});
    u_minus_half_ = pairing_.act_left(NCPoly::generator(Alg::UQ, uq::E), w_half_);

    // y_1 = (1+mu^-2)^{1/2} (c^{1/2} mu^2 g*^2 - mu g* a* - mu c^{1/2} a*^2),
    // with (1+mu^-2)^{1/2} = r/mu.
    Scalar f = r * mu.inverse();
    y1_ = word_poly(p, {{Word{gs, gs}, f * sigma * mu_pow(2)},
                        {Word{gs, as}, -f * mu},
                        {Word{as, as}, -f * mu * sigma}});
}

LevelBlock SpectralContext::build_level(int two_l) const {
    if (two_l < 1 || two_l % 2 == 0)
        throw std::invalid_argument("build_level: 2l must be an odd positive integer");
    const Presentation& p = pairing_.su2().pres();
    NCPoly Fgen = NCPoly::generator(Alg::UQ, uq::F);

    LevelBlock block;
    block.two_l = two_l;
    int y_power = (two_l - 1) / 2;
    for (int two_j : {+1, -1}) {
        NCPoly base = (two_j > 0) ? u_half_ : u_minus_half_;
        for (int i = 0; i < y_power; ++i) base = nc_mul(p, y1_, base);
        NCPoly cur = base;
        for (int two_k = two_l; two_k >= -two_l; two_k -= 2) {
            BasisVector v;
            v.two_l = two_l;
            v.two_k = two_k;
            v.two_j = two_j;
            v.payload = cur;
            v.squared_norm = inner_product(p, cur, cur);
            block.vectors.push_back(std::move(v));
            if (two_k > -two_l) cur = pairing_.act_left(Fgen, cur);
        }
    }
    return block;
}

const LevelBlock& SpectralContext::level(int two_l) const {
    if (two_l > max_two_l_)
        throw std::invalid_argument("level guard exceeded; raise the configured bound");
    auto it = cache_.find(two_l);
    if (it == cache_.end()) it = cache_.emplace(two_l, build_level(two_l)).first;
    return it->second;
}

GramReport gram_check(const SpectralContext& sc, int two_l) {
    const Presentation& p = sc.pairing().su2().pres();
    const LevelBlock& b = sc.level(two_l);
    GramReport rep;
    rep.two_l = two_l;
    for (size_t i = 0; i < b.vectors.size(); ++i) {
        for (size_t j = 0; j < b.vectors.size(); ++j) {
            Scalar ip = inner_product(p, b.vectors[i].payload, b.vectors[j].payload);
            if (i == j) {
                rep.squared_norms.push_back(ip);
                if (ip.is_zero()) rep.diagonal_nonzero = false;
            } else if (!ip.is_zero()) {
                rep.diagonal = false;
            }
        }
    }
    // Positivity certified numerically at the configured numeric point, or at
    // q0 = 1/2 in symbolic mode.
    Rat q0 = sc.tower().config().q0 ? *sc.tower().config().q0 : Rat(1, 2);
    for (const Scalar& n : rep.squared_norms) {
        if (n.is_zero() || !n.eval(q0, 64).strictly_positive()) {
            rep.numerically_positive = false;
            break;
        }
    }
    return rep;
}

SpanCheckReport low_level_span_check(const SpectralContext& sc) {
    const LevelBlock& b = sc.level(1);
    SpanCheckReport rep;
    std::vector<NCPoly> payloads;
    for (const auto& v : b.vectors) payloads.push_back(v.payload);
    std::vector<NCPoly> gens;
    for (uint8_t l : {su2::a, su2::g, su2::as, su2::gs})
        gens.push_back(NCPoly::generator(Alg::SU2, l));
    rep.dimension = span_rank(payloads);

    rep.generators_in_span = true;
    for (const auto& g : gens) {
        auto sol = solve_in_span(g, payloads);
        if (!sol.coeffs) rep.generators_in_span = false;
    }
    rep.payloads_in_span = true;
    for (const auto& v : payloads) {
        auto sol = solve_in_span(v, gens);
        if (!sol.coeffs) rep.payloads_in_span = false;
    }
    return rep;
}

PiExpansion pi_expand(const SpectralContext& sc, const NCPoly& x, int doubled_m_shift,
                      int two_l, int two_k, int two_j) {
    const Presentation& p = sc.pairing().su2().pres();
    const BasisVector* src = sc.level(two_l).find(two_k, two_j);
    if (!src) throw std::out_of_range("pi_expand: no such source vector");

    NCPoly image = nc_mul(p, x, src->payload);

    PiExpansion out;
    NCPoly residual = image;
    bool support_ok = true;
    for (int lvl : {two_l - 2, two_l, two_l + 2}) {
        if (lvl < 1) continue;
        const LevelBlock& tb = sc.level(lvl);
        for (const auto& tv : tb.vectors) {
            Scalar coeff =
                inner_product(p, tv.payload, image) / tv.squared_norm;
            if (coeff.is_zero()) continue;
            out.entries.push_back({tv.two_l, tv.two_k, tv.two_j, coeff});
            residual = residual - tv.payload * coeff;
            if (tv.two_j != two_j || tv.two_k != two_k + doubled_m_shift) support_ok = false;
        }
    }
    out.residual_zero = residual.is_zero();
    out.support_ok = support_ok;
    return out;
}

CoactionBlock coaction_block(const SpectralContext& sc, int two_l) {
    const LevelBlock& b = sc.level(two_l);
    const HopfAlgebra& h = sc.pairing().su2();

    CoactionBlock cb;
    cb.two_l = two_l;
    cb.n = b.vectors.size();
    cb.Q.assign(cb.n, std::vector<NCPoly>(cb.n, NCPoly(Alg::SU2)));
    cb.residual_zero = true;
    cb.n_diagonal = true;

    std::vector<NCPoly> payloads;
    for (const auto& v : b.vectors) payloads.push_back(v.payload);

    for (size_t i = 0; i < cb.n; ++i) {
        TensorPoly d = h.coproduct(b.vectors[i].payload);
        TensorExtraction ex = tensor_extract(d, payloads);
        if (!ex.ok()) {
            cb.residual_zero = false;
            continue;
        }
        for (size_t a = 0; a < cb.n; ++a) {
            cb.Q[a][i] = ex.coeffs[a];
            if (!ex.coeffs[a].is_zero() && b.vectors[a].two_j != b.vectors[i].two_j)
                cb.n_diagonal = false;
        }
    }
    return cb;
}

namespace {

Scalar trace_weight(TraceWeight w, const BasisVector& v) {
    switch (w) {
        case TraceWeight::R:
            return q_pow(-2 * v.two_k);  // mu^{-2m}
        case TraceWeight::R0:
            return q_pow(-2 * v.two_k - 2 * v.two_j);  // mu^{-2m -+ 1}
        case TraceWeight::Untwisted:
            return Scalar(1);
        case TraceWeight::TauPlus:
            return v.two_j > 0 ? q_pow(-2 * v.two_k - 2) : Scalar();
        case TraceWeight::TauMinus:
            return v.two_j < 0 ? q_pow(-2 * v.two_k + 2) : Scalar();
    }
    return Scalar();
}

}  // namespace

UnitarityReport weighted_unitarity_check(const SpectralContext& sc, const CoactionBlock& cb) {
    const Presentation& p = sc.pairing().su2().pres();
    const LevelBlock& b = sc.level(cb.two_l);
    UnitarityReport rep;
    size_t n = cb.n;

    std::vector<std::vector<NCPoly>> Qstar(n, std::vector<NCPoly>(n, NCPoly(Alg::SU2)));
    for (size_t a = 0; a < n; ++a)
        for (size_t i = 0; i < n; ++i) Qstar[a][i] = nc_star(p, cb.Q[a][i]);

    NCPoly unit = NCPoly::unit(Alg::SU2);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            // columns: sum_a n_a Q*_{ai} Q_{aj} = delta_ij n_i
            NCPoly acc(Alg::SU2);
            for (size_t a = 0; a < n; ++a)
                acc = acc + nc_mul(p, Qstar[a][i], cb.Q[a][j]) * b.vectors[a].squared_norm;
            if (i == j) acc = acc - unit * b.vectors[i].squared_norm;
            ++rep.columns.checked;
            if (!acc.is_zero()) {
                rep.columns.pass = false;
                ++rep.columns.failures;
            }
            // rows: sum_b n_b^{-1} Q_{ib} Q*_{jb} = delta_ij n_i^{-1}
            NCPoly acc2(Alg::SU2);
            for (size_t a = 0; a < n; ++a)
                acc2 = acc2 +
                       nc_mul(p, cb.Q[i][a], Qstar[j][a]) * b.vectors[a].squared_norm.inverse();
            if (i == j) acc2 = acc2 - unit * b.vectors[i].squared_norm.inverse();
            ++rep.rows.checked;
            if (!acc2.is_zero()) {
                rep.rows.pass = false;
                ++rep.rows.failures;
            }
        }
    }
    return rep;
}

MatrixIdentityReport twisted_trace_invariance(const SpectralContext& sc, const CoactionBlock& cb,
                                              TraceWeight weight) {
    const Presentation& p = sc.pairing().su2().pres();
    const LevelBlock& b = sc.level(cb.two_l);
    MatrixIdentityReport rep;
    size_t n = cb.n;

    std::vector<Scalar> w(n);
    for (size_t a = 0; a < n; ++a) w[a] = trace_weight(weight, b.vectors[a]);

    std::vector<std::vector<NCPoly>> Qstar(n, std::vector<NCPoly>(n, NCPoly(Alg::SU2)));
    for (size_t a = 0; a < n; ++a)
        for (size_t i = 0; i < n; ++i) Qstar[a][i] = nc_star(p, cb.Q[a][i]);

    NCPoly unit = NCPoly::unit(Alg::SU2);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            NCPoly acc(Alg::SU2);
            for (size_t a = 0; a < n; ++a) {
                if (w[a].is_zero()) continue;
                acc = acc + nc_mul(p, cb.Q[a][i], Qstar[a][j]) * (w[a] * b.vectors[a].squared_norm);
            }
            if (i == j) acc = acc - unit * (w[i] * b.vectors[i].squared_norm);
            ++rep.checked;
            if (!acc.is_zero()) {
                rep.pass = false;
                ++rep.failures;
            }
        }
    }
    return rep;
}

bool dirac_swap_bookkeeping(const SpectralContext& sc, int two_l) {
    const LevelBlock& b = sc.level(two_l);
    // Both N-slots at every m with nonzero norms, and the swap is an
    // involution pairing them off: the formal combinations v_+ +- v_- are
    // then fixed (resp. negated) by the swap, which is the stated eigenspace
    // bookkeeping for D.
    for (int two_k = -two_l; two_k <= two_l; two_k += 2) {
        const BasisVector* plus = b.find(two_k, +1);
        const BasisVector* minus = b.find(two_k, -1);
        if (!plus || !minus) return false;
        if (plus->squared_norm.is_zero() || minus->squared_norm.is_zero()) return false;
    }
    return b.vectors.size() == 2 * (static_cast<size_t>(two_l) + 1);
}

LevelStateReport level_state_check(const SpectralContext& sc, int two_l, const NCPoly& x) {
    const Presentation& p = sc.pairing().su2().pres();
    const LevelBlock& b = sc.level(two_l);
    LevelStateReport rep;
    Scalar num, den;
    for (const auto& v : b.vectors) {
        Scalar r = q_pow(-2 * v.two_k);  // R-eigenvalue mu^{-2m}
        Scalar diag = inner_product(p, v.payload, nc_mul(p, x, v.payload)) / v.squared_norm;
        num += r * diag;
        den += r;
    }
    rep.level_value = num / den;
    rep.haar_value = haar(x);
    rep.match = (rep.level_value == rep.haar_value);
    return rep;
}

}  // namespace qmu

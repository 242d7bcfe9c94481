#include "qmu/hopf.hpp"

namespace qmu {

HopfAlgebra::HopfAlgebra(Presentation pres, std::vector<TensorPoly> gen_coproduct,
                         std::vector<Scalar> gen_counit, std::vector<NCPoly> gen_antipode)
    : pres_(std::move(pres)),
      gen_coproduct_(std::move(gen_coproduct)),
      gen_counit_(std::move(gen_counit)),
      gen_antipode_(std::move(gen_antipode)) {}

const TensorPoly& HopfAlgebra::mono_coproduct(const Mono& m) const {
    {
        std::shared_lock lock(memo_mutex_);
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
    }
    Word w = mono_to_word(pres_.alg, m);
    TensorPoly t = TensorPoly::simple(NCPoly::unit(pres_.alg), NCPoly::unit(pres_.alg));
    for (uint8_t l : w) t = tensor_mul(pres_, pres_, t, gen_coproduct_[l]);
    std::unique_lock lock(memo_mutex_);
    return memo_.emplace(m, std::move(t)).first->second;
}

TensorPoly HopfAlgebra::coproduct(const NCPoly& x) const {
    TensorPoly out(pres_.alg, pres_.alg);
    for (const auto& [m, c] : x.terms()) out = out + mono_coproduct(m) * c;
    return out;
}

Scalar HopfAlgebra::counit(const NCPoly& x) const {
    Scalar out;
    for (const auto& [m, c] : x.terms()) {
        Scalar e = c;
        for (uint8_t l : mono_to_word(pres_.alg, m)) {
            if (e.is_zero()) break;
            e *= gen_counit_[l];
        }
        out += e;
    }
    return out;
}

NCPoly HopfAlgebra::antipode(const NCPoly& x) const {
    NCPoly out(pres_.alg);
    for (const auto& [m, c] : x.terms()) {
        Word w = mono_to_word(pres_.alg, m);
        NCPoly acc = NCPoly::unit(pres_.alg) * c;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            acc = nc_mul(pres_, acc, gen_antipode_[*it]);
        out = out + acc;
    }
    return out;
}

Tensor3Poly HopfAlgebra::coproduct3_left(const NCPoly& x) const {
    Tensor3Poly out;
    TensorPoly d = coproduct(x);
    for (const auto& [k, c] : d.terms()) {
        const TensorPoly& inner = mono_coproduct(k.first);
        for (const auto& [ik, ic] : inner.terms())
            out.add_term({ik.first, ik.second, k.second}, c * ic);
    }
    return out;
}

Tensor3Poly HopfAlgebra::coproduct3_right(const NCPoly& x) const {
    Tensor3Poly out;
    TensorPoly d = coproduct(x);
    for (const auto& [k, c] : d.terms()) {
        const TensorPoly& inner = mono_coproduct(k.second);
        for (const auto& [ik, ic] : inner.terms())
            out.add_term({k.first, ik.first, ik.second}, c * ic);
    }
    return out;
}

namespace {

Scalar mu_pow(int k) { return Scalar::mu_power(k); }
Scalar q_pow(int k) { return Scalar::q_power(k); }

NCPoly gen(Alg a, uint8_t l) { return NCPoly::generator(a, l); }

}  // namespace

HopfAlgebra make_su2_hopf() {
    Presentation p = make_su2_presentation();
    using namespace su2;
    NCPoly A = gen(Alg::SU2, a), As = gen(Alg::SU2, as), G = gen(Alg::SU2, g),
           Gs = gen(Alg::SU2, gs);

    // Delta(a) = a(x)a - mu g*(x)g and Delta(g) = g(x)a + a*(x)g; the starred
    // generators carry the *-homomorphic images.
    std::vector<TensorPoly> dl(4);
    dl[a] = TensorPoly::simple(A, A) - TensorPoly::simple(Gs, G) * mu_pow(1);
    dl[as] = TensorPoly::simple(As, As) - TensorPoly::simple(G, Gs) * mu_pow(1);
    dl[g] = TensorPoly::simple(G, A) + TensorPoly::simple(As, G);
    dl[gs] = TensorPoly::simple(Gs, As) + TensorPoly::simple(A, Gs);

    std::vector<Scalar> eps(4);
    eps[a] = Scalar(1);
    eps[as] = Scalar(1);
    eps[g] = Scalar();
    eps[gs] = Scalar();

    std::vector<NCPoly> kappa(4);
    kappa[a] = As;
    kappa[as] = A;
    kappa[g] = G * (-mu_pow(1));
    kappa[gs] = Gs * (-mu_pow(-1));

    return HopfAlgebra(std::move(p), std::move(dl), std::move(eps), std::move(kappa));
}

HopfAlgebra make_uq_hopf() {
    Presentation p = make_uq_presentation();
    using namespace uq;
    NCPoly Fg = gen(Alg::UQ, F), Ki = gen(Alg::UQ, Kinv), Kg = gen(Alg::UQ, K),
           Eg = gen(Alg::UQ, E);

    std::vector<TensorPoly> dl(4);
    dl[E] = TensorPoly::simple(Eg, Kg) + TensorPoly::simple(Ki, Eg);
    dl[F] = TensorPoly::simple(Fg, Kg) + TensorPoly::simple(Ki, Fg);
    dl[K] = TensorPoly::simple(Kg, Kg);
    dl[Kinv] = TensorPoly::simple(Ki, Ki);

    std::vector<Scalar> eps(4);
    eps[E] = Scalar();
    eps[F] = Scalar();
    eps[K] = Scalar(1);
    eps[Kinv] = Scalar(1);

    std::vector<NCPoly> kappa(4);
    kappa[K] = Ki;
    kappa[Kinv] = Kg;
    kappa[E] = Eg * (-mu_pow(1));
    kappa[F] = Fg * (-mu_pow(-1));

    return HopfAlgebra(std::move(p), std::move(dl), std::move(eps), std::move(kappa));
}

Scalar haar_mono(const Mono& m) {
    if (m.e0 != 0 || m.e1 != m.e2) return Scalar();
    int k = m.e1;
    // (1 - mu^2)/(1 - mu^{2k+2}) in q
    QPoly num{Rat(1)};
    num = num - QPoly::monomial(4);
    QPoly den{Rat(1)};
    den = den - QPoly::monomial(4 * k + 4);
    return Scalar(QRat(num, den));
}

Scalar haar(const NCPoly& x) {
    Scalar out;
    for (const auto& [m, c] : x.terms()) out += c * haar_mono(m);
    return out;
}

Scalar inner_product(const Presentation& p, const NCPoly& x, const NCPoly& y) {
    return haar(nc_mul(p, nc_star(p, x), y));
}

namespace {

// Single-generator pairing values on SU2 letters (zero where unlisted):
//   <K, a> = q^-1, <K, a*> = q, <K^-1, a> = q, <K^-1, a*> = q^-1,
//   <E, g> = 1, <F, g*> = -mu^-1.
Scalar pair_letter(uint8_t f, uint8_t x) {
    using namespace su2;
    switch (f) {
        case uq::K:
            if (x == a) return q_pow(-1);
            if (x == as) return q_pow(1);
            return Scalar();
        case uq::Kinv:
            if (x == a) return q_pow(1);
            if (x == as) return q_pow(-1);
            return Scalar();
        case uq::E:
            return x == g ? Scalar(1) : Scalar();
        case uq::F:
            return x == gs ? -mu_pow(-1) : Scalar();
    }
    return Scalar();
}

// <f, word> for a single U_mu generator f, using that K is grouplike and
// Delta(E) = E(x)K + K^-1(x)E (same shape for F).
Scalar pair_letter_word(uint8_t f, const Word& w) {
    if (f == uq::K || f == uq::Kinv) {
        Scalar acc(1);
        for (uint8_t l : w) {
            acc *= pair_letter(f, l);
            if (acc.is_zero()) return acc;
        }
        return acc;
    }
    Scalar total;
    for (size_t i = 0; i < w.size(); ++i) {
        Scalar term = pair_letter(f, w[i]);
        if (term.is_zero()) continue;
        for (size_t j = 0; j < i && !term.is_zero(); ++j)
            term *= pair_letter(uq::Kinv, w[j]);
        for (size_t j = i + 1; j < w.size() && !term.is_zero(); ++j)
            term *= pair_letter(uq::K, w[j]);
        total += term;
    }
    return total;
}

}  // namespace

Scalar PairingContext::pair_word(const Word& fw, const NCPoly& x) const {
    if (fw.empty()) return su2_.counit(x);
    if (fw.size() == 1) {
        Scalar out;
        for (const auto& [m, c] : x.terms())
            out += c * pair_letter_word(fw[0], mono_to_word(Alg::SU2, m));
        return out;
    }
    // <f g, x> = <f, x_(1)> <g, x_(2)>: peel the first letter.
    Word rest(fw.begin() + 1, fw.end());
    TensorPoly d = su2_.coproduct(x);
    Scalar out;
    for (const auto& [k, c] : d.terms()) {
        Scalar left = pair_letter_word(fw[0], mono_to_word(Alg::SU2, k.first));
        if (left.is_zero()) continue;
        out += c * left * pair_word(rest, NCPoly::monomial(Alg::SU2, k.second, Scalar(1)));
    }
    return out;
}

Scalar PairingContext::pair(const NCPoly& f, const NCPoly& x) const {
    Scalar out;
    for (const auto& [m, c] : f.terms())
        out += c * pair_word(mono_to_word(Alg::UQ, m), x);
    return out;
}

namespace {

// Diagonal weights of the K-actions on SU2 letters.
Scalar left_K_weight(uint8_t l, bool inverse) {
    using namespace su2;
    int e = (l == a || l == g) ? -1 : 1;  // K |> a = q^-1 a, K |> a* = q a*, ...
    return q_pow(inverse ? -e : e);
}

Scalar right_K_weight(uint8_t l, bool inverse) {
    using namespace su2;
    int e = (l == a || l == gs) ? -1 : 1;  // a <| K = q^-1 a, g <| K = q g, ...
    return q_pow(inverse ? -e : e);
}

struct LetterImage {
    Word w;
    Scalar c;
};

// E |> a = -mu g*, E |> g = a*; F |> g* = -mu^-1 a, F |> a* = g.
std::vector<LetterImage> left_letter_image(uint8_t f, uint8_t l) {
    using namespace su2;
    if (f == uq::E) {
        if (l == a) return {{Word{gs}, -mu_pow(1)}};
        if (l == g) return {{Word{as}, Scalar(1)}};
        return {};
    }
    if (l == gs) return {{Word{a}, -mu_pow(-1)}};
    if (l == as) return {{Word{g}, Scalar(1)}};
    return {};
}

// g <| E = a, a* <| E = -mu g*; a <| F = g, g* <| F = -mu^-1 a*.
std::vector<LetterImage> right_letter_image(uint8_t l, uint8_t f) {
    using namespace su2;
    if (f == uq::E) {
        if (l == g) return {{Word{a}, Scalar(1)}};
        if (l == as) return {{Word{gs}, -mu_pow(1)}};
        return {};
    }
    if (l == a) return {{Word{g}, Scalar(1)}};
    if (l == gs) return {{Word{as}, -mu_pow(-1)}};
    return {};
}

}  // namespace

NCPoly PairingContext::act_left_letter(uint8_t f, const NCPoly& x) const {
    const Presentation& p = su2_.pres();
    if (f == uq::K || f == uq::Kinv) {
        NCPoly out(Alg::SU2);
        for (const auto& [m, c] : x.terms()) {
            Scalar w(1);
            for (uint8_t l : mono_to_word(Alg::SU2, m)) w *= left_K_weight(l, f == uq::Kinv);
            out = out + NCPoly::monomial(Alg::SU2, m, c * w);
        }
        return out;
    }
    // Twisted Leibniz: the hit letter takes E (or F), the prefix K^-1, the
    // suffix K; prefix/suffix actions are diagonal.
    FreePoly acc;
    for (const auto& [m, c] : x.terms()) {
        Word w = mono_to_word(Alg::SU2, m);
        for (size_t i = 0; i < w.size(); ++i) {
            auto images = left_letter_image(f, w[i]);
            if (images.empty()) continue;
            Scalar factor = c;
            for (size_t j = 0; j < i; ++j) factor *= left_K_weight(w[j], true);
            for (size_t j = i + 1; j < w.size(); ++j) factor *= left_K_weight(w[j], false);
            for (const auto& img : images) {
                Word nw(w.begin(), w.begin() + i);
                nw.insert(nw.end(), img.w.begin(), img.w.end());
                nw.insert(nw.end(), w.begin() + i + 1, w.end());
                free_add(acc, nw, factor * img.c);
            }
        }
    }
    return nc_normalize(p, acc);
}

NCPoly PairingContext::act_right_letter(const NCPoly& x, uint8_t f) const {
    const Presentation& p = su2_.pres();
    if (f == uq::K || f == uq::Kinv) {
        NCPoly out(Alg::SU2);
        for (const auto& [m, c] : x.terms()) {
            Scalar w(1);
            for (uint8_t l : mono_to_word(Alg::SU2, m)) w *= right_K_weight(l, f == uq::Kinv);
            out = out + NCPoly::monomial(Alg::SU2, m, c * w);
        }
        return out;
    }
    FreePoly acc;
    for (const auto& [m, c] : x.terms()) {
        Word w = mono_to_word(Alg::SU2, m);
        for (size_t i = 0; i < w.size(); ++i) {
            auto images = right_letter_image(w[i], f);
            if (images.empty()) continue;
            Scalar factor = c;
            for (size_t j = 0; j < i; ++j) factor *= right_K_weight(w[j], true);
            for (size_t j = i + 1; j < w.size(); ++j) factor *= right_K_weight(w[j], false);
            for (const auto& img : images) {
                Word nw(w.begin(), w.begin() + i);
                nw.insert(nw.end(), img.w.begin(), img.w.end());
                nw.insert(nw.end(), w.begin() + i + 1, w.end());
                free_add(acc, nw, factor * img.c);
            }
        }
    }
    return nc_normalize(p, acc);
}

NCPoly PairingContext::act_left(const NCPoly& f, const NCPoly& x) const {
    NCPoly out(Alg::SU2);
    for (const auto& [m, c] : f.terms()) {
        // (F^p K^b E^e) |> x = F^p |> (K^b |> (E^e |> x))
        NCPoly acc = x;
        for (int i = 0; i < m.e2; ++i) acc = act_left_letter(uq::E, acc);
        for (int i = 0; i < m.e1; ++i) acc = act_left_letter(uq::K, acc);
        for (int i = 0; i < -m.e1; ++i) acc = act_left_letter(uq::Kinv, acc);
        for (int i = 0; i < m.e0; ++i) acc = act_left_letter(uq::F, acc);
        out = out + acc * c;
    }
    return out;
}

NCPoly PairingContext::act_right(const NCPoly& x, const NCPoly& f) const {
    NCPoly out(Alg::SU2);
    for (const auto& [m, c] : f.terms()) {
        // x <| (F^p K^b E^e) = ((x <| F^p) <| K^b) <| E^e
        NCPoly acc = x;
        for (int i = 0; i < m.e0; ++i) acc = act_right_letter(acc, uq::F);
        for (int i = 0; i < m.e1; ++i) acc = act_right_letter(acc, uq::K);
        for (int i = 0; i < -m.e1; ++i) acc = act_right_letter(acc, uq::Kinv);
        for (int i = 0; i < m.e2; ++i) acc = act_right_letter(acc, uq::E);
        out = out + acc * c;
    }
    return out;
}

NCPoly PairingContext::act_left_via_pairing(const NCPoly& f, const NCPoly& x) const {
    TensorPoly d = su2_.coproduct(x);
    return tensor_apply_right(d, Alg::SU2, [&](const Mono& m2) {
        return pair(f, NCPoly::monomial(Alg::SU2, m2, Scalar(1)));
    });
}

NCPoly PairingContext::act_right_via_pairing(const NCPoly& x, const NCPoly& f) const {
    TensorPoly d = su2_.coproduct(x);
    return tensor_apply_left(d, Alg::SU2, [&](const Mono& m1) {
        return pair(f, NCPoly::monomial(Alg::SU2, m1, Scalar(1)));
    });
}

}  // namespace qmu

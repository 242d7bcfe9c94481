#include "qmu/algebras.hpp"

namespace qmu {

namespace {
Scalar mu_pow(int k) { return Scalar::mu_power(k); }
}

Presentation make_su2_presentation() {
    Presentation p;
    p.alg = Alg::SU2;
    p.gen_names = {"a", "a*", "g", "g*"};
    p.involution = {su2::as, su2::a, su2::gs, su2::g};
    p.rank = {0, 1, 2, 3};
    p.flagged = {true, true, false, false};

    using W = Word;
    auto one = Scalar(1);
    p.rules = {
        {W{su2::g, su2::a}, {{W{su2::a, su2::g}, mu_pow(-1)}}},
        {W{su2::gs, su2::a}, {{W{su2::a, su2::gs}, mu_pow(-1)}}},
        {W{su2::g, su2::as}, {{W{su2::as, su2::g}, mu_pow(1)}}},
        {W{su2::gs, su2::as}, {{W{su2::as, su2::gs}, mu_pow(1)}}},
        {W{su2::gs, su2::g}, {{W{su2::g, su2::gs}, one}}},
        {W{su2::as, su2::a}, {{W{}, one}, {W{su2::g, su2::gs}, -one}}},
        {W{su2::a, su2::as}, {{W{}, one}, {W{su2::g, su2::gs}, -mu_pow(2)}}},
    };
    p.validate();
    return p;
}

Presentation make_uq_presentation() {
    Presentation p;
    p.alg = Alg::UQ;
    p.gen_names = {"F", "Kinv", "K", "E"};
    p.involution = {uq::E, uq::Kinv, uq::K, uq::F};
    p.rank = {0, 1, 2, 3};
    p.flagged = {false, false, false, true};

    using W = Word;
    auto one = Scalar(1);
    // cf = (mu - mu^-1)^-1 = q^2/(q^4 - 1)
    Scalar cf = (mu_pow(1) - mu_pow(-1)).inverse();
    p.rules = {
        {W{uq::K, uq::F}, {{W{uq::F, uq::K}, mu_pow(-1)}}},
        {W{uq::Kinv, uq::F}, {{W{uq::F, uq::Kinv}, mu_pow(1)}}},
        {W{uq::E, uq::K}, {{W{uq::K, uq::E}, mu_pow(-1)}}},
        {W{uq::E, uq::Kinv}, {{W{uq::Kinv, uq::E}, mu_pow(1)}}},
        {W{uq::E, uq::F},
         {{W{uq::F, uq::E}, one}, {W{uq::K, uq::K}, cf}, {W{uq::Kinv, uq::Kinv}, -cf}}},
        {W{uq::K, uq::Kinv}, {{W{}, one}}},
        {W{uq::Kinv, uq::K}, {{W{}, one}}},
    };
    p.validate();
    return p;
}

namespace {

NCPoly norm_word(const Presentation& p, std::initializer_list<uint8_t> w, Scalar c = Scalar(1)) {
    FreePoly fp;
    free_add(fp, Word(w), c);
    return nc_normalize(p, fp);
}

}  // namespace

std::vector<std::pair<std::string, NCPoly>> su2_relation_residuals(const Presentation& p) {
    using namespace su2;
    NCPoly one = NCPoly::unit(Alg::SU2);
    std::vector<std::pair<std::string, NCPoly>> out;
    // a* a + g* g = 1
    out.emplace_back("su2.unit_left",
                     norm_word(p, {as, a}) + norm_word(p, {gs, g}) - one);
    // a a* + mu^2 g g* = 1
    out.emplace_back("su2.unit_right",
                     norm_word(p, {a, as}) + norm_word(p, {g, gs}, mu_pow(2)) - one);
    // g g* = g* g
    out.emplace_back("su2.normality", norm_word(p, {g, gs}) - norm_word(p, {gs, g}));
    // mu g a = a g
    out.emplace_back("su2.commute_g", norm_word(p, {g, a}, mu_pow(1)) - norm_word(p, {a, g}));
    // mu g* a = a g*
    out.emplace_back("su2.commute_gs", norm_word(p, {gs, a}, mu_pow(1)) - norm_word(p, {a, gs}));
    return out;
}

std::vector<std::pair<std::string, NCPoly>> uq_relation_residuals(const Presentation& p) {
    using namespace uq;
    NCPoly one = NCPoly::unit(Alg::UQ);
    Scalar cf = (mu_pow(1) - mu_pow(-1)).inverse();
    std::vector<std::pair<std::string, NCPoly>> out;
    out.emplace_back("uq.kkinv", norm_word(p, {K, Kinv}) - one);
    out.emplace_back("uq.kinvk", norm_word(p, {Kinv, K}) - one);
    // K E = mu E K
    out.emplace_back("uq.ke", norm_word(p, {K, E}) - norm_word(p, {E, K}, mu_pow(1)));
    // F K = mu K F
    out.emplace_back("uq.fk", norm_word(p, {F, K}) - norm_word(p, {K, F}, mu_pow(1)));
    // E F - F E = cf (K^2 - K^-2)
    out.emplace_back("uq.effe",
                     norm_word(p, {E, F}) - norm_word(p, {F, E}) -
                         (norm_word(p, {K, K}) - norm_word(p, {Kinv, Kinv})) * cf);
    // involution facts: E* = F, F* = E, K* = K, (K^-1)* = K^-1
    out.emplace_back("uq.star_e", nc_star(p, norm_word(p, {E})) - norm_word(p, {F}));
    out.emplace_back("uq.star_f", nc_star(p, norm_word(p, {F})) - norm_word(p, {E}));
    out.emplace_back("uq.star_k", nc_star(p, norm_word(p, {K})) - norm_word(p, {K}));
    out.emplace_back("uq.star_kinv", nc_star(p, norm_word(p, {Kinv})) - norm_word(p, {Kinv}));
    return out;
}

}  // namespace qmu

#pragma once

#include "qmu/algebras.hpp"
#include "qmu/tensor.hpp"

#include <shared_mutex>

namespace qmu {

/// Hopf-* structure of a presented algebra: per-generator coproduct, counit
/// and antipode, extended homomorphically (coproduct, counit) and
/// anti-homomorphically (antipode).  Coproducts of basis monomials are
/// memoized behind a reader/writer lock.
class HopfAlgebra {
public:
    HopfAlgebra(Presentation pres, std::vector<TensorPoly> gen_coproduct,
                std::vector<Scalar> gen_counit, std::vector<NCPoly> gen_antipode);

    const Presentation& pres() const { return pres_; }
    Alg alg() const { return pres_.alg; }

    TensorPoly coproduct(const NCPoly& x) const;
    Scalar counit(const NCPoly& x) const;
    NCPoly antipode(const NCPoly& x) const;

    // Coassociativity legs used by the axiom suite.
    Tensor3Poly coproduct3_left(const NCPoly& x) const;   // (Delta (x) id) Delta
    Tensor3Poly coproduct3_right(const NCPoly& x) const;  // (id (x) Delta) Delta

private:
    const TensorPoly& mono_coproduct(const Mono& m) const;

    Presentation pres_;
    std::vector<TensorPoly> gen_coproduct_;
    std::vector<Scalar> gen_counit_;
    std::vector<NCPoly> gen_antipode_;
    mutable std::shared_mutex memo_mutex_;
    mutable std::map<Mono, TensorPoly, MonoGradedLess> memo_;
};

HopfAlgebra make_su2_hopf();
HopfAlgebra make_uq_hopf();

// Haar state of O(SU_mu(2)): h vanishes on every normal monomial except the
// powers of g g*, with h((g g*)^k) = (1 - mu^2)/(1 - mu^{2k+2}).
Scalar haar(const NCPoly& x);
Scalar haar_mono(const Mono& m);

// <x, y> = h(x* y) on O(SU_mu(2)).
Scalar inner_product(const Presentation& p, const NCPoly& x, const NCPoly& y);

/// Dual pairing of U_mu(su(2)) with O(SU_mu(2)) and the induced actions.
/// The generator values are the table of the presentations; the pairing
/// extends through both coproducts.
class PairingContext {
public:
    PairingContext(const HopfAlgebra& su2_hopf, const HopfAlgebra& uq_hopf)
        : su2_(su2_hopf), uq_(uq_hopf) {}

    Scalar pair(const NCPoly& f, const NCPoly& x) const;

    // f |> x = <f, x_(2)> x_(1)  and  x <| f = <f, x_(1)> x_(2).
    // The fast route folds the generator table through the twisted Leibniz
    // rule; the _via_pairing route expands the coproduct and is the oracle.
    NCPoly act_left(const NCPoly& f, const NCPoly& x) const;
    NCPoly act_right(const NCPoly& x, const NCPoly& f) const;
    NCPoly act_left_via_pairing(const NCPoly& f, const NCPoly& x) const;
    NCPoly act_right_via_pairing(const NCPoly& x, const NCPoly& f) const;

    const HopfAlgebra& su2() const { return su2_; }
    const HopfAlgebra& uq() const { return uq_; }

private:
    Scalar pair_word(const Word& fw, const NCPoly& x) const;
    NCPoly act_left_letter(uint8_t f, const NCPoly& x) const;
    NCPoly act_right_letter(const NCPoly& x, uint8_t f) const;

    const HopfAlgebra& su2_;
    const HopfAlgebra& uq_;
};

}  // namespace qmu

#pragma once

#include "qmu/podles.hpp"

namespace qmu {

/// Unnormalized spectral basis vector
///   v~^l_{k,j} = F^{l-k} |> (y_1^{l-|j|} u_j),   j = +-1/2 inside H,
/// stored with doubled half-integer indices and its squared norm
/// <v~, v~> = h(v~* v~).  Normalization constants are never extracted as
/// radicals; every downstream identity is phrased in squared norms.
struct BasisVector {
    int two_l = 0, two_k = 0, two_j = 0;
    NCPoly payload;
    Scalar squared_norm;
};

struct LevelBlock {
    int two_l = 0;
    std::vector<BasisVector> vectors;  // j = +1/2 block then j = -1/2, k descending
    const BasisVector* find(int two_k, int two_j) const;
    size_t index_of(int two_k, int two_j) const;
};

/// Holds the ingredients u_j, w_j, y_1 and builds level blocks on demand.
class SpectralContext {
public:
    SpectralContext(const PairingContext& pairing, const RadicalTower& tower,
                    int max_two_l = 3);

    const LevelBlock& level(int two_l) const;  // builds and caches; guard enforced
    int max_two_l() const { return max_two_l_; }
    void set_max_two_l(int m) { max_two_l_ = m; }

    const PairingContext& pairing() const { return pairing_; }
    const RadicalTower& tower() const { return tower_; }

    NCPoly u_half() const { return u_half_; }
    NCPoly u_minus_half() const { return u_minus_half_; }
    NCPoly y1() const { return y1_; }

private:
    LevelBlock build_level(int two_l) const;

    const PairingContext& pairing_;
    const RadicalTower& tower_;
    int max_two_l_;
    NCPoly u_half_, u_minus_half_, w_half_, y1_;
    mutable std::map<int, LevelBlock> cache_;
};

struct GramReport {
    int two_l = 0;
    bool diagonal = true;            // all off-diagonal inner products vanish
    bool diagonal_nonzero = true;    // squared norms are nonzero scalars
    bool numerically_positive = true;  // certified > 0 at the sample point
    std::vector<Scalar> squared_norms;
};
GramReport gram_check(const SpectralContext& sc, int two_l);

struct SpanCheckReport {
    bool generators_in_span = false;  // a, g, a*, g* lie in the payload span
    bool payloads_in_span = false;    // payloads lie in span{a, g, a*, g*}
    size_t dimension = 0;
};
// Remark-level fact: the four payloads at 2l = 1 span exactly {a, g, a*, g*}.
SpanCheckReport low_level_span_check(const SpectralContext& sc);

struct PiExpansion {
    // Expansion of x * v~_src over the unnormalized vectors of levels
    // 2l-2, 2l, 2l+2 (those that exist): coefficient and target indices.
    struct Entry {
        int two_l, two_k, two_j;
        Scalar coeff;
    };
    std::vector<Entry> entries;      // nonzero coefficients only
    bool residual_zero = false;
    bool support_ok = false;         // matches the expected (m-shift, same-N) slots
};

// m_shift is +0 for A, -1 for B, +1 for B* (doubled: 0, -2, +2).
PiExpansion pi_expand(const SpectralContext& sc, const NCPoly& x, int doubled_m_shift,
                      int two_l, int two_k, int two_j);

struct CoactionBlock {
    int two_l = 0;
    size_t n = 0;
    std::vector<std::vector<NCPoly>> Q;  // Delta(v~_i) = sum_a v~_a (x) Q[a][i]
    bool residual_zero = false;
    bool n_diagonal = false;  // observed: first leg stays in the same N block
};
CoactionBlock coaction_block(const SpectralContext& sc, int two_l);

struct MatrixIdentityReport {
    bool pass = true;
    size_t checked = 0;
    size_t failures = 0;
};

// Columns: sum_a n_a Q*_{ai} Q_{aj} = delta_{ij} n_i; rows with inverse-norm
// weights.  Radical-free content of unitarity of the orthonormalized block.
struct UnitarityReport {
    MatrixIdentityReport columns, rows;
};
UnitarityReport weighted_unitarity_check(const SpectralContext& sc, const CoactionBlock& cb);

enum class TraceWeight {
    R,          // mu^{-2m}
    R0,         // mu^{-2m -+ 1} for N = +-1/2
    Untwisted,  // weight 1 (negative control: fails for mu != 1)
    TauPlus,    // R0 weights restricted to N = +1/2
    TauMinus,   // R0 weights restricted to N = -1/2
};

// sum_a w_a n_a Q_{ai} Q*_{aj} = delta_{ij} w_i n_i for all matrix units.
MatrixIdentityReport twisted_trace_invariance(const SpectralContext& sc,
                                              const CoactionBlock& cb, TraceWeight weight);

// Index bookkeeping of the Dirac operator: at every (l, m) both N-slots exist
// with nonzero norms, and the formal N-swap fixes the normalized sum and
// negates the normalized difference.
bool dirac_swap_bookkeeping(const SpectralContext& sc, int two_l);

struct LevelStateReport {
    Scalar level_value;  // sum_a r_a <v_a, x v_a>/n_a  /  sum_a r_a
    Scalar haar_value;
    bool match = false;
};
// Per-level content of h(x) = tau_R(x)/tau_R(1) for sphere elements.
LevelStateReport level_state_check(const SpectralContext& sc, int two_l, const NCPoly& x);

}  // namespace qmu

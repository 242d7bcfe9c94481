#pragma once

#include "qmu/presentation.hpp"

#include <optional>

namespace qmu {

/// Normal monomial as a packed exponent vector.
///
/// SU2: e0 is the alpha exponent (negative values mean alpha*), e1 the gamma
/// exponent, e2 the gamma* exponent; the word reads a^e0 g^e1 g*^e2 (or
/// a*^-e0 ...).  UQ: F^e0 K^e1 E^e2 with e1 ranging over Z.
struct Mono {
    int e0 = 0, e1 = 0, e2 = 0;
    int degree() const { return std::abs(e0) + std::abs(e1) + std::abs(e2); }
    auto operator<=>(const Mono&) const = default;
};

struct MonoGradedLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return std::tie(a.e0, a.e1, a.e2) < std::tie(b.e0, b.e1, b.e2);
    }
};

Word mono_to_word(Alg alg, const Mono& m);
Mono word_to_mono(Alg alg, const Word& w);  // requires the normal shape
bool word_is_normal_shape(Alg alg, const Word& w);

/// Element of a presented algebra in normal form: a sparse mapping from
/// normal monomials to scalars.  Values are immutable after construction.
class NCPoly {
public:
    using TermMap = std::map<Mono, Scalar, MonoGradedLess>;

    NCPoly() = default;
    explicit NCPoly(Alg alg) : alg_(alg) {}
    NCPoly(Alg alg, TermMap terms);

    static NCPoly unit(Alg alg) { return NCPoly(alg, {{Mono{}, Scalar(1)}}); }
    static NCPoly generator(Alg alg, uint8_t letter);
    static NCPoly monomial(Alg alg, const Mono& m, const Scalar& c);

    Alg alg() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    int max_degree() const;

    Scalar coeff(const Mono& m) const;

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const Scalar& s) const;
    bool operator==(const NCPoly& o) const { return alg_ == o.alg_ && terms_ == o.terms_; }

    std::string to_string(const Presentation& p) const;

private:
    void prune();
    Alg alg_ = Alg::SU2;
    TermMap terms_;
};

// Unique normal form of a word polynomial; idempotent on normal input.
NCPoly nc_normalize(const Presentation& p, const FreePoly& input);

NCPoly nc_mul(const Presentation& p, const NCPoly& a, const NCPoly& b);
NCPoly nc_star(const Presentation& p, const NCPoly& a);
inline bool nc_is_zero(const NCPoly& a) { return a.is_zero(); }

// True iff every normal monomial of a has total degree of the given parity
// (0 = even, 1 = odd); meaningful for the SU2 instance.
bool degree_filter_even(const NCPoly& a);

struct SpanSolution {
    bool dependent_basis = false;
    std::optional<std::vector<Scalar>> coeffs;  // set iff target lies in the span
};

// Exact coordinates of target against the basis, or a definite negative.
SpanSolution solve_in_span(const NCPoly& target, const std::vector<NCPoly>& basis);

// Rank of the coordinate matrix of the given vectors.
size_t span_rank(const std::vector<NCPoly>& vecs);

std::string mono_to_string(const Presentation& p, Alg alg, const Mono& m);

}  // namespace qmu

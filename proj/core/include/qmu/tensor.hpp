#pragma once

#include "qmu/ncpoly.hpp"

namespace qmu {

/// Element of A (x) B as a sparse mapping from monomial pairs to scalars;
/// both legs are kept in normal form.
class TensorPoly {
public:
    using Key = std::pair<Mono, Mono>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            MonoGradedLess ml;
            if (ml(a.first, b.first)) return true;
            if (ml(b.first, a.first)) return false;
            return ml(a.second, b.second);
        }
    };
    using TermMap = std::map<Key, Scalar, KeyLess>;

    TensorPoly() = default;
    TensorPoly(Alg left, Alg right) : left_(left), right_(right) {}

    static TensorPoly simple(const NCPoly& x, const NCPoly& y);

    Alg left_alg() const { return left_; }
    Alg right_alg() const { return right_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Mono& a, const Mono& b, const Scalar& c);

    TensorPoly operator-() const;
    TensorPoly operator+(const TensorPoly& o) const;
    TensorPoly operator-(const TensorPoly& o) const;
    TensorPoly operator*(const Scalar& s) const;
    bool operator==(const TensorPoly& o) const { return terms_ == o.terms_; }

    // Collects the terms by first-leg monomial.
    std::map<Mono, NCPoly, MonoGradedLess> rows_by_first_leg() const;

    std::string to_string(const Presentation& pl, const Presentation& pr) const;

private:
    Alg left_ = Alg::SU2, right_ = Alg::SU2;
    TermMap terms_;
};

TensorPoly tensor_mul(const Presentation& pl, const Presentation& pr, const TensorPoly& a,
                      const TensorPoly& b);

// Applies a linear functional to one leg and collects the other.
NCPoly tensor_apply_right(const TensorPoly& t, Alg out_alg,
                          const std::function<Scalar(const Mono&)>& f);
NCPoly tensor_apply_left(const TensorPoly& t, Alg out_alg,
                         const std::function<Scalar(const Mono&)>& f);

struct TensorExtraction {
    bool dependent_basis = false;
    std::vector<NCPoly> coeffs;   // second-leg coefficients per basis element
    TensorPoly residual;          // zero iff the first leg lies in the span
    bool ok() const { return !dependent_basis && residual.is_zero(); }
};

// Solves t = sum_k basis[k] (x) coeffs[k] by elimination on the first leg.
TensorExtraction tensor_extract(const TensorPoly& t, const std::vector<NCPoly>& basis);

/// Three-legged tensors, only needed to state coassociativity exactly.
class Tensor3Poly {
public:
    using Key = std::array<Mono, 3>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            MonoGradedLess ml;
            for (int i = 0; i < 3; ++i) {
                if (ml(a[i], b[i])) return true;
                if (ml(b[i], a[i])) return false;
            }
            return false;
        }
    };
    using TermMap = std::map<Key, Scalar, KeyLess>;

    bool is_zero() const { return terms_.empty(); }
    void add_term(const Key& k, const Scalar& c);
    bool operator==(const Tensor3Poly& o) const { return terms_ == o.terms_; }
    const TermMap& terms() const { return terms_; }

private:
    TermMap terms_;
};

}  // namespace qmu

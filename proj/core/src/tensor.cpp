#include "qmu/tensor.hpp"

#include <functional>
#include <sstream>

namespace qmu {

TensorPoly TensorPoly::simple(const NCPoly& x, const NCPoly& y) {
    TensorPoly t(x.alg(), y.alg());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) t.add_term(mx, my, cx * cy);
    return t;
}

void TensorPoly::add_term(const Mono& a, const Mono& b, const Scalar& c) {
    if (c.is_zero()) return;
    Key k{a, b};
    auto it = terms_.find(k);
    if (it == terms_.end())
        terms_.emplace(std::move(k), c);
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPoly TensorPoly::operator-() const {
    TensorPoly r(left_, right_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
    TensorPoly r(*this);
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const { return *this + (-o); }

TensorPoly TensorPoly::operator*(const Scalar& s) const {
    TensorPoly r(left_, right_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

std::map<Mono, NCPoly, MonoGradedLess> TensorPoly::rows_by_first_leg() const {
    std::map<Mono, NCPoly, MonoGradedLess> rows;
    for (const auto& [k, c] : terms_) {
        auto it = rows.find(k.first);
        if (it == rows.end()) it = rows.emplace(k.first, NCPoly(right_)).first;
        it->second = it->second + NCPoly::monomial(right_, k.second, c);
    }
    return rows;
}

TensorPoly tensor_mul(const Presentation& pl, const Presentation& pr, const TensorPoly& a,
                      const TensorPoly& b) {
    TensorPoly out(a.left_alg(), a.right_alg());
    for (const auto& [ka, ca] : a.terms()) {
        NCPoly la = NCPoly::monomial(a.left_alg(), ka.first, Scalar(1));
        NCPoly ra = NCPoly::monomial(a.right_alg(), ka.second, Scalar(1));
        for (const auto& [kb, cb] : b.terms()) {
            NCPoly lb = NCPoly::monomial(b.left_alg(), kb.first, Scalar(1));
            NCPoly rb = NCPoly::monomial(b.right_alg(), kb.second, Scalar(1));
            NCPoly l = nc_mul(pl, la, lb);
            NCPoly r = nc_mul(pr, ra, rb);
            Scalar f = ca * cb;
            for (const auto& [ml, cl] : l.terms())
                for (const auto& [mr, cr] : r.terms()) out.add_term(ml, mr, f * cl * cr);
        }
    }
    return out;
}

NCPoly tensor_apply_right(const TensorPoly& t, Alg out_alg,
                          const std::function<Scalar(const Mono&)>& f) {
    NCPoly::TermMap acc;
    for (const auto& [k, c] : t.terms()) {
        Scalar v = c * f(k.second);
        if (v.is_zero()) continue;
        auto it = acc.find(k.first);
        if (it == acc.end())
            acc.emplace(k.first, v);
        else
            it->second += v;
    }
    return NCPoly(out_alg, std::move(acc));
}

NCPoly tensor_apply_left(const TensorPoly& t, Alg out_alg,
                         const std::function<Scalar(const Mono&)>& f) {
    NCPoly::TermMap acc;
    for (const auto& [k, c] : t.terms()) {
        Scalar v = c * f(k.first);
        if (v.is_zero()) continue;
        auto it = acc.find(k.second);
        if (it == acc.end())
            acc.emplace(k.second, v);
        else
            it->second += v;
    }
    return NCPoly(out_alg, std::move(acc));
}

TensorExtraction tensor_extract(const TensorPoly& t, const std::vector<NCPoly>& basis) {
    TensorExtraction out;
    out.residual = t;
    if (basis.empty()) return out;
    Alg la = basis[0].alg();
    Alg ra = t.right_alg();

    // Union of first-leg monomials across basis and target.
    std::map<Mono, size_t, MonoGradedLess> col;
    for (const auto& b : basis)
        for (const auto& [m, c] : b.terms()) col.emplace(m, 0);
    auto rows = t.rows_by_first_leg();
    for (const auto& [m, r] : rows) col.emplace(m, 0);
    size_t ncols = 0;
    for (auto& [m, idx] : col) idx = ncols++;

    size_t n = basis.size();
    // Dense scalar matrix for the basis plus NCPoly right-hand side rows.
    std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(ncols, Scalar()));
    for (size_t k = 0; k < n; ++k)
        for (const auto& [m, c] : basis[k].terms()) mat[k][col.at(m)] = c;

    std::vector<NCPoly> rhs(ncols, NCPoly(ra));
    for (const auto& [m, r] : rows) rhs[col.at(m)] = r;

    // Gauss-Jordan on the system sum_k mat[k][j] * X_k = rhs[j], equations
    // indexed by first-leg monomial j, unknowns the basis coefficients X_k.
    std::vector<bool> used(ncols, false);
    std::vector<std::vector<Scalar>> m2(ncols, std::vector<Scalar>(n, Scalar()));
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < ncols; ++j) m2[j][k] = mat[k][j];

    std::vector<size_t> where(n, SIZE_MAX);
    for (size_t k = 0; k < n; ++k) {
        size_t pr = SIZE_MAX;
        for (size_t j = 0; j < ncols; ++j)
            if (!used[j] && !m2[j][k].is_zero()) {
                pr = j;
                break;
            }
        if (pr == SIZE_MAX) {
            out.dependent_basis = true;
            return out;
        }
        used[pr] = true;
        where[k] = pr;
        Scalar inv = m2[pr][k].inverse();
        for (size_t kk = 0; kk < n; ++kk) m2[pr][kk] *= inv;
        rhs[pr] = rhs[pr] * inv;
        for (size_t j = 0; j < ncols; ++j) {
            if (j == pr || m2[j][k].is_zero()) continue;
            Scalar f = m2[j][k];
            for (size_t kk = 0; kk < n; ++kk) m2[j][kk] -= f * m2[pr][kk];
            rhs[j] = rhs[j] - rhs[pr] * f;
        }
    }

    // Back-substitute: each pivot equation now reads X_k = rhs[where[k]] minus
    // contributions of later unknowns; after full Gauss-Jordan it is direct.
    out.coeffs.assign(n, NCPoly(ra));
    for (size_t k = 0; k < n; ++k) out.coeffs[k] = rhs[where[k]];

    // Residual: t - sum basis[k] (x) coeffs[k].
    TensorPoly recon(la, ra);
    for (size_t k = 0; k < n; ++k)
        recon = recon + TensorPoly::simple(basis[k], out.coeffs[k]);
    out.residual = t - recon;
    return out;
}

void Tensor3Poly::add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end())
        terms_.emplace(k, c);
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string TensorPoly::to_string(const Presentation& pl, const Presentation& pr) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs != "1") {
            bool wrap = cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos;
            out << (wrap ? "(" + cs + ")" : cs) << " ";
        }
        out << mono_to_string(pl, left_, k.first) << " (x) "
            << mono_to_string(pr, right_, k.second);
    }
    return out.str();
}

}  // namespace qmu

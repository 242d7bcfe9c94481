#include "qmu/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qmu {

namespace {
const Rat kZero(0);
}

QPoly::QPoly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

QPoly QPoly::monomial(int degree, const Rat& coeff) {
    QPoly p;
    if (coeff == 0) return p;
    p.c_.assign(degree + 1, Rat(0));
    p.c_[degree] = coeff;
    return p;
}

const Rat& QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rat& QPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void QPoly::push_raw(const Rat& coeff) { c_.push_back(coeff); }

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.normalize();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.normalize();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.normalize();
    return r;
}

QPoly QPoly::operator*(const Rat& s) const {
    QPoly r;
    if (s == 0 || is_zero()) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x *= s;
    return r;
}

void QPoly::divrem(const QPoly& d, QPoly& q, QPoly& r) const {
    if (d.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    q = QPoly();
    r = *this;
    if (r.degree() < d.degree()) return;
    q.c_.assign(r.degree() - d.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rat f = r.leading() / d.leading();
        q.c_[k] += f;
        for (int i = 0; i <= d.degree(); ++i) r.c_[i + k] -= f * d.c_[i];
        r.normalize();
    }
    q.normalize();
}

bool QPoly::divides_exactly(const QPoly& d, QPoly& q) const {
    QPoly r;
    divrem(d, q, r);
    return r.is_zero();
}

Rat QPoly::eval(const Rat& q0) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= q0;
        acc += c_[i];
    }
    return acc;
}

bool QPoly::all_degrees_divisible(int k) const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0 && i % k != 0) return false;
    return true;
}

std::string QPoly::to_string(const std::string& var, int var_pow) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = c_[i];
        if (a == 0) continue;
        Rat mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        int e = i / var_pow;  // caller guarantees divisibility when var_pow > 1
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly q, r;
        x.divrem(y, q, r);
        x = y;
        y = r;
    }
    if (!x.is_zero() && x.leading() != 1) {
        Rat inv = 1 / x.leading();
        x = x * inv;
    }
    return x;
}

bool poly_sqrt(const QPoly& p, QPoly& root) {
    if (p.is_zero()) {
        root = QPoly();
        return true;
    }
    if (p.degree() % 2 != 0) return false;
    Rat lead_root;
    if (!rat_sqrt(p.leading(), lead_root)) return false;

    // Build the candidate top-down from the leading coefficient.
    int h = p.degree() / 2;
    std::vector<Rat> s(h + 1, Rat(0));
    s[h] = lead_root;
    for (int k = h - 1; k >= 0; --k) {
        // Coefficient of q^(k+h) in s^2 must match p.
        Rat acc(0);
        for (int i = k + 1; i < h; ++i) {
            int j = k + h - i;
            if (j > i) continue;
            Rat term = s[i] * s[j];
            acc += (i == j) ? term : 2 * term;
        }
        s[k] = (p.coeff(k + h) - acc) / (2 * s[h]);
    }
    QPoly cand;
    for (auto& x : s) cand.push_raw(x);
    cand.normalize();
    if (cand * cand == p) {
        root = cand;
        return true;
    }
    return false;
}

bool rat_sqrt(const Rat& r, Rat& root) {
    if (r < 0) return false;
    if (r == 0) {
        root = 0;
        return true;
    }
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rat(rn, rd);
    return true;
}

}  // namespace qmu

#include "qmu/qrat.hpp"

#include <stdexcept>

namespace qmu {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
    reduce();
}

QRat QRat::q_power(int k) {
    if (k >= 0) return QRat(QPoly::monomial(k));
    return QRat(QPoly(Rat(1)), QPoly::monomial(-k));
}

Rat QRat::as_rational() const {
    if (!is_rational()) throw std::domain_error("QRat: not a rational constant");
    if (num_.is_zero()) return Rat(0);
    return num_.coeff(0) / den_.coeff(0);
}

void QRat::reduce() {
    if (num_.is_zero()) {
        den_ = QPoly(Rat(1));
        return;
    }
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        QPoly q;
        num_.divides_exactly(g, q);
        num_ = q;
        den_.divides_exactly(g, q);
        den_ = q;
    }
    // Scale so den is a primitive integer polynomial with positive leading
    // coefficient; the same factor is applied to num, preserving the value.
    mpz_class lcm_den(1);
    for (const Rat& c : den_.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class content(0);
    for (const Rat& c : den_.coeffs()) {
        mpz_class n = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    Rat f(lcm_den, content);
    if (den_.leading() < 0) f = -f;
    num_ = num_ * f;
    den_ = den_ * f;
}

QRat QRat::operator-() const {
    QRat r(*this);
    r.num_ = -r.num_;
    return r;
}

QRat QRat::operator+(const QRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return QRat(num_ + o.num_, den_);
    return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return QRat(num_ - o.num_, den_);
    return QRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator*(const QRat& o) const {
    if (is_zero() || o.is_zero()) return QRat();
    return QRat(num_ * o.num_, den_ * o.den_);
}

QRat QRat::operator/(const QRat& o) const {
    if (o.is_zero()) throw std::domain_error("QRat: division by zero");
    if (is_zero()) return QRat();
    return QRat(num_ * o.den_, den_ * o.num_);
}

QRat QRat::inverse() const {
    if (is_zero()) throw std::domain_error("QRat: inverse of zero");
    return QRat(den_, num_);
}

Rat QRat::eval(const Rat& q0) const {
    Rat d = den_.eval(q0);
    if (d == 0) throw std::domain_error("QRat: denominator vanishes at evaluation point");
    return num_.eval(q0) / d;
}

std::string QRat::to_string() const {
    if (num_.is_zero()) return "0";
    // Display with integer coefficients: scale both parts by the lcm of the
    // numerator's coefficient denominators, then remove the common content.
    mpz_class L(1);
    for (const Rat& c : num_.coeffs())
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
    QPoly n = num_ * Rat(L), d = den_ * Rat(L);
    mpz_class g(0);
    for (const Rat& c : n.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    for (const Rat& c : d.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    if (g > 1) {
        n = n * Rat(mpz_class(1), g);
        d = d * Rat(mpz_class(1), g);
    }
    // Prefer mu = q^2 whenever only even powers occur.
    auto render = [](const QPoly& p) {
        return p.all_degrees_divisible(2) ? p.to_string("mu", 2) : p.to_string("q", 1);
    };
    bool d_is_one = (d.degree() == 0 && d.coeff(0) == 1);
    std::string ns = render(n);
    if (d_is_one) return ns;
    std::string ds = render(d);
    std::string out = (n.degree() > 0) ? "(" + ns + ")" : ns;
    out += "/";
    out += (d.degree() > 0) ? "(" + ds + ")" : ds;
    return out;
}

}  // namespace qmu

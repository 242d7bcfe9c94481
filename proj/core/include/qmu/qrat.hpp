#pragma once

#include "qmu/qpoly.hpp"

namespace qmu {

/// Rational function num/den in q, kept in a unique reduced form:
/// gcd(num, den) = 1 and den is the primitive integer polynomial with
/// positive leading coefficient representing the denominator class.
class QRat {
public:
    QRat() : den_(Rat(1)) {}
    QRat(const Rat& r) : num_(r), den_(Rat(1)) {}
    QRat(int n) : num_(Rat(n)), den_(Rat(1)) {}
    QRat(QPoly num, QPoly den);
    explicit QRat(QPoly num) : num_(std::move(num)), den_(Rat(1)) {}

    static QRat q_power(int k);  // q^k, k may be negative

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    Rat as_rational() const;  // requires is_rational()

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    QRat operator-() const;
    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    QRat inverse() const;

    // Exact value at a rational q0; throws if the denominator vanishes there.
    Rat eval(const Rat& q0) const;

    std::string to_string() const;

private:
    void reduce();
    QPoly num_, den_;
};

}  // namespace qmu

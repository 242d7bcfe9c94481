#pragma once

#include <gmpxx.h>
#include <string>

namespace qmu {

/// Closed interval with exact rational endpoints, used to certify numeric
/// values of radical expressions.
struct QInterval {
    mpq_class lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(mpq_class point) : lo(point), hi(point) {}
    QInterval(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {}

    mpq_class width() const { return hi - lo; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
    bool strictly_positive() const { return lo > 0; }
    bool subset_of(const QInterval& o) const { return o.lo <= lo && hi <= o.hi; }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const;

    std::string to_string() const;
};

// Certified enclosure of sqrt(v) for rational v >= 0 with width <= 2^-precision_bits.
QInterval interval_sqrt(const mpq_class& v, int precision_bits);

}  // namespace qmu

#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace qmu {

using Rat = mpq_class;

/// Dense polynomial in the deformation variable q with rational coefficients.
/// Coefficient i is the coefficient of q^i; trailing zeros are stripped, so
/// the zero polynomial has an empty coefficient vector.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rat& constant);
    QPoly(std::initializer_list<Rat> coeffs);

    static QPoly monomial(int degree, const Rat& coeff = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rat& coeff(int i) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    void divrem(const QPoly& d, QPoly& q, QPoly& r) const;
    bool divides_exactly(const QPoly& d, QPoly& q) const;

    Rat eval(const Rat& q0) const;

    // Substitutes q^k for q; used to express values in mu = q^2 when printing.
    bool all_degrees_divisible(int k) const;

    void push_raw(const Rat& coeff);  // builder helper, call normalize() after
    void normalize();

    std::string to_string(const std::string& var = "q", int var_pow = 1) const;

private:
    std::vector<Rat> c_;
};

QPoly gcd(const QPoly& a, const QPoly& b);

// Exact square root in Q[q]: returns true and sets root when p is a perfect
// square (root taken with positive leading coefficient).
bool poly_sqrt(const QPoly& p, QPoly& root);

// Exact square root in Q: true iff r is the square of a rational; root >= 0.
bool rat_sqrt(const Rat& r, Rat& root);

}  // namespace qmu

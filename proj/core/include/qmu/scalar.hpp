#pragma once

#include "qmu/interval.hpp"
#include "qmu/qrat.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qmu {

/// The coefficient field is Q(q) (q = mu^{1/2}) extended by a fixed tower of
/// square roots:
///
///   r^2     = 1 + mu^2          (normalization of the Z' matrix entries)
///   sigma^2 = c                 (c = 1/t - t, a positive rational)
///   lamp^2  = c + 1/4           (lambda_pm = 1/2 +- lamp)
///   tau^2   = 1 - t             (rho = mu*t / ((mu^2+1)*tau))
///
/// At a given rational t an atom's radicand may become a square in the field
/// generated by the previous atoms (at t = 1/3, for instance, 1 - t = c/4 so
/// tau = sigma/2).  Such an atom is collapsed: it resolves to an expression in
/// the earlier atoms and never appears in normal forms.  Multiplicative
/// independence of the active radicands modulo squares is certified exactly
/// at construction; a degenerate configuration raises TowerError.
enum class Atom : int { R = 0, Sigma = 1, Lamp = 2, Tau = 3 };
constexpr int kNumAtoms = 4;

struct TowerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamConfig {
    Rat t{1, 2};                 // strictly inside (0,1)
    std::optional<Rat> q0;       // set in numeric mode; arithmetic stays symbolic in q
    Rat c() const { return Rat(1) / t - t; }
};

class Scalar;

class RadicalTower {
public:
    explicit RadicalTower(const ParamConfig& cfg);

    const ParamConfig& config() const { return cfg_; }
    bool active(Atom a) const { return active_[static_cast<int>(a)]; }
    const QRat& radicand(Atom a) const { return radicand_[static_cast<int>(a)]; }

    // The atom as a Scalar: a genuine radical when active, otherwise its
    // resolution in terms of earlier atoms.
    Scalar atom(Atom a) const;

    // Named constants used throughout the presentations.
    Scalar mu() const;           // q^2
    Scalar q() const;            // mu^{1/2}
    Scalar t() const;
    Scalar c() const;
    Scalar lambda_plus() const;  // 1/2 + lamp
    Scalar lambda_minus() const; // 1/2 - lamp
    Scalar rho() const;          // mu t / ((mu^2+1) tau)
    Scalar s() const;            // -sigma^{-1} lambda_minus

private:
    ParamConfig cfg_;
    std::array<bool, kNumAtoms> active_{};
    std::array<QRat, kNumAtoms> radicand_;
    // Resolution of a collapsed atom: coefficient body over a subset mask of
    // earlier active atoms.
    std::array<std::vector<std::pair<uint8_t, QRat>>, kNumAtoms> resolved_;
};

/// Element of the coefficient field in normal form: a sparse map from subsets
/// of active radical atoms to base-field coordinates.  Values are immutable
/// in spirit; all operators return fresh normalized scalars.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Rat& r) : Scalar(QRat(r)) {}
    Scalar(int n) : Scalar(QRat(n)) {}
    explicit Scalar(QRat v);
    Scalar(const RadicalTower* tower, std::vector<std::pair<uint8_t, QRat>> coords);

    static Scalar q_power(int k) { return Scalar(QRat::q_power(k)); }
    static Scalar mu_power(int k) { return Scalar(QRat::q_power(2 * k)); }

    bool is_zero() const { return coords_.empty(); }
    bool is_one() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    // The involution fixes q, t and every radical atom (all constants are
    // real), so conjugation is the identity; kept for readability at call
    // sites that mirror the *-algebra structure.
    Scalar conj() const { return *this; }

    // True when the value lies in Q(q) with no radical part.
    bool is_radical_free() const;
    const QRat& rational_part() const;  // coordinate of the empty subset
    const std::vector<std::pair<uint8_t, QRat>>& coords() const { return coords_; }
    const RadicalTower* tower() const { return tower_; }

    // Certified enclosure of width <= 2^-precision_bits at rational q0.
    QInterval eval(const Rat& q0, int precision_bits) const;

    std::string to_string() const;

private:
    void prune();
    const RadicalTower* tower_ = nullptr;  // needed only when radical coords exist
    std::vector<std::pair<uint8_t, QRat>> coords_;  // sorted by mask, no zero values
};

/// Expression tree accepted by scalar_normalize; produced by the parser and by
/// randomized property tests.
struct ScalarExpr {
    enum class Kind { Rational, Constant, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Rat value;                 // Rational
    std::string name;          // Constant: mu, sqrtmu, t, c, rho, s, lamp, lamm, r, sigma, tau, ...
    int exponent = 0;          // Pow
    std::vector<std::shared_ptr<ScalarExpr>> args;

    static std::shared_ptr<ScalarExpr> rational(Rat v);
    static std::shared_ptr<ScalarExpr> constant(std::string n);
    static std::shared_ptr<ScalarExpr> binary(Kind k, std::shared_ptr<ScalarExpr> a,
                                              std::shared_ptr<ScalarExpr> b);
    static std::shared_ptr<ScalarExpr> neg(std::shared_ptr<ScalarExpr> a);
    static std::shared_ptr<ScalarExpr> pow(std::shared_ptr<ScalarExpr> a, int e);
};

// Unique normal form of a scalar expression; throws std::domain_error on
// division by a scalar that normalizes to zero and on unknown constant names.
Scalar scalar_normalize(const ScalarExpr& expr, const RadicalTower& tower);

// Resolves one of the named constants.
Scalar named_scalar(const std::string& name, const RadicalTower& tower);

}  // namespace qmu

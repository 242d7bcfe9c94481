#include "qmu/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qmu {

namespace {

const char* atom_name(int i) {
    static const char* names[kNumAtoms] = {"r", "sigma", "lamp", "tau"};
    return names[i];
}

}  // namespace

RadicalTower::RadicalTower(const ParamConfig& cfg) : cfg_(cfg) {
    if (cfg.t <= 0 || cfg.t >= 1)
        throw TowerError("parameter t must satisfy 0 < t < 1");
    if (cfg.q0 && (*cfg.q0 <= 0 || *cfg.q0 >= 1))
        throw TowerError("numeric q must satisfy 0 < q < 1");

    Rat c = cfg.c();
    radicand_[0] = QRat(QPoly{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});  // 1 + q^4
    radicand_[1] = QRat(c);
    radicand_[2] = QRat(c + Rat(1, 4));
    radicand_[3] = QRat(Rat(1) - cfg.t);

    // Certify multiplicative independence modulo squares atom by atom.  A
    // radicand that is a square times a product of earlier active radicands
    // collapses: sqrt(d) = e * prod(atom_i) / prod(rad_i) for the witness
    // subset, with the positive root on every factor.
    std::vector<int> active_rational;
    for (int i = 0; i < kNumAtoms; ++i) {
        const QRat& d = radicand_[i];
        if (d.is_zero())
            throw TowerError(std::string("radicand of ") + atom_name(i) + " vanishes");
        if (i == static_cast<int>(Atom::R)) {
            // Polynomial radicand: a square would need 1 + q^4 = rho * s(q)^2.
            QPoly root;
            bool sq = poly_sqrt(d.num(), root);
            if (sq) throw TowerError("radicand 1 + mu^2 unexpectedly a square");
            active_[i] = true;
            continue;
        }
        Rat dr = d.as_rational();
        if (dr < 0)
            throw TowerError(std::string("radicand of ") + atom_name(i) + " negative");
        bool collapsed = false;
        for (size_t sub = 0; sub < (size_t(1) << active_rational.size()) && !collapsed; ++sub) {
            Rat prod = dr;
            uint8_t mask = 0;
            for (size_t b = 0; b < active_rational.size(); ++b) {
                if (sub & (size_t(1) << b)) {
                    int j = active_rational[b];
                    prod *= radicand_[j].as_rational();
                    mask |= uint8_t(1) << j;
                }
            }
            Rat e;
            if (rat_sqrt(prod, e)) {
                // sqrt(d) = e / prod(sqrt(rad_j)) = e * prod(atom_j) / prod(rad_j)
                Rat denom = prod / dr;  // product of the subset radicands
                resolved_[i] = {{mask, QRat(e / denom)}};
                collapsed = true;
            }
        }
        if (!collapsed) {
            active_[i] = true;
            active_rational.push_back(i);
        }
    }
}

Scalar RadicalTower::atom(Atom a) const {
    int i = static_cast<int>(a);
    if (active_[i]) return Scalar(this, {{uint8_t(1) << i, QRat(Rat(1))}});
    return Scalar(this, resolved_[i]);
}

Scalar RadicalTower::mu() const { return Scalar::mu_power(1); }
Scalar RadicalTower::q() const { return Scalar::q_power(1); }
Scalar RadicalTower::t() const { return Scalar(QRat(cfg_.t)); }
Scalar RadicalTower::c() const { return Scalar(QRat(cfg_.c())); }

Scalar RadicalTower::lambda_plus() const { return Scalar(Rat(1, 2)) + atom(Atom::Lamp); }
Scalar RadicalTower::lambda_minus() const { return Scalar(Rat(1, 2)) - atom(Atom::Lamp); }

Scalar RadicalTower::rho() const {
    Scalar m = mu();
    Scalar denom = (m * m + Scalar(1)) * atom(Atom::Tau);
    return m * t() / denom;
}

Scalar RadicalTower::s() const {
    return -(atom(Atom::Sigma).inverse() * lambda_minus());
}

Scalar::Scalar(QRat v) {
    if (!v.is_zero()) coords_.push_back({0, std::move(v)});
}

Scalar::Scalar(const RadicalTower* tower, std::vector<std::pair<uint8_t, QRat>> coords)
    : tower_(tower), coords_(std::move(coords)) {
    std::sort(coords_.begin(), coords_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    prune();
}

void Scalar::prune() {
    coords_.erase(std::remove_if(coords_.begin(), coords_.end(),
                                 [](const auto& kv) { return kv.second.is_zero(); }),
                  coords_.end());
    bool needs_tower = false;
    for (const auto& kv : coords_)
        if (kv.first != 0) needs_tower = true;
    if (!needs_tower) tower_ = nullptr;
}

bool Scalar::is_one() const {
    return coords_.size() == 1 && coords_[0].first == 0 &&
           coords_[0].second == QRat(Rat(1));
}

bool Scalar::operator==(const Scalar& o) const { return coords_ == o.coords_; }

bool Scalar::is_radical_free() const {
    return coords_.empty() || (coords_.size() == 1 && coords_[0].first == 0);
}

const QRat& Scalar::rational_part() const {
    static const QRat zero;
    for (const auto& kv : coords_)
        if (kv.first == 0) return kv.second;
    return zero;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    for (auto& kv : r.coords_) kv.second = -kv.second;
    return r;
}

namespace {

const RadicalTower* merge_towers(const Scalar& a, const Scalar& b) {
    const RadicalTower* ta = a.tower();
    const RadicalTower* tb = b.tower();
    if (ta && tb && ta != tb)
        throw std::logic_error("Scalar: mixing values from different radical towers");
    return ta ? ta : tb;
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    const RadicalTower* tw = merge_towers(*this, o);
    std::map<uint8_t, QRat> acc;
    for (const auto& kv : coords_) acc[kv.first] = kv.second;
    for (const auto& kv : o.coords_) {
        auto it = acc.find(kv.first);
        if (it == acc.end())
            acc.emplace(kv.first, kv.second);
        else
            it->second += kv.second;
    }
    std::vector<std::pair<uint8_t, QRat>> out(acc.begin(), acc.end());
    return Scalar(tw, std::move(out));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    const RadicalTower* tw = merge_towers(*this, o);
    std::map<uint8_t, QRat> acc;
    for (const auto& [m1, v1] : coords_) {
        for (const auto& [m2, v2] : o.coords_) {
            uint8_t common = m1 & m2;
            uint8_t mask = m1 ^ m2;
            QRat val = v1 * v2;
            for (int i = 0; i < kNumAtoms; ++i)
                if (common & (uint8_t(1) << i)) val *= tw->radicand(static_cast<Atom>(i));
            auto it = acc.find(mask);
            if (it == acc.end())
                acc.emplace(mask, std::move(val));
            else
                it->second += val;
        }
    }
    std::vector<std::pair<uint8_t, QRat>> out(acc.begin(), acc.end());
    return Scalar(tw, std::move(out));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    if (is_radical_free()) return Scalar(coords_[0].second.inverse());
    // Peel the highest atom present: with x = a + atom*b the product with the
    // conjugate a - atom*b lies in the subfield without that atom, and tower
    // nondegeneracy guarantees it is nonzero for nonzero x.
    uint8_t all = 0;
    for (const auto& kv : coords_) all |= kv.first;
    int top = 0;
    for (int i = kNumAtoms - 1; i >= 0; --i)
        if (all & (uint8_t(1) << i)) {
            top = i;
            break;
        }
    uint8_t bit = uint8_t(1) << top;
    std::vector<std::pair<uint8_t, QRat>> a, b;
    for (const auto& kv : coords_) {
        if (kv.first & bit)
            b.push_back({uint8_t(kv.first & ~bit), kv.second});
        else
            a.push_back(kv);
    }
    Scalar sa(tower_, std::move(a)), sb(tower_, std::move(b));
    Scalar conjugate = sa - tower_->atom(static_cast<Atom>(top)) * sb;
    Scalar norm = *this * conjugate;  // lies below the peeled atom
    return conjugate * norm.inverse();
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    return *this * o.inverse();
}

QInterval Scalar::eval(const Rat& q0, int precision_bits) const {
    if (q0 <= 0 || q0 >= 1)
        throw std::domain_error("Scalar::eval: q0 must lie in (0,1)");
    if (coords_.empty()) return QInterval(mpq_class(0));
    for (int prec = precision_bits + 8;; prec += 32) {
        QInterval total(mpq_class(0));
        for (const auto& [mask, v] : coords_) {
            QInterval term(v.eval(q0));
            for (int i = 0; i < kNumAtoms; ++i) {
                if (mask & (uint8_t(1) << i)) {
                    Rat rad = tower_->radicand(static_cast<Atom>(i)).eval(q0);
                    term = term * interval_sqrt(rad, prec);
                }
            }
            total = total + term;
        }
        mpq_class bound(1);
        bound >>= precision_bits;
        if (total.width() <= bound) return total;
    }
}

std::string Scalar::to_string() const {
    if (coords_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mask, v] : coords_) {
        if (!first) out << " + ";
        first = false;
        std::string body = v.to_string();
        if (mask == 0) {
            out << body;
            continue;
        }
        if (!(v == QRat(Rat(1)))) {
            bool wrap = body.find(' ') != std::string::npos;
            out << (wrap ? "(" + body + ")" : body) << "*";
        }
        bool dot = false;
        for (int i = 0; i < kNumAtoms; ++i) {
            if (mask & (uint8_t(1) << i)) {
                if (dot) out << "*";
                out << atom_name(i);
                dot = true;
            }
        }
    }
    return out.str();
}

std::shared_ptr<ScalarExpr> ScalarExpr::rational(Rat v) {
    auto e = std::make_shared<ScalarExpr>();
    e->kind = Kind::Rational;
    e->value = std::move(v);
    return e;
}

std::shared_ptr<ScalarExpr> ScalarExpr::constant(std::string n) {
    auto e = std::make_shared<ScalarExpr>();
    e->kind = Kind::Constant;
    e->name = std::move(n);
    return e;
}

std::shared_ptr<ScalarExpr> ScalarExpr::binary(Kind k, std::shared_ptr<ScalarExpr> a,
                                               std::shared_ptr<ScalarExpr> b) {
    auto e = std::make_shared<ScalarExpr>();
    e->kind = k;
    e->args = {std::move(a), std::move(b)};
    return e;
}

std::shared_ptr<ScalarExpr> ScalarExpr::neg(std::shared_ptr<ScalarExpr> a) {
    auto e = std::make_shared<ScalarExpr>();
    e->kind = Kind::Neg;
    e->args = {std::move(a)};
    return e;
}

std::shared_ptr<ScalarExpr> ScalarExpr::pow(std::shared_ptr<ScalarExpr> a, int exp) {
    auto e = std::make_shared<ScalarExpr>();
    e->kind = Kind::Pow;
    e->exponent = exp;
    e->args = {std::move(a)};
    return e;
}

Scalar named_scalar(const std::string& name, const RadicalTower& tower) {
    if (name == "mu") return tower.mu();
    if (name == "sqrtmu" || name == "q") return tower.q();
    if (name == "t") return tower.t();
    if (name == "c") return tower.c();
    if (name == "rho") return tower.rho();
    if (name == "s") return tower.s();
    if (name == "r") return tower.atom(Atom::R);
    if (name == "sigma") return tower.atom(Atom::Sigma);
    if (name == "lamp") return tower.atom(Atom::Lamp);
    if (name == "tau") return tower.atom(Atom::Tau);
    if (name == "lamm" || name == "lambda_minus") return tower.lambda_minus();
    if (name == "lambda_plus") return tower.lambda_plus();
    throw std::domain_error("unknown scalar constant: " + name);
}

Scalar scalar_normalize(const ScalarExpr& expr, const RadicalTower& tower) {
    using K = ScalarExpr::Kind;
    switch (expr.kind) {
        case K::Rational:
            return Scalar(expr.value);
        case K::Constant:
            return named_scalar(expr.name, tower);
        case K::Add:
            return scalar_normalize(*expr.args[0], tower) + scalar_normalize(*expr.args[1], tower);
        case K::Sub:
            return scalar_normalize(*expr.args[0], tower) - scalar_normalize(*expr.args[1], tower);
        case K::Mul:
            return scalar_normalize(*expr.args[0], tower) * scalar_normalize(*expr.args[1], tower);
        case K::Div: {
            Scalar d = scalar_normalize(*expr.args[1], tower);
            if (d.is_zero()) throw std::domain_error("division by a scalar that normalizes to zero");
            return scalar_normalize(*expr.args[0], tower) / d;
        }
        case K::Neg:
            return -scalar_normalize(*expr.args[0], tower);
        case K::Pow: {
            Scalar base = scalar_normalize(*expr.args[0], tower);
            int e = expr.exponent;
            if (e < 0) {
                if (base.is_zero()) throw std::domain_error("negative power of zero");
                base = base.inverse();
                e = -e;
            }
            Scalar acc(1);
            for (int i = 0; i < e; ++i) acc *= base;
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace qmu

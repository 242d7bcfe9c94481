#include "qmu/ncpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qmu {

// Letter layout, fixed by the presentation builders in algebras.cpp:
// SU2: 0 = a, 1 = a*, 2 = g, 3 = g*.   UQ: 0 = F, 1 = K^-1, 2 = K, 3 = E.

Word mono_to_word(Alg alg, const Mono& m) {
    Word w;
    if (alg == Alg::SU2) {
        w.reserve(std::abs(m.e0) + m.e1 + m.e2);
        for (int i = 0; i < m.e0; ++i) w.push_back(0);
        for (int i = 0; i < -m.e0; ++i) w.push_back(1);
        for (int i = 0; i < m.e1; ++i) w.push_back(2);
        for (int i = 0; i < m.e2; ++i) w.push_back(3);
    } else {
        w.reserve(m.e0 + std::abs(m.e1) + m.e2);
        for (int i = 0; i < m.e0; ++i) w.push_back(0);
        for (int i = 0; i < m.e1; ++i) w.push_back(2);
        for (int i = 0; i < -m.e1; ++i) w.push_back(1);
        for (int i = 0; i < m.e2; ++i) w.push_back(3);
    }
    return w;
}

bool word_is_normal_shape(Alg alg, const Word& w) {
    if (alg == Alg::SU2) {
        // a-block (or a*-block, not both), then g-block, then g*-block
        size_t i = 0;
        size_t a = 0, as = 0;
        while (i < w.size() && w[i] == 0) ++i, ++a;
        while (i < w.size() && w[i] == 1) ++i, ++as;
        if (a > 0 && as > 0) return false;
        while (i < w.size() && w[i] == 2) ++i;
        while (i < w.size() && w[i] == 3) ++i;
        return i == w.size();
    }
    size_t i = 0;
    while (i < w.size() && w[i] == 0) ++i;
    size_t k = 0, kinv = 0;
    while (i < w.size() && w[i] == 2) ++i, ++k;
    while (i < w.size() && w[i] == 1) ++i, ++kinv;
    if (k > 0 && kinv > 0) return false;
    while (i < w.size() && w[i] == 3) ++i;
    return i == w.size();
}

Mono word_to_mono(Alg alg, const Word& w) {
    if (!word_is_normal_shape(alg, w))
        throw std::logic_error("word_to_mono: word is not in normal shape");
    Mono m;
    for (uint8_t l : w) {
        if (alg == Alg::SU2) {
            if (l == 0) ++m.e0;
            else if (l == 1) --m.e0;
            else if (l == 2) ++m.e1;
            else ++m.e2;
        } else {
            if (l == 0) ++m.e0;
            else if (l == 2) ++m.e1;
            else if (l == 1) --m.e1;
            else ++m.e2;
        }
    }
    return m;
}

NCPoly::NCPoly(Alg alg, TermMap terms) : alg_(alg), terms_(std::move(terms)) { prune(); }

NCPoly NCPoly::generator(Alg alg, uint8_t letter) {
    Mono m = word_to_mono(alg, Word{letter});
    return NCPoly(alg, {{m, Scalar(1)}});
}

NCPoly NCPoly::monomial(Alg alg, const Mono& m, const Scalar& c) {
    return NCPoly(alg, {{m, c}});
}

void NCPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

int NCPoly::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Scalar NCPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(alg_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    if (alg_ != o.alg_ && !is_zero() && !o.is_zero())
        throw std::logic_error("NCPoly: mismatched algebra tags");
    NCPoly r(*this);
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end())
            r.terms_.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const Scalar& s) const {
    NCPoly r(alg_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    r.prune();
    return r;
}

NCPoly nc_normalize(const Presentation& p, const FreePoly& input) {
    FreePoly work = input;
    NCPoly::TermMap done;
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        Scalar c = it->second;
        work.erase(it);
        auto [pos, rule] = p.find_redex(w);
        if (pos == Presentation::npos) {
            Mono m = word_to_mono(p.alg, w);
            auto dit = done.find(m);
            if (dit == done.end())
                done.emplace(m, c);
            else {
                dit->second += c;
                if (dit->second.is_zero()) done.erase(dit);
            }
        } else {
            p.apply_rule(w, pos, rule, c, work);
        }
    }
    return NCPoly(p.alg, std::move(done));
}

NCPoly nc_mul(const Presentation& p, const NCPoly& a, const NCPoly& b) {
    if (a.alg() != b.alg())
        throw std::logic_error("nc_mul: mismatched algebra tags");
    FreePoly prod;
    for (const auto& [ma, ca] : a.terms()) {
        Word wa = mono_to_word(p.alg, ma);
        for (const auto& [mb, cb] : b.terms()) {
            Word w = wa;
            Word wb = mono_to_word(p.alg, mb);
            w.insert(w.end(), wb.begin(), wb.end());
            free_add(prod, w, ca * cb);
        }
    }
    return nc_normalize(p, prod);
}

NCPoly nc_star(const Presentation& p, const NCPoly& a) {
    FreePoly out;
    for (const auto& [m, c] : a.terms()) {
        Word w = mono_to_word(p.alg, m);
        Word sw(w.rbegin(), w.rend());
        for (auto& l : sw) l = p.involution[l];
        free_add(out, sw, c.conj());
    }
    return nc_normalize(p, out);
}

bool degree_filter_even(const NCPoly& a) {
    for (const auto& [m, c] : a.terms())
        if (m.degree() % 2 != 0) return false;
    return true;
}

namespace {

// Row-echelon elimination over the scalar field shared by span solving and
// rank computation.  Columns are the union of the monomial supports.
struct Echelon {
    std::vector<Mono> cols;
    std::map<Mono, size_t, MonoGradedLess> col_index;
    // Each row: coefficients over cols plus an arbitrary payload vector that
    // receives the same row operations (used to track coordinates).
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::vector<Scalar>> payloads;
    std::vector<size_t> pivot_col;

    void set_columns(const std::vector<const NCPoly*>& vecs) {
        for (const NCPoly* v : vecs)
            for (const auto& [m, c] : v->terms())
                if (!col_index.count(m)) {
                    col_index.emplace(m, 0);
                }
        size_t i = 0;
        for (auto& [m, idx] : col_index) {
            idx = i++;
            cols.push_back(m);
        }
    }

    std::vector<Scalar> densify(const NCPoly& v) const {
        std::vector<Scalar> row(cols.size(), Scalar());
        for (const auto& [m, c] : v.terms()) row[col_index.at(m)] = c;
        return row;
    }

    // Reduces row against the basis in place; returns true if it was
    // absorbed (linearly dependent), false if appended as a new pivot row.
    bool insert(std::vector<Scalar> row, std::vector<Scalar> payload) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Scalar& lead = row[pivot_col[r]];
            if (lead.is_zero()) continue;
            Scalar f = lead / rows[r][pivot_col[r]];
            for (size_t c = 0; c < row.size(); ++c) row[c] -= f * rows[r][c];
            for (size_t c = 0; c < payload.size(); ++c) payload[c] -= f * payloads[r][c];
        }
        size_t pc = row.size();
        for (size_t c = 0; c < row.size(); ++c)
            if (!row[c].is_zero()) {
                pc = c;
                break;
            }
        if (pc == row.size()) return true;
        pivot_col.push_back(pc);
        rows.push_back(std::move(row));
        payloads.push_back(std::move(payload));
        return false;
    }
};

}  // namespace

SpanSolution solve_in_span(const NCPoly& target, const std::vector<NCPoly>& basis) {
    SpanSolution sol;
    Echelon e;
    std::vector<const NCPoly*> all;
    for (const auto& b : basis) all.push_back(&b);
    all.push_back(&target);
    e.set_columns(all);

    size_t n = basis.size();
    for (size_t k = 0; k < n; ++k) {
        std::vector<Scalar> payload(n, Scalar());
        payload[k] = Scalar(1);
        if (e.insert(e.densify(basis[k]), std::move(payload))) {
            sol.dependent_basis = true;
            return sol;
        }
    }
    // Reduce the target against the echelon basis, tracking coordinates.
    std::vector<Scalar> row = e.densify(target);
    std::vector<Scalar> combo(n, Scalar());
    for (size_t r = 0; r < e.rows.size(); ++r) {
        const Scalar& lead = row[e.pivot_col[r]];
        if (lead.is_zero()) continue;
        Scalar f = lead / e.rows[r][e.pivot_col[r]];
        for (size_t c = 0; c < row.size(); ++c) row[c] -= f * e.rows[r][c];
        for (size_t c = 0; c < n; ++c) combo[c] += f * e.payloads[r][c];
    }
    for (const Scalar& c : row)
        if (!c.is_zero()) return sol;  // definite negative
    sol.coeffs = std::move(combo);
    return sol;
}

size_t span_rank(const std::vector<NCPoly>& vecs) {
    Echelon e;
    std::vector<const NCPoly*> all;
    for (const auto& v : vecs) all.push_back(&v);
    e.set_columns(all);
    size_t rank = 0;
    for (const auto& v : vecs)
        if (!e.insert(e.densify(v), {})) ++rank;
    return rank;
}

std::string mono_to_string(const Presentation& p, Alg alg, const Mono& m) {
    if (m == Mono{}) return "1";
    std::ostringstream out;
    bool sp = false;
    auto emit = [&](const std::string& name, int e) {
        if (e == 0) return;
        if (sp) out << " ";
        sp = true;
        out << name;
        if (e > 1) out << "^" << e;
    };
    if (alg == Alg::SU2) {
        emit(p.gen_names[0], std::max(m.e0, 0));
        emit(p.gen_names[1], std::max(-m.e0, 0));
        emit(p.gen_names[2], m.e1);
        emit(p.gen_names[3], m.e2);
    } else {
        emit(p.gen_names[0], m.e0);
        emit(p.gen_names[2], std::max(m.e1, 0));
        emit(p.gen_names[1], std::max(-m.e1, 0));
        emit(p.gen_names[3], m.e2);
    }
    return out.str();
}

std::string NCPoly::to_string(const Presentation& p) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::string cs = c.to_string();
        std::string ms = mono_to_string(p, alg_, m);
        if (ms == "1") {
            out << (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            out << ms;
        } else {
            bool wrap = cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos;
            out << (wrap ? "(" + cs + ")" : cs) << " " << ms;
        }
    }
    return out.str();
}

}  // namespace qmu

#include "qmu/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace qmu {

void free_add(FreePoly& acc, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

std::array<long, 3> Presentation::order_measure(const Word& w) const {
    long deg = static_cast<long>(w.size());
    long flags = 0, inv = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (flagged[w[i]]) ++flags;
        for (size_t j = i + 1; j < w.size(); ++j)
            if (rank[w[i]] > rank[w[j]]) ++inv;
    }
    return {deg, flags, inv};
}

bool Presentation::order_greater(const Word& a, const Word& b) const {
    auto ma = order_measure(a), mb = order_measure(b);
    if (ma != mb) return ma > mb;
    return a > b;  // stable tie-break; rules never rely on it
}

std::pair<size_t, size_t> Presentation::find_redex(const Word& w) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (size_t r = 0; r < rules.size(); ++r) {
            const Word& l = rules[r].lhs;
            if (pos + l.size() > w.size()) continue;
            bool match = true;
            for (size_t k = 0; k < l.size(); ++k)
                if (w[pos + k] != l[k]) {
                    match = false;
                    break;
                }
            if (match) return {pos, r};
        }
    }
    return {npos, npos};
}

void Presentation::apply_rule(const Word& w, size_t pos, size_t rule, const Scalar& coeff,
                              FreePoly& out) const {
    const RewriteRule& rr = rules[rule];
    for (const auto& [body, c] : rr.rhs) {
        Word nw;
        nw.reserve(w.size() - rr.lhs.size() + body.size());
        nw.insert(nw.end(), w.begin(), w.begin() + pos);
        nw.insert(nw.end(), body.begin(), body.end());
        nw.insert(nw.end(), w.begin() + pos + rr.lhs.size(), w.end());
        free_add(out, nw, coeff * c);
    }
}

void Presentation::validate() const {
    for (size_t r = 0; r < rules.size(); ++r) {
        for (const auto& [body, c] : rules[r].rhs) {
            (void)c;
            if (!order_greater(rules[r].lhs, body)) {
                std::ostringstream msg;
                msg << "rule " << r << " does not decrease the monomial order";
                throw std::logic_error(msg.str());
            }
        }
    }
}

namespace {

// Full normalization of a free polynomial to a map of normal words.
FreePoly reduce_to_normal_words(const Presentation& p, FreePoly work) {
    FreePoly done;
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        Scalar c = it->second;
        work.erase(it);
        auto [pos, rule] = p.find_redex(w);
        if (pos == Presentation::npos) {
            free_add(done, w, c);
        } else {
            p.apply_rule(w, pos, rule, c, work);
        }
    }
    return done;
}

}  // namespace

ConfluenceReport confluence_check(const Presentation& p, int degree_bound) {
    ConfluenceReport rep;
    rep.degree_bound = degree_bound;
    for (size_t i = 0; i < p.rules.size(); ++i) {
        const Word& li = p.rules[i].lhs;
        for (size_t j = 0; j < p.rules.size(); ++j) {
            const Word& lj = p.rules[j].lhs;
            // Proper overlaps: a nonempty suffix of lhs_i equals a prefix of
            // lhs_j, without the degenerate full coincidence of both sides.
            size_t kmax = std::min(li.size(), lj.size());
            for (size_t k = 1; k <= kmax; ++k) {
                if (k == li.size() && k == lj.size()) continue;
                bool match = true;
                for (size_t m = 0; m < k; ++m)
                    if (li[li.size() - k + m] != lj[m]) {
                        match = false;
                        break;
                    }
                if (!match) continue;
                Word overlap = li;
                overlap.insert(overlap.end(), lj.begin() + k, lj.end());
                if (static_cast<int>(overlap.size()) > degree_bound) continue;

                FreePoly via_i, via_j;
                p.apply_rule(overlap, 0, i, Scalar(1), via_i);
                p.apply_rule(overlap, li.size() - k, j, Scalar(1), via_j);
                FreePoly ni = reduce_to_normal_words(p, std::move(via_i));
                FreePoly nj = reduce_to_normal_words(p, std::move(via_j));

                CriticalPair cp;
                cp.rule_i = i;
                cp.rule_j = j;
                cp.overlap = overlap;
                cp.joins = (ni == nj);
                if (!cp.joins) rep.all_join = false;
                rep.pairs.push_back(std::move(cp));
            }
        }
    }
    return rep;
}

}  // namespace qmu

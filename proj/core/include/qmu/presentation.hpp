#pragma once

#include "qmu/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qmu {

enum class Alg : uint8_t { SU2, UQ };

// A word in the free algebra over a presentation's generators.
using Word = std::vector<uint8_t>;

// Free-algebra element: words with scalar coefficients, deterministic order.
using FreePoly = std::map<Word, Scalar>;

void free_add(FreePoly& acc, const Word& w, const Scalar& c);

struct RewriteRule {
    Word lhs;
    std::vector<std::pair<Word, Scalar>> rhs;
};

/// A presented algebra: generators with an involution, oriented rewrite rules
/// and a graded position-weighted monomial order certifying termination.
/// The order compares the triple (degree, flagged-letter count, inversion
/// count); every rule strictly decreases it, also under composition with
/// arbitrary contexts, which makes rewriting terminating.
struct Presentation {
    Alg alg;
    std::vector<std::string> gen_names;
    std::vector<uint8_t> involution;  // letter -> letter (a permutation here)
    std::vector<int> rank;            // letter ranks for the inversion count
    std::vector<bool> flagged;        // letters counted by the middle component
    std::vector<RewriteRule> rules;

    size_t num_gens() const { return gen_names.size(); }

    std::array<long, 3> order_measure(const Word& w) const;
    bool order_greater(const Word& a, const Word& b) const;

    // Leftmost redex: (position, rule index), or npos when w is normal.
    static constexpr size_t npos = static_cast<size_t>(-1);
    std::pair<size_t, size_t> find_redex(const Word& w) const;
    bool is_normal(const Word& w) const { return find_redex(w).first == npos; }

    // Replaces the redex at (pos, rule) and accumulates the results.
    void apply_rule(const Word& w, size_t pos, size_t rule, const Scalar& coeff,
                    FreePoly& out) const;

    // Checks that every rule's left side is order-greater than every monomial
    // of its right side; throws std::logic_error otherwise.
    void validate() const;
};

struct CriticalPair {
    size_t rule_i = 0, rule_j = 0;
    Word overlap;
    bool joins = false;
};

struct ConfluenceReport {
    int degree_bound = 0;
    std::vector<CriticalPair> pairs;
    bool all_join = true;
};

// Enumerates all overlaps of rule left-hand sides up to the degree bound and
// reports joinability of each critical pair.
ConfluenceReport confluence_check(const Presentation& p, int degree_bound);

}  // namespace qmu

#pragma once

#include "qmu/workspace.hpp"

namespace qmu {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Result of evaluating an expression: either a scalar or an algebra element.
struct Parsed {
    bool is_scalar = false;
    Scalar scalar;
    NCPoly poly;
};

/// Grammar: sums of juxtaposed factors with `^` integer powers; `*` directly
/// attached to an identifier is the involution, free-standing `*` and `/` are
/// product and scalar division; rationals are written p/q without spaces.
/// Identifiers: a, a*, g, g* (su2); E, F, K, Kinv (uq); A, B, B*, x-1, x0, x1
/// (sphere, su2 tag); N, M, C, G, L (so3, su2 tag); scalar atoms mu, sqrtmu,
/// t, c, rho, s, lamp, lamm, r, sigma, tau.
Parsed parse_expr(const std::string& text, Alg alg, const Workspace& ws);

// Scalar-only front-end used by the scalar normalizer.
std::shared_ptr<ScalarExpr> parse_scalar_expr(const std::string& text);

}  // namespace qmu

#pragma once

#include "qmu/ncpoly.hpp"

namespace qmu {

// Letter ids of the O(SU_mu(2)) presentation.
namespace su2 {
inline constexpr uint8_t a = 0;   // alpha
inline constexpr uint8_t as = 1;  // alpha*
inline constexpr uint8_t g = 2;   // gamma
inline constexpr uint8_t gs = 3;  // gamma*
}  // namespace su2

// Letter ids of the U_mu(su(2)) presentation.
namespace uq {
inline constexpr uint8_t F = 0;
inline constexpr uint8_t Kinv = 1;
inline constexpr uint8_t K = 2;
inline constexpr uint8_t E = 3;
}  // namespace uq

// O(SU_mu(2)): generators a, a*, g, g* with the PBW normal shape
// a^x g^b g*^c (x >= 0) and a*^x g^b g*^c (x > 0).
Presentation make_su2_presentation();

// U_mu(su(2)): generators F, K^-1, K, E with normal shape F^a K^b E^c, b in Z.
Presentation make_uq_presentation();

// The defining relations as stated (not the oriented rules): differences that
// must normalize to zero.  Used by the presentation verification suite.
std::vector<std::pair<std::string, NCPoly>> su2_relation_residuals(const Presentation& p);
std::vector<std::pair<std::string, NCPoly>> uq_relation_residuals(const Presentation& p);

}  // namespace qmu

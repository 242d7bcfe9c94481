#include "qmu/workspace.hpp"

#include <sstream>

namespace qmu {

Workspace::Workspace(ParamConfig cfg, int max_two_l)
    : cfg_(cfg),
      tower_(cfg),
      su2_(make_su2_hopf()),
      uq_(make_uq_hopf()),
      pairing_(su2_, uq_),
      sphere_(build_sphere_embedding(tower_, su2_.pres(), uq_.pres())),
      so3_(make_somu3_generators(su2_.pres())),
      spectral_(std::make_unique<SpectralContext>(pairing_, tower_, max_two_l)) {}

std::string Workspace::t_label() const {
    std::ostringstream out;
    out << cfg_.t;
    return out.str();
}

}  // namespace qmu

#pragma once

#include "qmu/somu3.hpp"
#include "qmu/spectral.hpp"

#include <memory>

namespace qmu {

/// Everything the suites and the CLI need for one parameter configuration.
/// All members are immutable after construction; a workspace can be shared
/// across threads.
class Workspace {
public:
    explicit Workspace(ParamConfig cfg, int max_two_l = 3);

    const ParamConfig& config() const { return cfg_; }
    const RadicalTower& tower() const { return tower_; }
    const HopfAlgebra& su2() const { return su2_; }
    const HopfAlgebra& uq() const { return uq_; }
    const PairingContext& pairing() const { return pairing_; }
    const SphereEmbedding& sphere() const { return sphere_; }
    const SOmu3Generators& so3() const { return so3_; }
    SpectralContext& spectral() const { return *spectral_; }

    std::string t_label() const;

private:
    ParamConfig cfg_;
    RadicalTower tower_;
    HopfAlgebra su2_;
    HopfAlgebra uq_;
    PairingContext pairing_;
    SphereEmbedding sphere_;
    SOmu3Generators so3_;
    std::unique_ptr<SpectralContext> spectral_;
};

}  // namespace qmu

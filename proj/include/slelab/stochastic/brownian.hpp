#pragma once

#include "slelab/flow/drive.hpp"
#include "slelab/stochastic/rng.hpp"

namespace slelab::stochastic {

/// Y = sqrt(kappa) B on [0, T] (or [-T, T]) with N(0, kappa dt) increments.
/// The forward branch uses lane 2 key.lane, the backward branch 2 key.lane + 1.
flow::DrivePath sample_brownian(double horizon, double dt, const StreamKey& key, double kappa,
                                bool two_sided = false);

}  // namespace slelab::stochastic

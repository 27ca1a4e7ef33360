#pragma once

#include <cstdint>
#include <random>

namespace slelab::stochastic {

/// Identifies one independent random stream: (master seed, sample index, lane).
/// Lanes separate the roles inside an experiment (left/right side, forward/backward branch).
struct StreamKey {
  std::uint64_t master = 0;
  std::uint64_t index = 0;
  std::uint32_t lane = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// splitmix64 applied successively to master, index and lane.
std::uint64_t derive_seed(const StreamKey& key);

/// Standard normals by Box-Muller on 53-bit uniforms from mt19937_64.
class NormalStream {
 public:
  explicit NormalStream(const StreamKey& key) : engine_(derive_seed(key)) {}
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double next();
  /// Uniform in (0, 1].
  double uniform();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace slelab::stochastic

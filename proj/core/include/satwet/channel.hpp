#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace satwet {

/// Shadowed-Rician parameters: shadowing severity m, half the average scatter
/// power b0 and line-of-sight power omega.
struct FadingParams {
  double m = 19.4;
  double b0 = 0.158;
  double omega = 1.29;

  void validate() const;
};

/// Moment-matched gamma surrogate for |h|^2 (shape alpha_s, scale beta_s).
struct GammaApprox {
  double alpha_s = 1.0;
  double beta_s = 1.0;

  void validate() const;
};

GammaApprox gamma_params(const FadingParams& fading);

/// Mean of the gamma surrogate, alpha_s * beta_s (equal to 2 b0 + omega).
double mean_channel_power(const GammaApprox& approx);

/// Seeded source of independent gamma-distributed channel power draws.
class ChannelSampler {
 public:
  ChannelSampler(const GammaApprox& approx, std::uint64_t seed);

  double draw();

 private:
  std::mt19937_64 engine_;
  std::gamma_distribution<double> dist_;
};

/// n draws from Gamma(alpha_s, beta_s). Throws std::invalid_argument if n == 0.
std::vector<double> sample_channel_power(const GammaApprox& approx,
                                         std::uint64_t seed, std::size_t n);

}  // namespace satwet

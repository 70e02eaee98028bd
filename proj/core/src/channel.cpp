#include "satwet/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace satwet {

void FadingParams::validate() const {
  if (!std::isfinite(m) || m <= 0.0) throw std::invalid_argument("fading m must be positive");
  if (!std::isfinite(b0) || b0 <= 0.0) throw std::invalid_argument("fading b0 must be positive");
  if (!std::isfinite(omega) || omega < 0.0) {
    throw std::invalid_argument("fading omega must be non-negative");
  }
}

void GammaApprox::validate() const {
  if (!std::isfinite(alpha_s) || alpha_s <= 0.0 || !std::isfinite(beta_s) || beta_s <= 0.0) {
    throw std::invalid_argument("gamma shape and scale must be positive");
  }
}

GammaApprox gamma_params(const FadingParams& fading) {
  fading.validate();
  const double m = fading.m;
  const double b0 = fading.b0;
  const double omega = fading.omega;
  const double mean = 2.0 * b0 + omega;
  const double second = 4.0 * m * b0 * b0 + 4.0 * m * b0 * omega + omega * omega;
  return {m * mean * mean / second, second / (m * mean)};
}

double mean_channel_power(const GammaApprox& approx) { return approx.alpha_s * approx.beta_s; }

ChannelSampler::ChannelSampler(const GammaApprox& approx, std::uint64_t seed)
    : engine_(seed), dist_((approx.validate(), approx.alpha_s), approx.beta_s) {}

double ChannelSampler::draw() { return dist_(engine_); }

std::vector<double> sample_channel_power(const GammaApprox& approx, std::uint64_t seed,
                                         std::size_t n) {
  if (n == 0) throw std::invalid_argument("sample count must be at least 1");
  ChannelSampler sampler(approx, seed);
  std::vector<double> draws(n);
  for (auto& x : draws) x = sampler.draw();
  return draws;
}

}  // namespace satwet

#include "core/stream_rng.hpp"

#include <cmath>
#include <numbers>

namespace slnr {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t drop_id, std::uint64_t substream,
                     std::uint64_t attempt) {
  // Chained bijective mixing keeps distinct tuples on distinct keys.
  std::uint64_t k = mix64(seed + kGamma);
  k = mix64(k ^ (drop_id * 0xD1B54A32D192ED03ULL + 1));
  k = mix64(k ^ (substream * 0x8CB92BA72F3D8DD7ULL + 2));
  k = mix64(k ^ (attempt * 0xA24BAED4963EE407ULL + 3));
  state_ = k;
}

std::uint64_t StreamRng::next_u64() {
  state_ += kGamma;
  return mix64(state_);
}

double StreamRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::complex<double> StreamRng::next_complex_gaussian() {
  // Box-Muller pair, scaled so the complex entry has total variance 1.
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  return {r * std::cos(theta) * kInvSqrt2, r * std::sin(theta) * kInvSqrt2};
}

double StreamRng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

}  // namespace slnr

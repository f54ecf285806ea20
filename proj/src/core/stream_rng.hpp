#pragma once

#include <complex>
#include <cstdint>

namespace slnr {

/// Counter-based deterministic random stream. Each (seed, drop, substream,
/// attempt) tuple is hashed into an independent key; outputs are a pure
/// function of (key, counter), so campaigns can be fanned out across
/// workers with scheduling-independent results.
///
/// The generator is a SplitMix64-style affine counter with a 64-bit finalizer;
/// Gaussians come from the Box-Muller transform, two uniforms per complex
/// entry. Alternate implementations match these bit streams only if they
/// reproduce both choices; the cross-implementation contract is statistical
/// agreement, not bit equality.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t drop_id, std::uint64_t substream,
            std::uint64_t attempt = 0);

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double next_unit();

  /// Standard complex Gaussian CN(0, 1): variance 1/2 per real/imag part.
  std::complex<double> next_complex_gaussian();

  /// Standard real Gaussian N(0, 1).
  double next_gaussian();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace slnr

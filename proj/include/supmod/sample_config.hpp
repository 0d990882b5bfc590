#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace supmod {

/// Resolution and tolerance knobs shared by every sampled optimization.
struct SampleConfig {
  std::size_t angular_samples = 2048;       // sphere grid size per 2D section
  std::size_t subdifferential_samples = 8;  // interior samples of a set-valued J1
  double root_tol = 1e-10;
  double feas_tol = 1e-9;
  double slack = 5e-3;
  std::uint64_t seed = 1;
  std::size_t section_samples = 64;  // random planes when dim >= 3

  /// Throws std::invalid_argument when a knob is out of range.
  void validate() const;

  /// Stable hex digest of all fields (FNV-1a over a canonical rendering).
  std::string fingerprint() const;
};

}  // namespace supmod

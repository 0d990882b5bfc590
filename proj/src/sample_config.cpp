#include "supmod/sample_config.hpp"

#include <cstdio>
#include <stdexcept>

namespace supmod {

void SampleConfig::validate() const {
  if (angular_samples < 16)
    throw std::invalid_argument("angular_samples must be at least 16");
  if (subdifferential_samples < 1)
    throw std::invalid_argument("subdifferential_samples must be positive");
  if (section_samples < 1)
    throw std::invalid_argument("section_samples must be positive");
  if (!(root_tol > 0.0) || !(feas_tol > 0.0) || !(slack > 0.0))
    throw std::invalid_argument("tolerances must be strictly positive");
}

std::string SampleConfig::fingerprint() const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "a=%zu;s=%zu;rt=%.17g;ft=%.17g;sl=%.17g;seed=%llu;sec=%zu",
                angular_samples, subdifferential_samples, root_tol, feas_tol, slack,
                static_cast<unsigned long long>(seed), section_samples);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char* c = buf; *c; ++c) {
    h ^= static_cast<unsigned char>(*c);
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace supmod

#ifndef TTODA_VERIFY_HPP
#define TTODA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ttoda {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Closed-form identities: binomial Stokes data, the cross-section property
/// on random Stokes vectors, the linearization spectrum, and the off-shell
/// commutator identity.
std::vector<CheckResult> verify_algebra(std::uint64_t seed = 20240801);

/// satake_check over n <= 6 and all k at the binomial point.
std::vector<CheckResult> verify_satake();

/// Boundary-value solves compared against the closed-form Stokes data.
std::vector<CheckResult> verify_asymptotics_suite();

/// Dispatch by suite name ("algebra", "satake", "asymptotics", "all");
/// results sorted by check name.
std::vector<CheckResult> run_verify(const std::string& suite);

}  // namespace ttoda

#endif

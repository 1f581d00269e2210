#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hagakit/geometry.hpp"

namespace hagakit {

struct VerifyOptions {
    int samples = 1000;       // base sample count; individual checks scale it
    std::uint64_t seed = 12345;
    double eps_abs = 1e-9;
    double eps_rel = 1e-9;
    /// Nonzero values corrupt measured quantities before comparison; used to
    /// prove the suite can fail.
    double perturb = 0.0;

    Tolerance tolerance() const { return Tolerance{eps_abs, eps_rel}; }
};

struct CheckResult {
    std::string name;
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Runs every invariant sweep of the geometry, tangent-circle, fold and
/// rendering modules. Deterministic for fixed options.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace hagakit

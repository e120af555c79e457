#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jcpurity {

/// Configuration of the self-verification sweep: closed-form Bloch
/// components against the numerical partial trace, and the closed-form
/// eigenvalues against the characteristic-polynomial solver.
struct VerifyOptions {
    int samples = 64;           // random (model, alpha, beta, f, tau) configs
    int bloch_samples = 1000;   // random Bloch vectors for the eigen check
    std::uint64_t seed = 20220410;
    double tol_bloch = 1e-10;   // per-component closed form vs partial trace
    double tol_eigen = 1e-11;
};

struct VerifyResult {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failure_lines;
    double max_bloch_diff = 0.0;
    double max_eigen_diff = 0.0;

    bool ok() const { return failures == 0; }
};

VerifyResult run_verification(const VerifyOptions& options);

}  // namespace jcpurity

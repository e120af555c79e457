#pragma once

#include <utility>
#include <vector>

#include "jcpurity/dynamics.hpp"
#include "jcpurity/measures.hpp"

namespace jcpurity {

/// Inclusive-endpoint grid tau_i = i * tau_max / steps, i = 0..steps, so
/// tau = 0 (the analytic anchor) and tau = tau_max always appear.
struct TimeGrid {
    double tau_max = 50.0;
    int steps = 5000;
};

struct ScanRecord {
    double tau;
    BlochFourVector bloch;
    PurityReport report;
};

/// One record per grid point, ascending tau. Deterministic for fixed inputs.
std::vector<ScanRecord> run_scan(const ModelParams& params,
                                 const TimeGrid& grid,
                                 double tail_bound = 1e-12);

enum class SweepParam { Alpha, Beta, F };

/// Independent scan per parameter value, in input order. The Poisson weight
/// table is recomputed only when alpha changes.
std::vector<std::pair<double, std::vector<ScanRecord>>> run_sweep(
    const ModelParams& base, SweepParam param,
    const std::vector<double>& values, const TimeGrid& grid,
    double tail_bound = 1e-12);

}  // namespace jcpurity

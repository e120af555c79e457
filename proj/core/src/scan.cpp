#include "jcpurity/scan.hpp"

#include <stdexcept>

namespace jcpurity {

namespace {

std::vector<ScanRecord> scan_with_basis(const ModelParams& params,
                                        const TimeGrid& grid,
                                        const FockBasis& basis) {
    if (!(grid.tau_max > 0.0) || grid.steps < 1) {
        throw std::invalid_argument("time grid requires tau_max > 0, steps >= 1");
    }
    std::vector<ScanRecord> records;
    records.reserve(grid.steps + 1);
    for (int i = 0; i <= grid.steps; ++i) {
        const double tau = i * grid.tau_max / grid.steps;
        const BlochFourVector bloch = bloch_at(params, tau, basis);
        records.push_back({tau, bloch, purity_report(bloch)});
    }
    return records;
}

}  // namespace

std::vector<ScanRecord> run_scan(const ModelParams& params,
                                 const TimeGrid& grid, double tail_bound) {
    return scan_with_basis(params, grid, poisson_weights(params.alpha, tail_bound));
}

std::vector<std::pair<double, std::vector<ScanRecord>>> run_sweep(
    const ModelParams& base, SweepParam param,
    const std::vector<double>& values, const TimeGrid& grid,
    double tail_bound) {
    if (values.empty()) {
        throw std::invalid_argument("sweep requires at least one value");
    }
    std::vector<std::pair<double, std::vector<ScanRecord>>> results;
    results.reserve(values.size());
    FockBasis basis = poisson_weights(base.alpha, tail_bound);
    for (double value : values) {
        ModelParams p = base;
        switch (param) {
            case SweepParam::Alpha:
                p.alpha = value;
                basis = poisson_weights(value, tail_bound);
                break;
            case SweepParam::Beta:
                p.beta = value;
                break;
            case SweepParam::F:
                p.f = value;
                break;
        }
        results.emplace_back(value, scan_with_basis(p, grid, basis));
    }
    return results;
}

}  // namespace jcpurity

#include "jcpurity/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace jcpurity {

JointStateTable to_table(const JointAmplitudes& amps) {
    JointStateTable table;
    table.reserve(amps.ground.size() + amps.excited.size());
    for (std::size_t n = 0; n < amps.ground.size(); ++n) {
        table.push_back({false, static_cast<int>(n), amps.ground[n]});
    }
    for (std::size_t n = 0; n < amps.excited.size(); ++n) {
        table.push_back({true, static_cast<int>(n), amps.excited[n]});
    }
    return table;
}

QubitDensityMatrix reduce_to_atom(const JointStateTable& state) {
    int max_n = -1;
    for (const auto& e : state) {
        max_n = std::max(max_n, e.n);
    }
    std::vector<Complex> g(max_n + 1, Complex(0.0)), e(max_n + 1, Complex(0.0));
    for (const auto& entry : state) {
        (entry.excited ? e : g)[entry.n] += entry.amplitude;
    }
    QubitDensityMatrix rho{Complex(0.0), Complex(0.0), Complex(0.0),
                           Complex(0.0)};
    for (int n = 0; n <= max_n; ++n) {
        rho.ee += e[n] * std::conj(e[n]);
        rho.eg += e[n] * std::conj(g[n]);
        rho.ge += g[n] * std::conj(e[n]);
        rho.gg += g[n] * std::conj(g[n]);
    }
    return rho;
}

std::pair<double, double> eigen_bruteforce(const QubitDensityMatrix& rho) {
    const double tr = rho.ee.real() + rho.gg.real();
    const double det =
        (rho.ee * rho.gg - rho.eg * rho.ge).real();
    const double disc = tr * tr - 4.0 * det;
    if (disc < -1e-12) {
        throw ComplexRoots("characteristic polynomial has complex roots");
    }
    const double s = std::sqrt(std::max(disc, 0.0));
    // Larger-magnitude root first, the other via det to avoid cancellation.
    const double big = 0.5 * (tr + (tr >= 0.0 ? s : -s));
    const double small = big != 0.0 ? det / big : 0.5 * (tr - s);
    return {std::min(big, small), std::max(big, small)};
}

}  // namespace jcpurity

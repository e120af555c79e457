#include "jcpurity/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "jcpurity/dynamics.hpp"
#include "jcpurity/oracle.hpp"

namespace jcpurity {

namespace {

std::string describe(const ModelParams& p, double tau) {
    std::ostringstream os;
    os << (p.model == Model::JC ? "jc" : "ajc") << " alpha=" << p.alpha
       << " beta=" << p.beta << " f=" << p.f << " tau=" << tau;
    return os.str();
}

}  // namespace

VerifyResult run_verification(const VerifyOptions& options) {
    VerifyResult result;
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    for (int i = 0; i < options.samples; ++i) {
        ModelParams p;
        p.model = (rng() & 1) ? Model::AJC : Model::JC;
        p.alpha = 8.0 * u01(rng);
        p.beta = 400.0 * u01(rng) - 200.0;
        p.f = 100.0 * u01(rng);
        const double tau = 50.0 * u01(rng);

        const FockBasis basis = poisson_weights(p.alpha);
        const BlochFourVector closed = bloch_at(p, tau, basis);
        const BlochFourVector traced = bloch_from_density(
            reduce_to_atom(to_table(joint_amplitudes(p, tau, basis))));

        const double diff = std::max(
            std::max(std::abs(closed.r0 - traced.r0),
                     std::abs(closed.r1 - traced.r1)),
            std::max(std::abs(closed.r2 - traced.r2),
                     std::abs(closed.r3 - traced.r3)));
        result.max_bloch_diff = std::max(result.max_bloch_diff, diff);
        ++result.checks;
        if (!(diff <= options.tol_bloch)) {
            ++result.failures;
            std::ostringstream os;
            os << "bloch mismatch " << diff << " > " << options.tol_bloch
               << " at " << describe(p, tau);
            result.failure_lines.push_back(os.str());
        }
    }

    for (int i = 0; i < options.bloch_samples; ++i) {
        BlochFourVector R;
        R.r0 = 0.1 + 1.9 * u01(rng);
        const double r = R.r0 * u01(rng);
        const double z = 2.0 * u01(rng) - 1.0;
        const double az = 2.0 * std::numbers::pi * u01(rng);
        const double rp = r * std::sqrt(1.0 - z * z);
        R.r1 = rp * std::cos(az);
        R.r2 = rp * std::sin(az);
        R.r3 = r * z;

        const EigenSystem es = eigensystem(R);
        const auto [lo, hi] = eigen_bruteforce(density_from_bloch(R));
        const double diff = std::max(std::abs(lo - es.eps_minus),
                                     std::abs(hi - es.eps_plus));
        result.max_eigen_diff = std::max(result.max_eigen_diff, diff);
        ++result.checks;
        if (!(diff <= options.tol_eigen)) {
            ++result.failures;
            std::ostringstream os;
            os << "eigenvalue mismatch " << diff << " > " << options.tol_eigen
               << " at R=(" << R.r0 << "," << R.r1 << "," << R.r2 << ","
               << R.r3 << ")";
            result.failure_lines.push_back(os.str());
        }
    }
    return result;
}

}  // namespace jcpurity

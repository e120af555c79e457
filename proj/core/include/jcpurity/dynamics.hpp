#pragma once

#include <string>
#include <vector>

#include "jcpurity/bloch.hpp"

namespace jcpurity {

enum class Model { JC, AJC };

/// Dimensionless parameters of one dynamics instance. Time is always
/// consumed as scaled tau = g*t.
struct ModelParams {
    Model model = Model::JC;
    double alpha = 7.0;  // coherent amplitude (real, >= 0)
    double beta = 0.0;   // red-sideband detuning ratio delta/g
    double f = 1e-7;     // frequency ratio omega/g
    double g = 1.0;      // coupling rate, 1/time
};

struct FockTruncation {
    int n_max = 0;
    double tail_bound = 1e-12;
};

/// Poisson photon-number weight table P_0..P_{n_max}, shared read-only
/// across time points.
struct FockBasis {
    std::vector<double> weights;
    FockTruncation trunc;
};

struct NonConvergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationError : std::runtime_error {
    TruncationError(const std::string& what, double tau_at)
        : std::runtime_error(what), tau(tau_at) {}
    double tau;
};

/// P_n = e^{-alpha^2} alpha^{2n} / n!. n_max is the smallest index whose
/// accumulated mass reaches 1 - tail_bound, floored at 32 (alpha = 0 yields
/// the single weight {1}). Throws NonConvergent past hard_cap.
FockBasis poisson_weights(double alpha, double tail_bound = 1e-12,
                          int hard_cap = 4096);

/// Rabi frequency and qubit mixing coefficients for one Fock index.
struct RabiCoefficients {
    double rabi;  // R_n (or Rbar_m), carries the factor g
    double c;     // detuning cosine, c^2 + s^2 = 1
    double s;     // coupling sine
};

/// JC: R_n = g sqrt(n + beta^2/4), c_n = beta*g/(2 R_n), s_n = g sqrt(n)/R_n.
/// The n = 0, beta = 0 limit returns (0, 1, 0).
RabiCoefficients jc_coefficients(int n, const ModelParams& params);

/// aJC barred coefficients at index m (= n+1 of the ladder):
/// Rbar_m = g sqrt(m + (beta+2f)^2/4), cbar_m = (beta+2f)*g/(2 Rbar_m),
/// sbar_m = g sqrt(m)/Rbar_m, with sbar_0 = 0.
RabiCoefficients ajc_coefficients(int m, const ModelParams& params);

/// Closed-form Bloch four-vector of the atom at scaled time tau for an
/// initial ground-state atom and coherent field. r0 is the computed
/// normalization sum; deviations beyond 10*tail_bound throw TruncationError.
BlochFourVector bloch_jc(const ModelParams& params, double tau,
                         const FockBasis& basis);
BlochFourVector bloch_ajc(const ModelParams& params, double tau,
                          const FockBasis& basis);

/// Dispatch on params.model.
BlochFourVector bloch_at(const ModelParams& params, double tau,
                         const FockBasis& basis);

/// Full joint-state coefficients at scaled time tau: ground[n] multiplies
/// |g>|n> and excited[n] multiplies |e>|n>, global phase factors included.
struct JointAmplitudes {
    std::vector<Complex> ground;
    std::vector<Complex> excited;
};

JointAmplitudes joint_amplitudes(const ModelParams& params, double tau,
                                 const FockBasis& basis);

}  // namespace jcpurity

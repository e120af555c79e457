#include "jcpurity/dynamics.hpp"

#include <cmath>

namespace jcpurity {

namespace {

constexpr int kTruncationFloor = 32;

void check_normalization(double r0, double tau, double tail_bound) {
    if (std::abs(r0 - 1.0) > 10.0 * tail_bound) {
        throw TruncationError(
            "normalization |r0 - 1| exceeds 10*tail_bound at tau = " +
                std::to_string(tau),
            tau);
    }
}

// Scaled (g = 1) Rabi argument and mixing coefficients for effective
// detuning ratio d: rabi = sqrt(k + d^2/4), c = d/(2 rabi), s = sqrt(k)/rabi.
struct ScaledCoeffs {
    double rabi, c, s;
};

ScaledCoeffs scaled_coeffs(int k, double d) {
    const double rabi = std::sqrt(k + 0.25 * d * d);
    if (rabi == 0.0) {
        return {0.0, 1.0, 0.0};  // k = 0, d = 0: sin(R t) = 0, limit immaterial
    }
    return {rabi, 0.5 * d / rabi, std::sqrt(double(k)) / rabi};
}

}  // namespace

FockBasis poisson_weights(double alpha, double tail_bound, int hard_cap) {
    if (!(alpha >= 0.0)) {
        throw std::invalid_argument("alpha must be >= 0");
    }
    if (!(tail_bound > 0.0 && tail_bound < 1.0)) {
        throw std::invalid_argument("tail_bound must lie in (0, 1)");
    }

    FockBasis basis;
    basis.trunc.tail_bound = tail_bound;
    if (alpha == 0.0) {
        basis.weights = {1.0};
        basis.trunc.n_max = 0;
        return basis;
    }

    const double a2 = alpha * alpha;
    // Upward recurrence while P_0 = e^{-a2} is a normal double; log-space
    // (lgamma) above that, where the recurrence would start from underflow.
    const bool use_log = a2 > 500.0;
    auto weight = [&](int n) {
        return std::exp(-a2 + n * std::log(a2) - std::lgamma(n + 1.0));
    };

    std::vector<double> w;
    double acc = 0.0;
    double p = use_log ? weight(0) : std::exp(-a2);
    int n = 0;
    for (;;) {
        w.push_back(p);
        acc += p;
        if (acc >= 1.0 - tail_bound) {
            break;
        }
        if (n >= hard_cap) {
            throw NonConvergent(
                "Poisson weight accumulation did not reach 1 - tail_bound "
                "within the hard cap");
        }
        ++n;
        p = use_log ? weight(n) : p * a2 / n;
    }
    const int n_max = std::max(n, kTruncationFloor);
    while (static_cast<int>(w.size()) <= n_max) {
        ++n;
        p = use_log ? weight(n) : p * a2 / n;
        w.push_back(p);
    }
    basis.weights = std::move(w);
    basis.trunc.n_max = n_max;
    return basis;
}

RabiCoefficients jc_coefficients(int n, const ModelParams& params) {
    const ScaledCoeffs sc = scaled_coeffs(n, params.beta);
    return {params.g * sc.rabi, sc.c, sc.s};
}

RabiCoefficients ajc_coefficients(int m, const ModelParams& params) {
    const ScaledCoeffs sc = scaled_coeffs(m, params.beta + 2.0 * params.f);
    return {params.g * sc.rabi, sc.c, sc.s};
}

BlochFourVector bloch_jc(const ModelParams& params, double tau,
                         const FockBasis& basis) {
    const int n_max = basis.trunc.n_max;
    const double wt = params.f * tau;  // omega*t = f*tau
    const double sin_wt = std::sin(wt);
    const double cos_wt = std::cos(wt);

    double pop_e = 0.0, pop_g = 0.0, r1 = 0.0, r2 = 0.0;
    ScaledCoeffs cur = scaled_coeffs(0, params.beta);
    for (int n = 0; n <= n_max; ++n) {
        const ScaledCoeffs next = scaled_coeffs(n + 1, params.beta);
        const double pn = basis.weights[n];
        const double pn1 = n + 1 <= n_max ? basis.weights[n + 1] : 0.0;

        const double sin_n = std::sin(cur.rabi * tau);
        const double cos_n = std::cos(cur.rabi * tau);
        const double sin_n1 = std::sin(next.rabi * tau);

        pop_e += pn1 * next.s * next.s * sin_n1 * sin_n1;
        pop_g += pn * (cos_n * cos_n + cur.c * cur.c * sin_n * sin_n);

        const double cross = std::sqrt(pn1 * pn) * next.s * sin_n1;
        r1 -= 2.0 * cross * (sin_wt * cos_n + cur.c * cos_wt * sin_n);
        r2 += 2.0 * cross * (cos_wt * cos_n - cur.c * sin_wt * sin_n);
        cur = next;
    }
    const double r0 = pop_e + pop_g;
    check_normalization(r0, tau, basis.trunc.tail_bound);
    return {r0, r1, r2, pop_e - pop_g};
}

BlochFourVector bloch_ajc(const ModelParams& params, double tau,
                          const FockBasis& basis) {
    const int n_max = basis.trunc.n_max;
    const double dbar = params.beta + 2.0 * params.f;
    const double wt = params.f * tau;
    const double sin_wt = std::sin(wt);
    const double cos_wt = std::cos(wt);

    // The P_{n-1} terms reach one index past n_max (P_{-1} := 0 in front).
    double pop_e = 0.0, pop_g = 0.0, r1 = 0.0, r2 = 0.0;
    ScaledCoeffs bar_n = scaled_coeffs(0, dbar);
    for (int n = 0; n <= n_max + 1; ++n) {
        const ScaledCoeffs bar_n1 = scaled_coeffs(n + 1, dbar);
        const double pn = n <= n_max ? basis.weights[n] : 0.0;
        const double pnm1 = n >= 1 ? basis.weights[n - 1] : 0.0;

        const double sin_bn = std::sin(bar_n.rabi * tau);
        const double sin_bn1 = std::sin(bar_n1.rabi * tau);
        const double cos_bn1 = std::cos(bar_n1.rabi * tau);

        pop_e += pnm1 * bar_n.s * bar_n.s * sin_bn * sin_bn;
        pop_g += pn * (cos_bn1 * cos_bn1 + bar_n1.c * bar_n1.c * sin_bn1 * sin_bn1);

        const double cross = std::sqrt(pn * pnm1) * bar_n.s * sin_bn;
        r1 += 2.0 * cross * (sin_wt * cos_bn1 - bar_n1.c * cos_wt * sin_bn1);
        r2 += 2.0 * cross * (cos_wt * cos_bn1 + bar_n1.c * sin_wt * sin_bn1);
        bar_n = bar_n1;
    }
    const double r0 = pop_e + pop_g;
    check_normalization(r0, tau, basis.trunc.tail_bound);
    return {r0, r1, r2, pop_e - pop_g};
}

BlochFourVector bloch_at(const ModelParams& params, double tau,
                         const FockBasis& basis) {
    return params.model == Model::JC ? bloch_jc(params, tau, basis)
                                     : bloch_ajc(params, tau, basis);
}

JointAmplitudes joint_amplitudes(const ModelParams& params, double tau,
                                 const FockBasis& basis) {
    const int n_max = basis.trunc.n_max;
    const Complex mi(0.0, -1.0);
    JointAmplitudes amps;
    double norm_sq = 0.0;

    if (params.model == Model::JC) {
        amps.ground.resize(n_max + 1);
        amps.excited.resize(n_max + 1);
        for (int n = 0; n <= n_max; ++n) {
            const ScaledCoeffs cn = scaled_coeffs(n, params.beta);
            const ScaledCoeffs cn1 = scaled_coeffs(n + 1, params.beta);
            const double pn = basis.weights[n];
            const double pn1 = n + 1 <= n_max ? basis.weights[n + 1] : 0.0;
            const Complex xi(std::cos(cn.rabi * tau),
                             cn.c * std::sin(cn.rabi * tau));
            const double eta = cn1.s * std::sin(cn1.rabi * tau);
            amps.ground[n] =
                std::sqrt(pn) * std::polar(1.0, -params.f * tau * n) * xi;
            amps.excited[n] = mi * std::sqrt(pn1) *
                              std::polar(1.0, -params.f * tau * (n + 1)) * eta;
            norm_sq += std::norm(amps.ground[n]) + std::norm(amps.excited[n]);
        }
    } else {
        const double dbar = params.beta + 2.0 * params.f;
        amps.ground.resize(n_max + 2);
        amps.excited.resize(n_max + 2);
        for (int n = 0; n <= n_max + 1; ++n) {
            const ScaledCoeffs bn = scaled_coeffs(n, dbar);
            const ScaledCoeffs bn1 = scaled_coeffs(n + 1, dbar);
            const double pn = n <= n_max ? basis.weights[n] : 0.0;
            const double pnm1 = n >= 1 ? basis.weights[n - 1] : 0.0;
            const Complex xi(std::cos(bn1.rabi * tau),
                             bn1.c * std::sin(bn1.rabi * tau));
            const double eta = bn.s * std::sin(bn.rabi * tau);
            amps.ground[n] =
                std::sqrt(pn) * std::polar(1.0, -params.f * tau * (n + 1)) * xi;
            amps.excited[n] = mi * std::sqrt(pnm1) *
                              std::polar(1.0, -params.f * tau * n) * eta;
            norm_sq += std::norm(amps.ground[n]) + std::norm(amps.excited[n]);
        }
    }
    if (std::abs(norm_sq - 1.0) > 10.0 * basis.trunc.tail_bound) {
        throw TruncationError(
            "joint state norm deviates beyond 10*tail_bound at tau = " +
                std::to_string(tau),
            tau);
    }
    return amps;
}

}  // namespace jcpurity

#include "jcpurity/bloch.hpp"

#include <cmath>
#include <numbers>

namespace jcpurity {

double BlochFourVector::vec_norm() const noexcept {
    return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3);
}

BlochFourVector clamped(const BlochFourVector& R) {
    if (!(std::isfinite(R.r0) && std::isfinite(R.r1) && std::isfinite(R.r2) &&
          std::isfinite(R.r3))) {
        throw InvalidBloch("Bloch four-vector has non-finite components");
    }
    if (!(R.r0 > 0.0)) {
        throw InvalidBloch("Bloch four-vector requires r0 > 0");
    }
    const double r = R.vec_norm();
    if (r <= R.r0) {
        return R;
    }
    if (r <= R.r0 + kBlochTol) {
        const double scale = R.r0 / r;
        return {R.r0, R.r1 * scale, R.r2 * scale, R.r3 * scale};
    }
    throw InvalidBloch("Bloch vector length |r| exceeds r0 beyond tolerance");
}

QubitDensityMatrix density_from_bloch(const BlochFourVector& R) {
    const BlochFourVector v = clamped(R);
    return {
        0.5 * Complex(v.r0 + v.r3, 0.0),
        0.5 * Complex(v.r1, -v.r2),
        0.5 * Complex(v.r1, v.r2),
        0.5 * Complex(v.r0 - v.r3, 0.0),
    };
}

BlochFourVector bloch_from_density(const QubitDensityMatrix& rho) {
    constexpr double tol = 1e-9;
    if (std::abs(rho.eg - std::conj(rho.ge)) > tol ||
        std::abs(rho.ee.imag()) > tol || std::abs(rho.gg.imag()) > tol) {
        throw NotHermitian("density matrix is not Hermitian within 1e-9");
    }
    return {
        rho.ee.real() + rho.gg.real(),
        rho.eg.real() + rho.ge.real(),
        rho.ge.imag() - rho.eg.imag(),
        rho.ee.real() - rho.gg.real(),
    };
}

PurityDecomposition purity_decomposition(const BlochFourVector& R) {
    const BlochFourVector v = clamped(R);
    const double r = v.vec_norm();
    return {v.r0, 0.25 * (v.r0 * v.r0 - r * r)};
}

EigenSystem eigensystem(const BlochFourVector& R) {
    const BlochFourVector v = clamped(R);
    const double r = v.vec_norm();
    const double r_perp = std::hypot(v.r1, v.r2);

    EigenSystem es;
    es.eps_minus = 0.5 * (v.r0 - r);
    es.eps_plus = 0.5 * (v.r0 + r);

    // theta = pi on the fully degenerate axis so psi_plus lands on |g>.
    es.theta = (r_perp == 0.0 && v.r3 == 0.0) ? std::numbers::pi
                                              : std::atan2(r_perp, v.r3);
    es.phi_az = (r_perp == 0.0) ? 0.0 : std::atan2(v.r2, v.r1);

    // Normalized |g> +/- |phi_g> combinations in half-angle form; the
    // (e, g) component order puts the e amplitude first.
    const double ch = std::cos(0.5 * es.theta);
    const double sh = std::sin(0.5 * es.theta);
    const Complex phase = std::polar(1.0, -es.phi_az);
    es.psi_plus = {ch * phase, Complex(sh, 0.0)};
    es.psi_minus = {-sh * phase, Complex(ch, 0.0)};
    return es;
}

}  // namespace jcpurity

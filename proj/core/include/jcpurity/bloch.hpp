#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace jcpurity {

using Complex = std::complex<double>;

struct InvalidBloch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Trace plus Pauli expectation values (r0, r1, r2, r3) parameterizing a
/// 2x2 density operator rho = (r0*sigma0 + r.sigma)/2. A vector is valid
/// when r0 > 0 and |r| <= r0 (up to round-off, see clamped()).
struct BlochFourVector {
    double r0 = 1.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;

    /// |r| = sqrt(r1^2 + r2^2 + r3^2)
    double vec_norm() const noexcept;
};

/// Admissible round-off overshoot of |r| beyond r0.
inline constexpr double kBlochTol = 1e-9;

/// Validates R and absorbs truncation round-off: |r| in (r0, r0+kBlochTol]
/// is rescaled back to |r| = r0. Throws InvalidBloch when r0 <= 0, any
/// component is non-finite, or |r| > r0 + kBlochTol.
BlochFourVector clamped(const BlochFourVector& R);

/// 2x2 density matrix in the atomic basis, row/column order (e, g).
struct QubitDensityMatrix {
    Complex ee, eg, ge, gg;
};

/// Spectral data of rho: eigenvalues eps_-/eps_+ with unit eigenvectors in
/// (e, g) component order, plus the Bloch polar angles used to build them.
struct EigenSystem {
    double eps_minus = 0.0;
    double eps_plus = 0.0;
    std::array<Complex, 2> psi_minus{};
    std::array<Complex, 2> psi_plus{};
    double theta = 0.0;   // in [0, pi]
    double phi_az = 0.0;  // in (-pi, pi], 0 when r1 = r2 = 0
};

/// rho = [[r0+r3, r1-i*r2], [r1+i*r2, r0-r3]] / 2 in (e, g) order.
QubitDensityMatrix density_from_bloch(const BlochFourVector& R);

/// r_j = Tr(sigma_j rho). Throws NotHermitian when Hermiticity is violated
/// beyond 1e-9.
BlochFourVector bloch_from_density(const QubitDensityMatrix& rho);

/// Coefficients of the decomposition rho^2 = coef*rho - mixed_measure*I,
/// with coef = r0 and mixed_measure = (r0^2 - |r|^2)/4.
struct PurityDecomposition {
    double coef;
    double mixed_measure;
};

PurityDecomposition purity_decomposition(const BlochFourVector& R);

/// Eigenvalues eps_-/+ = (r0 -/+ |r|)/2 and eigenvectors in half-angle form.
/// Degenerate directions (|r| = 0 or r1 = r2 = 0) fall back to the
/// computational basis with psi_plus = |e> if r3 > 0 else |g>.
EigenSystem eigensystem(const BlochFourVector& R);

}  // namespace jcpurity

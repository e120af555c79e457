#pragma once

#include "jcpurity/bloch.hpp"

namespace jcpurity {

struct NegativeEigenvalue : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

/// Every scalar purity/entanglement quantifier derivable from one Bloch
/// four-vector. Entropies are base-2.
struct PurityReport {
    double mixed_measure;   // M = (r0^2 - r^2)/4 = det(rho)
    double purity;          // P = r0^2 - 2M = (r0^2 + r^2)/2
    double concurrence;     // C = 2 sqrt(M)
    double tangle;          // C^2
    double tan_phi;         // |r|/r0, degree of purity
    double phi;             // arctan(tan_phi) in [0, pi/4]
    double lambda_minus;    // (r0 - C)/2, nonclassicality N(rho)
    double lambda_plus;     // (r0 + C)/2
    double eps_minus;       // (r0 - |r|)/2
    double eps_plus;        // (r0 + |r|)/2
    double amp_mag;         // |(r0 + i|r|)/sqrt(2)| = sqrt(P)
    double amp_phase;       // atan2(|r|, r0)
    double entropy_vn;      // -sum eps log2 eps
    double entropy_binary;  // binary entropy of (1 -/+ tan_phi)/2
    double excitation;      // (1 + r3)/2
};

double mixed_state_measure(const BlochFourVector& R);

double purity_measure(const BlochFourVector& R);

double concurrence(const BlochFourVector& R);

struct DegreeOfPurity {
    double tan_phi;  // in [0, 1]
    double phi;      // in [0, pi/4]
};

DegreeOfPurity degree_of_purity(const BlochFourVector& R);

/// S = -eps_- log2(eps_-) - eps_+ log2(eps_+), with 0 log2 0 := 0.
/// Eigenvalues below -1e-12 throw NegativeEigenvalue; small negative
/// round-off is treated as zero.
double von_neumann_entropy(double eps_minus, double eps_plus);

/// H(tan_phi) for tan_phi in [0, 1]; throws OutOfRange otherwise.
double binary_entropy_of_formation(double tan_phi);

/// Invariant squared length R_mu R^mu = r0^2 - r1^2 - r2^2 - r3^2.
double covariant_concurrence_sq(const BlochFourVector& R);

PurityReport purity_report(const BlochFourVector& R);

}  // namespace jcpurity

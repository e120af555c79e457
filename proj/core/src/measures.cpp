#include "jcpurity/measures.hpp"

#include <algorithm>
#include <cmath>

namespace jcpurity {

namespace {

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

}  // namespace

double mixed_state_measure(const BlochFourVector& R) {
    const BlochFourVector v = clamped(R);
    const double r = v.vec_norm();
    return 0.25 * (v.r0 * v.r0 - r * r);
}

double purity_measure(const BlochFourVector& R) {
    const BlochFourVector v = clamped(R);
    const double r = v.vec_norm();
    return 0.5 * (v.r0 * v.r0 + r * r);
}

double concurrence(const BlochFourVector& R) {
    return 2.0 * std::sqrt(mixed_state_measure(R));
}

DegreeOfPurity degree_of_purity(const BlochFourVector& R) {
    const BlochFourVector v = clamped(R);
    const double tan_phi = std::min(v.vec_norm() / v.r0, 1.0);
    return {tan_phi, std::atan(tan_phi)};
}

double von_neumann_entropy(double eps_minus, double eps_plus) {
    if (eps_minus < -1e-12 || eps_plus < -1e-12) {
        throw NegativeEigenvalue("density operator eigenvalue below -1e-12");
    }
    const double s = -xlog2x(eps_minus) - xlog2x(eps_plus);
    return s == 0.0 ? 0.0 : s;  // avoid -0 in rendered output
}

double binary_entropy_of_formation(double tan_phi) {
    if (!(tan_phi >= 0.0 && tan_phi <= 1.0)) {
        throw OutOfRange("tan_phi must lie in [0, 1]");
    }
    const double h = -xlog2x(0.5 * (1.0 + tan_phi)) - xlog2x(0.5 * (1.0 - tan_phi));
    return h == 0.0 ? 0.0 : h;
}

double covariant_concurrence_sq(const BlochFourVector& R) {
    const BlochFourVector v = clamped(R);
    return v.r0 * v.r0 - v.r1 * v.r1 - v.r2 * v.r2 - v.r3 * v.r3;
}

PurityReport purity_report(const BlochFourVector& R) {
    const BlochFourVector v = clamped(R);
    const double r = v.vec_norm();
    const double m = 0.25 * (v.r0 * v.r0 - r * r);

    PurityReport rep;
    rep.mixed_measure = m;
    rep.purity = v.r0 * v.r0 - 2.0 * m;
    rep.concurrence = 2.0 * std::sqrt(std::max(m, 0.0));
    rep.tangle = 4.0 * m;
    rep.tan_phi = std::min(r / v.r0, 1.0);
    rep.phi = std::atan(rep.tan_phi);
    rep.lambda_minus = 0.5 * (v.r0 - rep.concurrence);
    rep.lambda_plus = 0.5 * (v.r0 + rep.concurrence);
    rep.eps_minus = 0.5 * (v.r0 - r);
    rep.eps_plus = 0.5 * (v.r0 + r);
    rep.amp_mag = std::sqrt(rep.purity);
    rep.amp_phase = std::atan2(r, v.r0);
    rep.entropy_vn = von_neumann_entropy(rep.eps_minus, rep.eps_plus);
    rep.entropy_binary = binary_entropy_of_formation(rep.tan_phi);
    rep.excitation = 0.5 * (1.0 + v.r3);
    return rep;
}

}  // namespace jcpurity

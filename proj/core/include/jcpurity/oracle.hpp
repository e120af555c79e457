#pragma once

#include <utility>
#include <vector>

#include "jcpurity/bloch.hpp"
#include "jcpurity/dynamics.hpp"

namespace jcpurity {

struct ComplexRoots : std::domain_error {
    using std::domain_error::domain_error;
};

/// One joint-state coefficient: amplitude of |level>|n>.
struct JointStateEntry {
    bool excited;
    int n;
    Complex amplitude;
};

using JointStateTable = std::vector<JointStateEntry>;

JointStateTable to_table(const JointAmplitudes& amps);

/// Numerical partial trace over the field mode:
/// rho[a][b] = sum_n amp(a, n) * conj(amp(b, n)).
QubitDensityMatrix reduce_to_atom(const JointStateTable& state);

/// Eigenvalues of a Hermitian 2x2 matrix from the characteristic polynomial
/// lambda^2 - Tr(rho) lambda + det(rho), stable quadratic formula, sorted
/// ascending. Throws ComplexRoots when the discriminant is below -1e-12.
std::pair<double, double> eigen_bruteforce(const QubitDensityMatrix& rho);

}  // namespace jcpurity

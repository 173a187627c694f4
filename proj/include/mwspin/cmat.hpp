#pragma once

#include <Eigen/Dense>
#include <complex>

namespace mwspin {

using Complex = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

// Default tolerances: structural identities (unitarity, hermiticity) versus
// numerical equivalence of two computation routes.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kNumericTol = 1e-10;

bool all_finite(const Mat4& m);

/// max_jk |(M - M†)_jk|
double hermiticity_defect(const Mat4& m);

/// max_jk |(U U† - 1)_jk|
double unitarity_defect(const Mat4& u);

bool is_hermitian(const Mat4& m, double tol = kStructuralTol);
bool is_unitary(const Mat4& u, double tol = kStructuralTol);

/// Returns h unchanged; throws std::invalid_argument if h has non-finite
/// entries or H != H† within tol. `what` names the offender in the message.
const Mat4& require_hermitian(const Mat4& h, double tol = kStructuralTol,
                              const char* what = "matrix");

/// exp(-i H t) for Hermitian H, computed by eigendecomposition.
/// H in rad/ns, t in ns (the exponent is dimensionless).
Mat4 exp_hermitian(const Mat4& h, double t_ns, double tol = kStructuralTol);

/// U rho U†. Rejects non-unitary U (tolerance tol).
Mat4 evolve(const Mat4& rho, const Mat4& u, double tol = kNumericTol);

/// Re Tr(rho O) for Hermitian O. The imaginary part of the trace is asserted
/// to be below tol.
double expectation(const Mat4& rho, const Mat4& obs, double tol = kNumericTol);

/// |Tr(A† B)| / 4, insensitive to a global phase.
double operator_fidelity(const Mat4& a, const Mat4& b);

/// |k><k| in the product basis |aa>, |ab>, |ba>, |bb| (k = 0..3).
Mat4 basis_projector(int level);

}  // namespace mwspin

#include "mwspin/cmat.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mwspin {

bool all_finite(const Mat4& m) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) return false;
  return true;
}

double hermiticity_defect(const Mat4& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Mat4& u) {
  return (u * u.adjoint() - Mat4::Identity()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Mat4& m, double tol) {
  return all_finite(m) && hermiticity_defect(m) < tol;
}

bool is_unitary(const Mat4& u, double tol) {
  return all_finite(u) && unitarity_defect(u) < tol;
}

const Mat4& require_hermitian(const Mat4& h, double tol, const char* what) {
  if (!all_finite(h)) {
    std::ostringstream os;
    os << what << " has non-finite entries";
    throw std::invalid_argument(os.str());
  }
  if (hermiticity_defect(h) >= tol) {
    std::ostringstream os;
    os << what << " is not Hermitian (defect " << hermiticity_defect(h) << ", tol " << tol << ")";
    throw std::invalid_argument(os.str());
  }
  return h;
}

Mat4 exp_hermitian(const Mat4& h, double t_ns, double tol) {
  require_hermitian(h, tol, "exp_hermitian input");
  if (!std::isfinite(t_ns)) throw std::invalid_argument("exp_hermitian: non-finite time");
  Eigen::SelfAdjointEigenSolver<Mat4> es(h);
  Vec4 phases;
  for (int k = 0; k < 4; ++k) {
    const double a = es.eigenvalues()(k) * t_ns;
    phases(k) = Complex(std::cos(a), -std::sin(a));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Mat4 evolve(const Mat4& rho, const Mat4& u, double tol) {
  if (!all_finite(rho)) throw std::invalid_argument("evolve: state has non-finite entries");
  if (!is_unitary(u, tol)) {
    std::ostringstream os;
    os << "evolve: propagator is not unitary (defect " << unitarity_defect(u) << ")";
    throw std::invalid_argument(os.str());
  }
  return u * rho * u.adjoint();
}

double expectation(const Mat4& rho, const Mat4& obs, double tol) {
  require_hermitian(obs, kStructuralTol, "observable");
  const Complex tr = (rho * obs).trace();
  if (std::abs(tr.imag()) >= tol) {
    std::ostringstream os;
    os << "expectation: Tr(rho O) has imaginary part " << tr.imag();
    throw std::logic_error(os.str());
  }
  return tr.real();
}

double operator_fidelity(const Mat4& a, const Mat4& b) {
  return std::abs((a.adjoint() * b).trace()) / 4.0;
}

Mat4 basis_projector(int level) {
  if (level < 0 || level > 3) throw std::invalid_argument("basis_projector: level out of range");
  Mat4 m = Mat4::Zero();
  m(level, level) = 1.0;
  return m;
}

}  // namespace mwspin

#include "mwspin/spinops.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace mwspin {

namespace {

Mat4 kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Eigen::Matrix2cd half_pauli(char axis) {
  Eigen::Matrix2cd m;
  const Complex i(0.0, 1.0);
  switch (axis) {
    case 'x': m << 0, 0.5, 0.5, 0; break;
    case 'y': m << 0, -0.5 * i, 0.5 * i, 0; break;
    case 'z': m << 0.5, 0, 0, -0.5; break;
    default: m.setIdentity();
  }
  return m;
}

}  // namespace

Mat4 build_operator(SpinOp op) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  switch (op) {
    case SpinOp::Sx: return kron2(half_pauli('x'), id);
    case SpinOp::Sy: return kron2(half_pauli('y'), id);
    case SpinOp::Sz: return kron2(half_pauli('z'), id);
    case SpinOp::Ix: return kron2(id, half_pauli('x'));
    case SpinOp::Iy: return kron2(id, half_pauli('y'));
    case SpinOp::Iz: return kron2(id, half_pauli('z'));
    case SpinOp::SzIz: return kron2(half_pauli('z'), id) * kron2(id, half_pauli('z'));
    case SpinOp::SzIx: return kron2(half_pauli('z'), id) * kron2(id, half_pauli('x'));
    case SpinOp::SyIz: return kron2(half_pauli('y'), id) * kron2(id, half_pauli('z'));
    case SpinOp::Sy24:
      // (1/2) Sy - Sy Iz: single two-level y generator on the 2-4 pair.
      return 0.5 * build_operator(SpinOp::Sy) -
             build_operator(SpinOp::Sy) * build_operator(SpinOp::Iz);
    case SpinOp::Identity: return Mat4::Identity();
  }
  throw std::invalid_argument("build_operator: invalid enum value");
}

const char* to_string(SpinOp op) {
  switch (op) {
    case SpinOp::Sx: return "Sx";
    case SpinOp::Sy: return "Sy";
    case SpinOp::Sz: return "Sz";
    case SpinOp::Ix: return "Ix";
    case SpinOp::Iy: return "Iy";
    case SpinOp::Iz: return "Iz";
    case SpinOp::SzIz: return "SzIz";
    case SpinOp::SzIx: return "SzIx";
    case SpinOp::SyIz: return "SyIz";
    case SpinOp::Sy24: return "Sy24";
    case SpinOp::Identity: return "Identity";
  }
  return "?";
}

Mat4 build_operator(std::string_view name) {
  static constexpr std::array<SpinOp, 11> all = {
      SpinOp::Sx,   SpinOp::Sy,   SpinOp::Sz,   SpinOp::Ix,   SpinOp::Iy,  SpinOp::Iz,
      SpinOp::SzIz, SpinOp::SzIx, SpinOp::SyIz, SpinOp::Sy24, SpinOp::Identity};
  for (SpinOp op : all)
    if (name == to_string(op)) return build_operator(op);
  std::ostringstream os;
  os << "build_operator: unknown operator label '" << name << "'";
  throw std::invalid_argument(os.str());
}

}  // namespace mwspin

#pragma once

#include <string_view>

#include "mwspin/cmat.hpp"

namespace mwspin {

// Product-basis spin operators for the S=1/2, I=1/2 pair. Basis ordering is
// |1> = |aa>, |2> = |ab>, |3> = |ba>, |4> = |bb> (electron label first).
// Electron operators are (pauli/2) x 1, nuclear operators 1 x (pauli/2).
enum class SpinOp { Sx, Sy, Sz, Ix, Iy, Iz, SzIz, SzIx, SyIz, Sy24, Identity };

Mat4 build_operator(SpinOp op);

/// Lookup by label ("Sx", "Sy24", ...). Unknown labels are rejected with a
/// diagnostic naming the label.
Mat4 build_operator(std::string_view name);

const char* to_string(SpinOp op);

}  // namespace mwspin

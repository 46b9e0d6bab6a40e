#pragma once

#include <vector>

#include "chains.hpp"
#include "ints.hpp"
#include "quandle.hpp"

namespace rf {

// Basis of the right null space of M (dense row-major, rows x cols), one
// vector per free column, via fraction-free-ish Gaussian elimination over Q.
std::vector<std::vector<Rat>> rational_nullspace(std::vector<std::vector<Rat>> M, int cols);

// Basis of ker(delta: C^n -> C^{n+1}) as total rational cochains.
std::vector<RationalCochain> cocycle_kernel_basis(const Quandle& Q, int n);

}  // namespace rf

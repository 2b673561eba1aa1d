#pragma once

#include "ntoric/base.hpp"

namespace ntoric {

// Dense integer / rational matrices, row major. Everything here is exact and
// sized for the small systems this library produces (rank <= 4, a few dozen
// rows at most).
using Mat = std::vector<Vec>;
using QMat = std::vector<QVec>;

Int det(const Mat& a);
size_t rank_of(Mat a);

// Basis of the integer kernel {x : A x = 0} of an integer matrix.
std::vector<Vec> kernel_basis(const Mat& a);

// One rational solution of A x = b, or nullopt when inconsistent.
// Free variables are set to zero.
std::optional<QVec> solve_rational(const Mat& a, const QVec& b);

// One integral solution of A x = b, or nullopt when none exists.
std::optional<Vec> solve_integral(const Mat& a, const Vec& b);

// Solve A x = b where A is square nonsingular over Q.
QVec solve_square(const QMat& a, const QVec& b);

// Leading-principal-minor test for negative definiteness of a symmetric
// integer matrix: (-1)^k det_k > 0 for every k.
bool is_negative_definite(const Mat& a);

} // namespace ntoric

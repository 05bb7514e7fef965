#pragma once

// Independent reference computations used only by the test suites. These
// deliberately avoid the code paths they certify.

#include <cstdint>
#include <functional>

#include "squint/matcore.hpp"

namespace oracles {

using squint::Matrix;
using squint::Vector;

// Coefficients c_1..c_n of det(lambda I - M) = lambda^n + c_1 lambda^{n-1} + ... + c_n,
// computed by the trace-based Faddeev-LeVerrier recursion (no minor enumeration).
Vector charpoly_coefficients(const Matrix& m);

// Central finite difference (f(t+h) - f(t-h)) / 2h.
double central_difference(const std::function<double(double)>& f, double t, double h = 1e-5);

// Second central difference (f(t+h) - 2 f(t) + f(t-h)) / h^2.
double second_central_difference(const std::function<double(double)>& f, double t,
                                 double h = 1e-5);

// Variances of p and q in the squeezed vacuum exp[r(a^dag^2 - a^2)/2]|0>,
// computed in a truncated number basis (a = (q + ip)/sqrt(2), hbar = 1).
struct ModeVariances {
  double dp2;
  double dq2;
};
ModeVariances squeezed_vacuum_variances(double r, int dim = 60);

// Deterministic dense matrix with entries uniform in [-1, 1].
Matrix random_matrix(int rows, int cols, std::uint64_t seed);
Matrix random_symmetric_matrix(int n, std::uint64_t seed);

}  // namespace oracles

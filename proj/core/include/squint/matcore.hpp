#pragma once

#include <Eigen/Dense>

namespace squint {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Largest absolute entry; the norm used by every "within tol" check in this library.
double max_abs(const Matrix& m);

bool is_symmetric(const Matrix& m, double tol = 1e-9);

/// Throws ArgumentError when the matrix carries NaN or infinity.
void require_finite(const Matrix& m, const char* context);

/// Canonical antisymmetric form J = [[0, I], [-I, 0]] in (p, q) ordering.
/// Satisfies J^2 = -I, J^T = -J, det J = 1.
Matrix symplectic_form(int modes);

/// Sum of all order x order principal minors of a square matrix.
/// The maximal order equals the determinant. Enumeration is explicit and
/// limited to n <= 12.
double characteristic_coefficient(const Matrix& m, int order);

/// All characteristic coefficients, orders 1..n.
Vector characteristic_coefficients(const Matrix& m);

/// Dense matrix exponential by scaling-and-squaring with an order-18 truncated
/// power series; the argument is halved until its 1-norm is at most 0.5.
Matrix matrix_exponential(const Matrix& m);

/// max-abs entry of L J L^T - J; zero exactly on the symplectic group.
double symplectic_defect(const Matrix& l);

/// First-order averaging correction L -> (L + J L^{-T} J^{-1}) / 2.
/// Fixed point exactly on symplectic matrices; contracts the defect of
/// mildly perturbed ones. Throws NumericError on singular input.
Matrix resymplectify(const Matrix& l);

/// True iff the symmetric matrix has smallest eigenvalue above tol.
/// Throws ArgumentError when the input is asymmetric beyond tol.
bool check_positive_definite(const Matrix& m, double tol = 1e-9);

}  // namespace squint

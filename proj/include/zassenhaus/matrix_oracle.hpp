#ifndef ZASSENHAUS_MATRIX_ORACLE_HPP
#define ZASSENHAUS_MATRIX_ORACLE_HPP

#include <Eigen/Dense>

#include "zassenhaus/lie_polynomial.hpp"

namespace zassenhaus {

// Dense matrix exponential by scaling-and-squaring around a Taylor core.
// The argument is scaled until its Frobenius norm is at most 1/4, so the
// Taylor terms decay at least fourfold and the truncated tail stays below
// ~1e-14 of the result.
Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& a);

// Evaluates a bracket polynomial on concrete matrices, [A,B] = AB - BA,
// with coefficients rounded to double.
Eigen::MatrixXd evaluate_on_matrices(const LiePolynomial& p, const Eigen::MatrixXd& x,
                                     const Eigen::MatrixXd& y);

}  // namespace zassenhaus

#endif

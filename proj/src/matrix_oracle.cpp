#include "zassenhaus/matrix_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace zassenhaus {

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_exp: square matrix required");
  const double norm = a.norm();
  const Eigen::Index n = a.rows();

  int s = 0;
  if (norm > 0.25) s = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Eigen::MatrixXd b = a * std::ldexp(1.0, -s);

  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = (term * b) / k;
    sum += term;
    if (term.norm() <= 1e-16 * sum.norm()) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

namespace {

const Eigen::MatrixXd& evaluate_term(TermId t, const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                                     std::unordered_map<TermId, Eigen::MatrixXd>& memo) {
  if (const auto it = memo.find(t); it != memo.end()) return it->second;
  Eigen::MatrixXd value;
  if (t == kTermX) {
    value = x;
  } else if (t == kTermY) {
    value = y;
  } else {
    const Eigen::MatrixXd& a = evaluate_term(term_left(t), x, y, memo);
    const Eigen::MatrixXd& b = evaluate_term(term_right(t), x, y, memo);
    value = a * b - b * a;
  }
  return memo.emplace(t, std::move(value)).first->second;
}

}  // namespace

Eigen::MatrixXd evaluate_on_matrices(const LiePolynomial& p, const Eigen::MatrixXd& x,
                                     const Eigen::MatrixXd& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw std::invalid_argument("evaluate_on_matrices: matching square matrices required");
  }
  std::unordered_map<TermId, Eigen::MatrixXd> memo;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(x.rows(), x.cols());
  for (const auto& [t, c] : p.terms()) {
    out += c.get_d() * evaluate_term(t, x, y, memo);
  }
  return out;
}

}  // namespace zassenhaus

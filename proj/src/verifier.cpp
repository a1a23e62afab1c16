#include "zassenhaus/verifier.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "zassenhaus/matrix_oracle.hpp"

namespace zassenhaus {

std::string to_string(Orientation o) {
  return o == Orientation::kRight ? "right" : "left";
}

Orientation orientation_from_string(const std::string& s) {
  if (s == "right") return Orientation::kRight;
  if (s == "left") return Orientation::kLeft;
  throw std::invalid_argument("orientation: expected 'right' or 'left'");
}

nlohmann::json VerificationReport::to_json() const {
  return {{"mode", mode}, {"degree", degree}, {"passed", passed}, {"details", details}};
}

WordPolynomial truncated_exp(const WordPolynomial& p) {
  if (p.constant_term() != 0) {
    throw std::invalid_argument("truncated_exp: nonzero constant term");
  }
  const int n = p.truncation_degree();
  // Horner form of sum_{k<=n} p^k / k!.
  WordPolynomial r = WordPolynomial::constant(n, Rational(1));
  for (int j = n; j >= 1; --j) {
    r = p * r;
    r *= make_rational(1, j);
    r += WordPolynomial::constant(n, Rational(1));
  }
  return r;
}

VerificationReport verify_associative(const ZassenhausSeries& s, int degree,
                                      Orientation orientation) {
  if (degree < 2 || degree > s.max_degree()) {
    throw std::invalid_argument("verify_associative: degree out of range");
  }

  const WordPolynomial ex = truncated_exp(
      WordPolynomial::single(degree, Word::x(), Rational(1)));
  const WordPolynomial ey = truncated_exp(
      WordPolynomial::single(degree, Word::y(), Rational(1)));

  WordPolynomial product(degree);
  if (orientation == Orientation::kRight) {
    product = ex * ey;
    for (int n = 2; n <= degree; ++n) {
      product = product * truncated_exp(expand_to_words(s.exponent(n), degree));
    }
  } else {
    const ZassenhausSeries flipped = left_oriented(s);
    product = WordPolynomial::constant(degree, Rational(1));
    for (int n = degree; n >= 2; --n) {
      product = product * truncated_exp(expand_to_words(flipped.exponent(n), degree));
    }
    product = product * ey * ex;
  }

  WordPolynomial target(degree);
  {
    WordPolynomial xy = WordPolynomial::single(degree, Word::x(), Rational(1));
    xy += WordPolynomial::single(degree, Word::y(), Rational(1));
    target = truncated_exp(xy);
  }

  const WordPolynomial residual = product - target;

  VerificationReport report;
  report.mode = "associative";
  report.degree = degree;
  report.passed = residual.is_zero();
  report.details.push_back({
      {"orientation", to_string(orientation)},
      {"residual_terms", residual.term_count()},
      {"lowest_nonzero_degree", residual.lowest_nonzero_degree()},
      {"words_in_truncation", (std::uint64_t{1} << (degree + 1)) - 1},
  });
  return report;
}

VerificationReport verify_matrix(const ZassenhausSeries& s, int degree, int dim, int trials,
                                 std::uint64_t seed) {
  if (degree < 2 || degree > s.max_degree()) {
    throw std::invalid_argument("verify_matrix: degree out of range");
  }
  if (dim < 2 || trials < 1) throw std::invalid_argument("verify_matrix: bad dimensions/trials");

  constexpr double kNoiseFloor = 1e-13;
  const double slope_threshold = degree + 1 - 0.25;

  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] {  // [-1, 1), 53-bit resolution
    return ((rng() >> 11) * 0x1p-53) * 2.0 - 1.0;
  };
  const auto random_matrix = [&](int n) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = uniform();
    }
    return m;
  };

  VerificationReport report;
  report.mode = "matrix";
  report.degree = degree;
  report.details.push_back({{"seed", seed},
                            {"dim", dim},
                            {"trials", trials},
                            {"slope_threshold", slope_threshold},
                            {"noise_floor", kNoiseFloor}});

  bool all_passed = true;
  for (int trial = 0; trial < trials; ++trial) {
    const Eigen::MatrixXd x = random_matrix(dim);
    const Eigen::MatrixXd y = random_matrix(dim);

    // Evaluate each exponent once; λ-scaling is analytic (C_n is
    // homogeneous of degree n, so C_n(λX, λY) = λ^n C_n(X, Y)).
    std::vector<Eigen::MatrixXd> c_matrices;
    for (int n = 2; n <= degree; ++n) {
      c_matrices.push_back(evaluate_on_matrices(s.exponent(n), x, y));
    }

    std::vector<double> lambdas, residuals;
    std::vector<bool> used;
    std::vector<double> log_l, log_r;
    for (int e = 1; e <= 6; ++e) {
      const double lambda = std::ldexp(1.0, -e);
      Eigen::MatrixXd prod = matrix_exp(lambda * x) * matrix_exp(lambda * y);
      double scale = lambda;
      for (int n = 2; n <= degree; ++n) {
        scale *= lambda;  // scale = lambda^n
        prod = prod * matrix_exp(scale * c_matrices[n - 2]);
      }
      const double residual = (prod - matrix_exp(lambda * (x + y))).norm();
      lambdas.push_back(lambda);
      residuals.push_back(residual);
      const bool usable = residual > kNoiseFloor;
      used.push_back(usable);
      if (usable) {
        log_l.push_back(std::log2(lambda));
        log_r.push_back(std::log2(residual));
      }
    }

    nlohmann::json trial_json = {{"trial", trial},
                                 {"lambdas", lambdas},
                                 {"residuals", residuals},
                                 {"used", used}};
    if (log_l.size() < 3) {
      trial_json["inconclusive"] = true;
      trial_json["passed"] = false;
      all_passed = false;
    } else {
      // Least-squares slope of log2(residual) against log2(lambda).
      const std::size_t m = log_l.size();
      double mean_l = 0, mean_r = 0;
      for (std::size_t i = 0; i < m; ++i) mean_l += log_l[i], mean_r += log_r[i];
      mean_l /= m;
      mean_r /= m;
      double num = 0, den = 0;
      for (std::size_t i = 0; i < m; ++i) {
        num += (log_l[i] - mean_l) * (log_r[i] - mean_r);
        den += (log_l[i] - mean_l) * (log_l[i] - mean_l);
      }
      const double slope = num / den;
      const bool ok = slope >= slope_threshold;
      trial_json["slope"] = slope;
      trial_json["passed"] = ok;
      all_passed = all_passed && ok;
    }
    report.details.push_back(std::move(trial_json));
  }

  report.passed = all_passed;
  return report;
}

namespace {

// Rank by fraction-free elimination with row/column pivoting: after step k
// every entry is a (k+1)-minor of the original matrix, so the division by
// the previous pivot is exact.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  mpz_class prev(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

RankResult independence_rank(const LiePolynomial& p) {
  if (p.is_zero()) return {0, 0};
  const int degree = p.max_degree();
  if (!p.is_homogeneous(degree)) {
    throw std::invalid_argument("independence_rank: homogeneous polynomial required");
  }
  if (degree > 20) throw std::invalid_argument("independence_rank: degree too large");

  std::vector<std::vector<mpz_class>> matrix;
  matrix.reserve(p.term_count());
  for (const auto& [t, c] : p.terms()) {
    // Each term expands with integer coefficients over the 2^degree words.
    const WordPolynomial w = expand_to_words(LiePolynomial::single(t, Rational(1)), degree);
    std::vector<mpz_class> row(std::size_t{1} << degree, mpz_class(0));
    for (const auto& [word, coeff] : w.coeffs()) {
      row[word.bits] = coeff.get_num();
    }
    matrix.push_back(std::move(row));
  }
  return {p.term_count(), bareiss_rank(std::move(matrix))};
}

std::uint64_t witt_dimension(int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("witt_dimension: n out of range");
  const auto moebius = [](int d) {
    int result = 1;
    for (int f = 2; f * f <= d; ++f) {
      if (d % f == 0) {
        d /= f;
        if (d % f == 0) return 0;  // squared factor
        result = -result;
      }
    }
    if (d > 1) result = -result;
    return result;
  };
  mpz_class sum(0);
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(d);
    if (mu == 0) continue;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(n / d));
    sum += mu * pw;
  }
  sum /= n;
  return static_cast<std::uint64_t>(sum.get_ui());
}

VerificationReport verify_independence(const ZassenhausSeries& s, int degree, int rank_ceiling) {
  if (degree < 2 || degree > s.max_degree()) {
    throw std::invalid_argument("verify_independence: degree out of range");
  }
  VerificationReport report;
  report.mode = "independence";
  report.degree = degree;
  report.passed = true;
  for (int n = 2; n <= degree; ++n) {
    const LiePolynomial& cn = s.exponent(n);
    const std::uint64_t witt = witt_dimension(n);
    nlohmann::json entry = {{"degree", n},
                            {"terms", cn.term_count()},
                            {"witt_dimension", witt}};
    bool ok = cn.term_count() <= witt;
    if (n <= rank_ceiling) {
      const RankResult r = independence_rank(cn);
      entry["rank"] = r.rank;
      ok = ok && r.rank == r.terms;
    }
    entry["passed"] = ok;
    report.passed = report.passed && ok;
    report.details.push_back(std::move(entry));
  }
  return report;
}

}  // namespace zassenhaus

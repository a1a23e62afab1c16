#ifndef ZASSENHAUS_BOUNDS_HPP
#define ZASSENHAUS_BOUNDS_HPP

#include <iosfwd>
#include <vector>

namespace zassenhaus {

// Nonnegative scalar stored as its natural log (-inf encodes 0), so the
// superexponentially growing bound tables never overflow. Addition is
// log-sum-exp; multiplication adds logs.
class LogMagnitude {
 public:
  static LogMagnitude zero();
  static LogMagnitude from_value(double v);  // v >= 0, finite
  static LogMagnitude from_log(double log_value);

  bool is_zero() const;
  double log_value() const;  // -inf when zero
  double value() const;      // exp(log); may over/underflow at the extremes

  friend LogMagnitude operator+(LogMagnitude a, LogMagnitude b);
  friend LogMagnitude operator*(LogMagnitude a, LogMagnitude b);
  friend bool operator<(LogMagnitude a, LogMagnitude b) { return a.log_ < b.log_; }
  friend bool operator==(LogMagnitude a, LogMagnitude b) { return a.log_ == b.log_; }

 private:
  double log_;
};

// Closed form for the first row of the norm-bound table,
//   d_{1,k} = (2^k / k!) * y * ((x+y)^k - y^k),
// evaluated in the log domain. Requires k >= 1 and finite x, y >= 0; it is
// zero exactly when x or y is zero.
LogMagnitude d1(int k, double x, double y);

// Majorant table for the exponent norms at a point (x, y) = (||X||, ||Y||):
//   d_{n,k} = sum_{j=0..floor(k/n)-1} (2^j / j!) delta_n^j d_{n-1,k-nj}
//   delta_2 = x*y,   delta_n = (1/n) d_{floor((n-1)/2), n-1}   for n >= 3,
// with ||C_n|| <= delta_n. Rows 1..max(1,(n_max-1)/2) and columns up to
// n_max-1 are filled eagerly at construction.
class BoundTable {
 public:
  BoundTable(double x, double y, int n_max);  // n_max >= 3

  double x() const { return x_; }
  double y() const { return y_; }
  int n_max() const { return n_max_; }
  int rows() const { return rows_; }

  LogMagnitude d(int n, int k) const;     // 1 <= n <= rows(), n <= k <= n_max-1
  LogMagnitude delta(int n) const;        // 2 <= n <= n_max

 private:
  double x_;
  double y_;
  int n_max_;
  int rows_;
  std::vector<std::vector<double>> dlog_;  // dlog_[n][k]
  std::vector<double> delta_log_;          // delta_log_[n]
};

struct ConvergenceResult {
  bool convergent;
  double final_ratio;                  // delta_{n_max} / delta_{n_max-1}
  std::vector<double> trailing_ratios; // delta_n/delta_{n-1}, last 10 n's, for audit
};

// Sufficient-condition test: the series is declared convergent at (x, y)
// when the final ratio delta_{n_max}/delta_{n_max-1} is < 1. Points on the
// axes are always convergent (every bound is zero). Rejects NaN, negative
// and infinite coordinates and n_max < 3.
ConvergenceResult converges(double x, double y, int n_max = 1000);

struct BoundaryPoint {
  double x;
  double y_boundary;  // largest y found convergent (within tolerance)
  double ratio;       // final ratio at (x, y_boundary)
};

// For each x, bisects in y for the edge of the convergent region: starts at
// y_hi = 4 and doubles until non-convergent, then bisects to y_tolerance.
// x values must be finite and >= 0; work is spread over `threads` workers
// (0 = hardware concurrency), results keep the input order.
std::vector<BoundaryPoint> domain_boundary(const std::vector<double>& xs, int n_max,
                                           double y_tolerance, unsigned threads = 0);

// Header "x,y_boundary,n_max,ratio"; one row per point, full double precision.
void write_boundary_csv(std::ostream& os, const std::vector<BoundaryPoint>& points, int n_max);

// count log-spaced values from lo to hi inclusive; lo > 0, count >= 1.
std::vector<double> geometric_grid(double lo, double hi, int count);

// Baseline radii for comparison: the series converges whenever x + y is
// below the returned value.
double suzuki_radius();  // log 2 - 1/2
// Larger baseline: the root z of z^2 (1 + 2*integral_0^z (e^{2w}-1)/w dw)
// = 4 (2 log 2 - 1), computed by adaptive quadrature plus bisection.
double bayen_radius();

}  // namespace zassenhaus

#endif

#include "zassenhaus/bounds.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace zassenhaus {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;

// log(1 - e^t) for t < 0, stable at both ends.
double log1mexp(double t) {
  return t < -kLn2 ? std::log1p(-std::exp(t)) : std::log(-std::expm1(t));
}

void check_point(double x, double y) {
  if (!(x >= 0) || !(y >= 0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("bounds: coordinates must be finite and nonnegative");
  }
}

}  // namespace

LogMagnitude LogMagnitude::zero() { return from_log(kNegInf); }

LogMagnitude LogMagnitude::from_value(double v) {
  if (!(v >= 0) || !std::isfinite(v)) {
    throw std::invalid_argument("LogMagnitude: finite nonnegative value required");
  }
  return from_log(std::log(v));
}

LogMagnitude LogMagnitude::from_log(double log_value) {
  LogMagnitude m;
  m.log_ = log_value;
  return m;
}

bool LogMagnitude::is_zero() const { return log_ == kNegInf; }
double LogMagnitude::log_value() const { return log_; }
double LogMagnitude::value() const { return std::exp(log_); }

LogMagnitude operator+(LogMagnitude a, LogMagnitude b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double hi = std::max(a.log_, b.log_);
  const double lo = std::min(a.log_, b.log_);
  return LogMagnitude::from_log(hi + std::log1p(std::exp(lo - hi)));
}

LogMagnitude operator*(LogMagnitude a, LogMagnitude b) {
  if (a.is_zero() || b.is_zero()) return LogMagnitude::zero();
  return LogMagnitude::from_log(a.log_ + b.log_);
}

LogMagnitude d1(int k, double x, double y) {
  if (k < 1) throw std::invalid_argument("d1: k must be >= 1");
  check_point(x, y);
  if (x == 0.0 || y == 0.0) return LogMagnitude::zero();
  const double ls = std::log(x + y);
  const double ly = std::log(y);
  // log of (2^k/k!) y ((x+y)^k - y^k), the subtraction done as log1mexp.
  return LogMagnitude::from_log(k * kLn2 - std::lgamma(k + 1.0) + ly + k * ls +
                                log1mexp(k * (ly - ls)));
}

BoundTable::BoundTable(double x, double y, int n_max) : x_(x), y_(y), n_max_(n_max) {
  check_point(x, y);
  if (n_max < 3) throw std::invalid_argument("BoundTable: n_max must be >= 3");
  rows_ = std::max(1, (n_max - 1) / 2);

  dlog_.assign(rows_ + 1, std::vector<double>(n_max_, kNegInf));
  delta_log_.assign(n_max_ + 1, kNegInf);

  // lgamma_[i] = log(i!), shared by every row.
  std::vector<double> lgamma_(n_max_ + 1);
  for (int i = 0; i <= n_max_; ++i) lgamma_[i] = std::lgamma(i + 1.0);

  const bool zero_table = (x == 0.0 || y == 0.0);

  // Row 1 by the closed form.
  if (!zero_table) {
    const double ls = std::log(x + y);
    const double ly = std::log(y);
    for (int k = 1; k <= n_max_ - 1; ++k) {
      dlog_[1][k] = k * kLn2 - lgamma_[k] + ly + k * ls + log1mexp(k * (ly - ls));
    }
    delta_log_[2] = std::log(x) + std::log(y);
  }

  // On an axis every entry is zero; row 1 and delta_2 already encode that,
  // and running the recursion would form 0 * (-inf) = NaN in the exponents.
  if (zero_table) return;

  std::vector<double> terms;
  terms.reserve(n_max_ / 2 + 1);

  for (int n = 2; n <= rows_; ++n) {
    if (n >= 3) delta_log_[n] = -std::log(n) + dlog_[(n - 1) / 2][n - 1];
    const double a = kLn2 + delta_log_[n];  // log(2 delta_n)
    for (int k = n; k <= n_max_ - 1; ++k) {
      // log-sum-exp of j*log(2 delta_n) - log j! + log d_{n-1,k-nj}.
      terms.clear();
      double top = kNegInf;
      const int j_max = k / n - 1;
      for (int j = 0; j <= j_max; ++j) {
        const double t = j * a - lgamma_[j] + dlog_[n - 1][k - n * j];
        terms.push_back(t);
        if (t > top) top = t;
      }
      if (top == kNegInf) continue;  // stays zero
      double sum = 0;
      for (const double t : terms) sum += std::exp(t - top);
      dlog_[n][k] = top + std::log(sum);
    }
  }

  for (int n = std::max(3, rows_ + 1); n <= n_max_; ++n) {
    delta_log_[n] = -std::log(n) + dlog_[(n - 1) / 2][n - 1];
  }
}

LogMagnitude BoundTable::d(int n, int k) const {
  if (n < 1 || n > rows_ || k < n || k > n_max_ - 1) {
    throw std::invalid_argument("BoundTable::d: index out of range");
  }
  return LogMagnitude::from_log(dlog_[n][k]);
}

LogMagnitude BoundTable::delta(int n) const {
  if (n < 2 || n > n_max_) throw std::invalid_argument("BoundTable::delta: index out of range");
  return LogMagnitude::from_log(delta_log_[n]);
}

ConvergenceResult converges(double x, double y, int n_max) {
  check_point(x, y);
  if (n_max < 3) throw std::invalid_argument("converges: n_max must be >= 3");

  const int first_ratio = std::max(3, n_max - 9);
  if (x == 0.0 || y == 0.0) {
    // Every bound is identically zero on the axes; the product terminates.
    return {true, 0.0, std::vector<double>(n_max - first_ratio + 1, 0.0)};
  }

  const BoundTable table(x, y, n_max);
  ConvergenceResult result;
  result.trailing_ratios.reserve(n_max - first_ratio + 1);
  for (int n = first_ratio; n <= n_max; ++n) {
    result.trailing_ratios.push_back(
        std::exp(table.delta(n).log_value() - table.delta(n - 1).log_value()));
  }
  result.final_ratio = result.trailing_ratios.back();
  result.convergent = table.delta(n_max).log_value() < table.delta(n_max - 1).log_value();
  return result;
}

std::vector<BoundaryPoint> domain_boundary(const std::vector<double>& xs, int n_max,
                                           double y_tolerance, unsigned threads) {
  if (!(y_tolerance > 0) || !std::isfinite(y_tolerance)) {
    throw std::invalid_argument("domain_boundary: positive tolerance required");
  }
  if (n_max < 3) throw std::invalid_argument("domain_boundary: n_max must be >= 3");
  for (const double x : xs) check_point(x, 0.0);

  std::vector<BoundaryPoint> out(xs.size());
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < xs.size(); i = next.fetch_add(1)) {
      const double x = xs[i];
      double lo = 0.0;
      double lo_ratio = 0.0;
      double hi = 4.0;
      // Points on the y axis are always convergent, so lo starts valid.
      int doublings = 0;
      while (doublings < 9) {
        const ConvergenceResult r = converges(x, hi, n_max);
        if (!r.convergent) break;
        lo = hi;
        lo_ratio = r.final_ratio;
        hi *= 2;
        ++doublings;
      }
      if (doublings < 9) {
        while (hi - lo > y_tolerance) {
          const double mid = 0.5 * (lo + hi);
          const ConvergenceResult r = converges(x, mid, n_max);
          if (r.convergent) {
            lo = mid;
            lo_ratio = r.final_ratio;
          } else {
            hi = mid;
          }
        }
      }
      out[i] = {x, lo, lo_ratio};
    }
  };

  unsigned n_threads = threads == 0 ? std::thread::hardware_concurrency() : threads;
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<std::size_t>(n_threads, xs.size() == 0 ? 1 : xs.size());

  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return out;
}

void write_boundary_csv(std::ostream& os, const std::vector<BoundaryPoint>& points, int n_max) {
  os << "x,y_boundary,n_max,ratio\n";
  char buf[160];
  for (const BoundaryPoint& p : points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%.17g\n", p.x, p.y_boundary, n_max, p.ratio);
    os << buf;
  }
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
  if (!(lo > 0) || !(hi >= lo) || count < 1) {
    throw std::invalid_argument("geometric_grid: need 0 < lo <= hi, count >= 1");
  }
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) out.push_back(lo * std::exp(step * i));
  out.back() = hi;  // exact endpoint despite rounding
  return out;
}

double suzuki_radius() { return std::log(2.0) - 0.5; }

namespace {

template <typename F>
double adaptive_simpson(const F& f, double a, double m, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, m, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace

double bayen_radius() {
  const double target = 4.0 * (2.0 * std::log(2.0) - 1.0);
  const auto h = [](double w) { return w == 0.0 ? 2.0 : std::expm1(2.0 * w) / w; };
  const auto g = [&](double z) { return z * z * (1.0 + 2.0 * integrate(h, 0.0, z, 1e-12)) - target; };

  double lo = 0.1;
  double hi = 1.0;
  // g is increasing here; g(0.1) < 0 < g(1).
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace zassenhaus

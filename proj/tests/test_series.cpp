#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "test_support.hpp"
#include "zassenhaus/index_sets.hpp"
#include "zassenhaus/series.hpp"

using namespace zassenhaus;

namespace {

// Hand-expanded low rows of the f table, frozen as strings:
//   f_{1,1} = -[X,Y]
//   f_{1,2} = [Y,[X,Y]] + (1/2)[X,[X,Y]]
// and the first exponents of e^{X+Y} = e^X e^Y e^{C_2} e^{C_3} ...
const char* kF11 = "(-1)[X,Y]";
const char* kF12 = "(1)[Y,[X,Y]] + (1/2)[X,[X,Y]]";
const char* kC2 = "(-1/2)[X,Y]";
const char* kC3 = "(1/3)[Y,[X,Y]] + (1/6)[X,[X,Y]]";
const char* kC4 = "(-1/8)[Y,[Y,[X,Y]]] + (-1/8)[Y,[X,[X,Y]]] + (-1/24)[X,[X,[X,Y]]]";

// Free Lie algebra dimension on two generators (necklace count):
// witt(n) = (1/n) sum_{d | n} mu(d) 2^{n/d}.
const std::vector<std::pair<int, long>> kWittSmall = {
    {1, 2}, {2, 1}, {3, 2}, {4, 3}, {5, 6}, {6, 9}, {7, 18}, {8, 30},
    {9, 56}, {10, 99}, {11, 186}, {12, 335},
};

// Independent enumeration oracle: all tuples with the exact weight, filtered
// by the prefix conditions afterwards (no pruning logic shared with the
// production enumerator).
std::vector<IndexTuple> brute_force_index_set(int n) {
  std::vector<IndexTuple> all;
  IndexTuple t(n + 1, 0);
  auto weight_of = [](int m) { return m == 0 ? 1 : m; };
  // Odometer over all tuples with entries bounded by n / weight.
  while (true) {
    int total = 0;
    for (int m = 0; m <= n; ++m) total += weight_of(m) * t[m];
    if (total == n) {
      bool ok = true;
      for (int j = 0; j <= n - 1 && ok; ++j) {
        int prefix = 0;
        for (int m = 0; m <= j; ++m) prefix += weight_of(m) * t[m];
        ok = prefix >= j + 1;
      }
      if (ok) all.push_back(t);
    }
    int pos = n;
    while (pos >= 0 && t[pos] == n / weight_of(pos)) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("f table: first row closed form, hand-expanded values") {
  CHECK(to_string(SeriesEngine::f1(1)) == kF11);
  CHECK(to_string(SeriesEngine::f1(2)) == kF12);
  CHECK(SeriesEngine::f1(3).term_count() == 3);
  CHECK_THROWS_AS(SeriesEngine::f1(0), std::invalid_argument);
  // f_{1,k} is homogeneous of degree k+1.
  for (int k = 1; k <= 6; ++k) CHECK(SeriesEngine::f1(k).is_homogeneous(k + 1));
}

TEST_CASE("f table: engine recursion and domain checks") {
  SeriesEngine engine;
  CHECK_THROWS_AS(engine.f(2, 1), std::invalid_argument);  // k < n
  CHECK_THROWS_AS(engine.f(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(engine.f(2, 4), std::logic_error);  // C_2 not computed yet

  engine.exponent(2);
  // f_{2,4} = f_{1,4} - ad_{C_2} f_{1,2}  (j ranges over 0,1; sign (-1)^j).
  const LiePolynomial expected =
      lie_add(SeriesEngine::f1(4),
              lie_scale(Rational(-1),
                        lie_bracket(LiePolynomial::from_string(kC2), SeriesEngine::f1(2))));
  CHECK(engine.f(2, 4) == expected);
  // f_{n,k} is homogeneous of degree k+1.
  CHECK(engine.f(2, 5).is_homogeneous(6));
  CHECK(engine.f(1, 3) == SeriesEngine::f1(3));
}

TEST_CASE("exponents: golden C_2, C_3, C_4") {
  SeriesEngine engine;
  CHECK(to_string(engine.exponent(2)) == kC2);
  CHECK(to_string(engine.exponent(3)) == kC3);
  CHECK(to_string(engine.exponent(4)) == kC4);
}

TEST_CASE("exponents: homogeneity and term counts up to degree 12") {
  SeriesEngine engine;
  for (int n = 2; n <= 12; ++n) {
    const LiePolynomial& cn = engine.exponent(n);
    CHECK(cn.is_homogeneous(n));
    CHECK_FALSE(cn.is_zero());
    // No basis reduction is applied, yet the number of distinct structural
    // terms stays within the free-Lie-algebra dimension in every degree.
    CHECK(cn.term_count() <= static_cast<std::size_t>(kWittSmall[n - 1].second));
  }
  CHECK(engine.exponent(5).term_count() == 6);
}

TEST_CASE("series: snapshot object and validation") {
  const ZassenhausSeries s = zassenhaus_series(5);
  CHECK(s.max_degree() == 5);
  CHECK(to_string(s.exponent(2)) == kC2);
  CHECK(to_string(s.exponent(4)) == kC4);
  CHECK_THROWS_AS(s.exponent(1), std::invalid_argument);
  CHECK_THROWS_AS(s.exponent(6), std::invalid_argument);
  CHECK_THROWS_AS(zassenhaus_series(1), std::invalid_argument);

  // Construction rejects non-homogeneous entries.
  std::vector<LiePolynomial> bad = {LiePolynomial::generator(kTermX)};
  CHECK_THROWS_AS(ZassenhausSeries(2, std::move(bad)), std::invalid_argument);
  std::vector<LiePolynomial> wrong_count = {};
  CHECK_THROWS_AS(ZassenhausSeries(2, std::move(wrong_count)), std::invalid_argument);
}

TEST_CASE("series: left orientation flips signs of even degrees, involutive") {
  const ZassenhausSeries s = zassenhaus_series(6);
  const ZassenhausSeries l = left_oriented(s);
  CHECK(to_string(l.exponent(2)) == "(1/2)[X,Y]");
  CHECK(l.exponent(3) == s.exponent(3));
  CHECK(l.exponent(4) == lie_scale(Rational(-1), s.exponent(4)));
  CHECK(l.exponent(5) == s.exponent(5));
  const ZassenhausSeries back = left_oriented(l);
  for (int n = 2; n <= 6; ++n) CHECK(back.exponent(n) == s.exponent(n));
}

TEST_CASE("index sets: golden small cases") {
  const auto i1 = enumerate_index_set(1);
  REQUIRE(i1.size() == 1);
  CHECK(i1[0] == IndexTuple{1, 0});

  const auto i2 = enumerate_index_set(2);
  REQUIRE(i2.size() == 2);
  CHECK(i2[0] == IndexTuple{1, 1, 0});
  CHECK(i2[1] == IndexTuple{2, 0, 0});

  CHECK_THROWS_AS(enumerate_index_set(0), std::invalid_argument);
}

TEST_CASE("index sets: matches brute-force oracle, lexicographic order") {
  for (int n = 1; n <= 8; ++n) {
    const auto got = enumerate_index_set(n);
    const auto want = brute_force_index_set(n);
    CHECK(got == want);  // oracle output is sorted; equality checks order too
  }
}

TEST_CASE("index sets: tail positions vanish (property)") {
  for (int n = 1; n <= 10; ++n) {
    for (const IndexTuple& t : enumerate_index_set(n)) {
      int total = 0;
      for (std::size_t m = 0; m < t.size(); ++m) total += (m == 0 ? 1 : static_cast<int>(m)) * t[m];
      CHECK(total == n);
      for (std::size_t m = 0; m < t.size(); ++m) {
        if (2 * m > static_cast<std::size_t>(n)) CHECK(t[m] == 0);
      }
    }
  }
}

TEST_CASE("index formula: reproduces the recursive exponents") {
  SeriesEngine engine;
  engine.exponent(7);
  std::vector<LiePolynomial> prior;
  // C_{n+1} from C_2..C_n: check degrees 2..7 (n = 1..6).
  for (int n = 1; n <= 6; ++n) {
    const LiePolynomial direct = term_via_index_formula(n, prior);
    CHECK(direct == engine.exponent(n + 1));
    prior.push_back(engine.exponent(n + 1));
  }
  CHECK_THROWS_AS(term_via_index_formula(5, std::vector<LiePolynomial>{}), std::invalid_argument);
}

TEST_CASE("index formula: series overload") {
  const ZassenhausSeries s = zassenhaus_series(5);
  CHECK(term_via_index_formula(5, s) == zassenhaus_series(6).exponent(6));
}

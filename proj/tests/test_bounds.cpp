#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "esz/bounds.hpp"
#include "esz/errors.hpp"

using namespace esz;

TEST_CASE("binomials and the zero convention") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(2, -1) == 0);
  CHECK(binom(2, 3) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(7, 4) == 35);  // C(2n-5, n-2) at n = 6
  CHECK(binom(0, 0) == 1);
}

TEST_CASE("f(n,m) values") {
  CHECK(f_cupcap(3, 3) == 2);
  CHECK(f_cupcap(4, 4) == 6);
  CHECK(f_cupcap(5, 5) == 20);
  CHECK(f_cupcap(5, 4) == 10);
  CHECK_THROWS_AS(f_cupcap(2, 5), InputError);
}

TEST_CASE("w family values") {
  CHECK(w(4, 4, 4) == 4);  // 1 + 1 + 2
  CHECK(w(5, 4, 4) == 0);  // k < i
  CHECK(w(5, 4, 5) == 4);  // 4 * C(0,0)
  CHECK(w(4, 6, 4) == 11);
  CHECK_THROWS_AS(w(3, 4, 4), InputError);
}

TEST_CASE("g series values") {
  CHECK(g_series(4, 5) == 8);
  CHECK(g_series(5, 5) == 15);  // 11 + 4
  CHECK(g_series(6, 4) == 11);
  for (int m = 4; m <= 20; ++m) CHECK(g_series(m, 4) == binom(m, 2) - m + 2);
}

TEST_CASE("g closed form and equivalence with the series") {
  CHECK(g_closed(4, 5) == 8);  // 10 - 3 + 1
  for (int m = 4; m <= 20; ++m) CHECK(g_closed(m, 5) == binom(m, 3) + m);
  for (int m = 4; m <= 40; ++m)
    for (int l = 5; l <= 40; ++l) CHECK(g_series(m, l) == g_closed(m, l));
  // The l = 4 extension under the binomial zero convention.
  for (int m = 4; m <= 40; ++m) CHECK(g_closed(m, 4) == g_series(m, 4));
}

TEST_CASE("the appendix text understates g(m,5)") {
  // Exact evaluation gives g(m,5) = C(m,3) + m, not C(m,3); the computed
  // identity is recorded here so the discrepancy stays visible.
  for (int m = 4; m <= 20; ++m) {
    CHECK(g_closed(m, 5) == binom(m, 3) + m);
    CHECK(g_closed(m, 5) != binom(m, 3));
  }
}

TEST_CASE("pascal recurrences hold on the grid") {
  CHECK(pascal_recurrence_check(RecurrenceKind::GSeries, 4, 40, 4, 40));
  CHECK(pascal_recurrence_check(RecurrenceKind::GClosed, 4, 40, 5, 40));
  CHECK(pascal_recurrence_check(RecurrenceKind::FCupCap, 3, 40, 3, 40));
}

TEST_CASE("new upper bound values and the two-form identity") {
  CHECK(new_upper_bound(6) == 33);   // 20 + 11 + 2 and 35 - 4 + 0 + 2
  CHECK(new_upper_bound(7) == 114);  // 126 - 15 + 1 + 2
  for (int n = 6; n <= 500; ++n) {
    const Integer nb = new_upper_bound(n);  // asserts the identity internally
    CHECK(nb < prior_bounds(n).toth_valtr_2005);
  }
  CHECK_THROWS_AS(new_upper_bound(5), InputError);
}

TEST_CASE("prior bounds and their ordering") {
  CHECK(prior_bounds(5).erdos_szekeres == 21);
  CHECK(prior_bounds(6).toth_valtr_2005 == 36);
  for (int n = 6; n <= 500; ++n) {
    const PriorBounds p = prior_bounds(n);
    CHECK(p.erdos_szekeres >= p.chung_graham);
    CHECK(p.chung_graham >= p.kleitman_pachter);
    CHECK(p.kleitman_pachter >= p.toth_valtr_1998);
    CHECK(p.toth_valtr_1998 >= p.toth_valtr_2005);
    CHECK(p.toth_valtr_2005 >= new_upper_bound(n));
  }
}

TEST_CASE("limit constants of the ratio terms") {
  CHECK(g_ratio_term(5, 10).limit == Rational(1, 16));  // 4/64
  CHECK(g_ratio_term(4, 10).limit == Rational(1, 4));   // 1/8 + 1/16 + 2/32
  // Tail of the series: sum_{i>=5} (i-1)/2^(i+1) = 5/32.
  CHECK(w_limit_tail(5) == Rational(5, 32));
  CHECK(Rational(1, 4) + w_limit_tail(5) == Rational(13, 32));
  CHECK(Rational(1, 2) + Rational(13, 32) == Rational(29, 32));
  // Telescoping partial sums: sum_{i=5..L} (i-1)/2^(i+1) + (L+1)/2^(L+1) = 5/32.
  for (int L = 5; L <= 60; ++L) {
    Rational partial(0);
    for (int i = 5; i <= L; ++i) partial += Rational(i - 1, pow(Integer(2), static_cast<unsigned>(i + 1)));
    CHECK(partial + w_limit_tail(L + 1) == Rational(5, 32));
  }
}

TEST_CASE("ratio approaches 29/32") {
  // ratio(10^4) computed exactly: the gap to 29/32 is about -7.81e-6, well
  // inside the pinned 1e-3 tolerance, and |gap| shrinks along the grid.
  const Rational target(29, 32);
  Rational prev_gap;
  bool first = true;
  for (const int n : {50, 100, 200, 400, 800, 1600}) {
    Rational gap = bound_ratio(n) - target;
    if (gap < 0) gap = -gap;
    if (!first) CHECK(gap < prev_gap);
    prev_gap = gap;
    first = false;
    CHECK(bound_ratio(n) < target + Rational(1, 100));
  }
}

TEST_CASE("ratio at n = 10000 is within the pinned tolerance") {
  Rational gap = bound_ratio(10000) - Rational(29, 32);
  if (gap < 0) gap = -gap;
  CHECK(gap < Rational(1, 1000));
  CHECK(gap > Rational(1, 1000000));  // sanity: the bound is not trivially 29/32
}

TEST_CASE("finite ratio terms approach their limits") {
  for (const int i : {4, 5, 6, 7}) {
    Rational prev_gap;
    bool first = true;
    for (const int n : {60, 120, 240, 480}) {
      const GRatioTerm t = g_ratio_term(i, n);
      Rational gap = t.finite - t.limit;
      if (gap < 0) gap = -gap;
      if (!first) CHECK(gap < prev_gap);
      prev_gap = gap;
      first = false;
    }
  }
}

TEST_CASE("bound table rows and CSV shape") {
  const auto rows = bound_table(6, 6);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].new_bound == 33);
  CHECK(rows[0].prior.toth_valtr_2005 == 36);
  CHECK(rows[0].g_n_nm2 == 11);
  const std::string csv = bound_table_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);  // header + one data row
}

TEST_CASE("decimal rendering of rationals") {
  CHECK(rational_to_decimal(Rational(1, 2), 5) == "0.5");
  CHECK(rational_to_decimal(Rational(29, 32), 10) == "0.90625");
  CHECK(rational_to_decimal(Rational(-7, 4), 10) == "-1.75");
  CHECK(rational_to_decimal(Rational(1000), 4) == "1000");
  CHECK(rational_to_decimal(Rational(2, 3), 6) == "0.666667");
  CHECK(rational_to_decimal(Rational(0), 7) == "0");
}

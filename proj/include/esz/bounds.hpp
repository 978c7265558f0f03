#pragma once

#include <vector>

#include "esz/numbers.hpp"

namespace esz {

// C(a, b) with the convention C(a, b) = 0 for b < 0, b > a, or a < 0. The
// zero convention is what lets the closed g-form hold at small arguments
// (e.g. C(2n-10, n-7) at n = 6) and at l = 4.
Integer binom(long long a, long long b);

// Largest size of a set with no n-cup and no m-cap: C(m+n-4, n-2).
// Requires n, m >= 3.
Integer f_cupcap(int n, int m);

// The w_i family. Requires i >= 4, m >= 4, k >= 4.
//   w_4(m,k) = C(m+k-6, k-2) + C(m+k-7, k-3) + 2 C(m+k-8, k-4)
//   w_i(m,k) = (i-1) C(m+k-i-4, k-i) for i >= 5, k >= i; 0 for k < i.
Integer w(int i, int m, int k);

// Series form: sum of w_i(m, l) for i >= 4; terms vanish above i = l, so the
// sum is evaluated exactly up to l. Requires m, l >= 4.
Integer g_series(int m, int l);

// Closed form: f(m,l) - C(m+l-6, l-3) + C(m+l-8, l-5). Requires m >= 4 and
// l >= 4 (the binomial zero-convention extends the stated l >= 5 domain down
// to l = 4, where the value matches w_4(m, 4)).
Integer g_closed(int m, int l);

// C(2n-6, n-3) + g(n, n-2) + 2, asserted internally against the closed form
// C(2n-5,n-2) - C(2n-8,n-5) + C(2n-10,n-7) + 2. Requires n >= 6; throws
// InternalError("IdentityViolation") if the two forms ever disagree.
Integer new_upper_bound(int n);

// Exact new_upper_bound(n) / C(2n-5, n-2).
Rational bound_ratio(int n);

struct GRatioTerm {
  Rational finite;  // w(i, n, n-2) / C(2n-5, n-2)
  Rational limit;   // 1/4 for i = 4, (i-1)/2^(i+1) for i >= 5
};
GRatioTerm g_ratio_term(int i, int n);

// Exact tail sum_{i >= from} (i-1)/2^(i+1) = from / 2^from (for from >= 2).
Rational w_limit_tail(int from);

struct PriorBounds {
  Integer erdos_szekeres;   // C(2n-4, n-2) + 1
  Integer chung_graham;     // C(2n-4, n-2)
  Integer kleitman_pachter; // C(2n-4, n-2) - 2n + 7
  Integer toth_valtr_1998;  // C(2n-5, n-2) + 2
  Integer toth_valtr_2005;  // C(2n-5, n-2) + 1
};
PriorBounds prior_bounds(int n);  // requires n >= 5

enum class RecurrenceKind { GSeries, GClosed, FCupCap };

// True iff x(m+1, l+1) = x(m+1, l) + x(m, l+1) holds exactly for all
// (m, l) in the given inclusive ranges.
bool pascal_recurrence_check(RecurrenceKind kind, int m_lo, int m_hi, int l_lo, int l_hi);

struct BoundRow {
  int n;
  Integer f_cupcap_n_nm2;  // f(n, n-2)
  Integer g_n_nm2;         // g(n, n-2)
  Integer new_bound;
  PriorBounds prior;
  Rational ratio;
};
std::vector<BoundRow> bound_table(int n_from, int n_to);
std::string bound_table_csv(const std::vector<BoundRow>& rows);

}  // namespace esz

#include "esz/bounds.hpp"

#include <sstream>

#include "esz/errors.hpp"

namespace esz {

Integer binom(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Integer result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

Integer f_cupcap(int n, int m) {
  if (n < 3 || m < 3) throw domain_error("f(n,m) requires n, m >= 3");
  return binom(m + n - 4, n - 2);
}

Integer w(int i, int m, int k) {
  if (i < 4 || m < 4 || k < 4) throw domain_error("w_i(m,k) requires i, m, k >= 4");
  if (i == 4) return binom(m + k - 6, k - 2) + binom(m + k - 7, k - 3) + 2 * binom(m + k - 8, k - 4);
  if (k < i) return 0;
  return Integer(i - 1) * binom(m + k - i - 4, k - i);
}

Integer g_series(int m, int l) {
  if (m < 4 || l < 4) throw domain_error("g(m,l) requires m, l >= 4");
  Integer total = w(4, m, l);
  // Incremental tail: T(i) = C(m+l-i-4, l-i) and
  // T(i+1) = T(i) * (l-i) / (m+l-i-4); the division is exact.
  Integer t = binom(m + l - 9, l - 5);
  for (int i = 5; i <= l; ++i) {
    total += Integer(i - 1) * t;
    if (i < l) {
      t *= l - i;
      t /= m + l - i - 4;
    }
  }
  return total;
}

Integer g_closed(int m, int l) {
  if (m < 4 || l < 4) throw domain_error("g(m,l) requires m, l >= 4");
  return f_cupcap(m, l) - binom(m + l - 6, l - 3) + binom(m + l - 8, l - 5);
}

Integer new_upper_bound(int n) {
  if (n < 6) throw domain_error("new upper bound requires n >= 6");
  const Integer via_g = binom(2 * n - 6, n - 3) + g_series(n, n - 2) + 2;
  const Integer closed = binom(2 * n - 5, n - 2) - binom(2 * n - 8, n - 5) + binom(2 * n - 10, n - 7) + 2;
  if (via_g != closed)
    throw InternalError("IdentityViolation", "upper-bound forms disagree at n = " + std::to_string(n) + ": " +
                                                 via_g.str() + " vs " + closed.str());
  return via_g;
}

Rational bound_ratio(int n) { return Rational(new_upper_bound(n), binom(2 * n - 5, n - 2)); }

GRatioTerm g_ratio_term(int i, int n) {
  if (i < 4) throw domain_error("g ratio term requires i >= 4");
  if (n < 6 || n < i) throw domain_error("g ratio term requires n >= max(i, 6)");
  GRatioTerm out;
  out.finite = Rational(w(i, n, n - 2), binom(2 * n - 5, n - 2));
  if (i == 4)
    out.limit = Rational(1, 4);
  else
    out.limit = Rational(i - 1, pow(Integer(2), static_cast<unsigned>(i + 1)));
  return out;
}

Rational w_limit_tail(int from) {
  if (from < 2) throw domain_error("tail sum needs from >= 2");
  return Rational(from, pow(Integer(2), static_cast<unsigned>(from)));
}

PriorBounds prior_bounds(int n) {
  if (n < 5) throw domain_error("prior bounds tabulated for n >= 5");
  PriorBounds p;
  const Integer wide = binom(2 * n - 4, n - 2);
  const Integer narrow = binom(2 * n - 5, n - 2);
  p.erdos_szekeres = wide + 1;
  p.chung_graham = wide;
  p.kleitman_pachter = wide - 2 * n + 7;
  p.toth_valtr_1998 = narrow + 2;
  p.toth_valtr_2005 = narrow + 1;
  return p;
}

bool pascal_recurrence_check(RecurrenceKind kind, int m_lo, int m_hi, int l_lo, int l_hi) {
  const auto value = [kind](int m, int l) {
    switch (kind) {
      case RecurrenceKind::GSeries:
        return g_series(m, l);
      case RecurrenceKind::GClosed:
        return g_closed(m, l);
      case RecurrenceKind::FCupCap:
        return f_cupcap(m, l);
    }
    throw domain_error("unknown recurrence kind");
  };
  for (int m = m_lo; m <= m_hi; ++m)
    for (int l = l_lo; l <= l_hi; ++l)
      if (value(m + 1, l + 1) != value(m + 1, l) + value(m, l + 1)) return false;
  return true;
}

std::vector<BoundRow> bound_table(int n_from, int n_to) {
  if (n_from < 6 || n_to < n_from) throw domain_error("bound table requires 6 <= n_from <= n_to");
  std::vector<BoundRow> rows;
  rows.reserve(static_cast<size_t>(n_to - n_from + 1));
  for (int n = n_from; n <= n_to; ++n) {
    BoundRow r;
    r.n = n;
    r.f_cupcap_n_nm2 = f_cupcap(n, n - 2);
    r.g_n_nm2 = g_series(n, n - 2);
    r.new_bound = new_upper_bound(n);
    r.prior = prior_bounds(n);
    r.ratio = bound_ratio(n);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string bound_table_csv(const std::vector<BoundRow>& rows) {
  std::ostringstream os;
  os << "n,erdos_szekeres,chung_graham,kleitman_pachter,toth_valtr_1998,toth_valtr_2005,"
        "f_cupcap_n_nminus2,g_n_nminus2,new_bound,ratio_decimal,ratio_exact\n";
  for (const BoundRow& r : rows) {
    os << r.n << "," << r.prior.erdos_szekeres.str() << "," << r.prior.chung_graham.str() << ","
       << r.prior.kleitman_pachter.str() << "," << r.prior.toth_valtr_1998.str() << ","
       << r.prior.toth_valtr_2005.str() << "," << r.f_cupcap_n_nm2.str() << "," << r.g_n_nm2.str() << ","
       << r.new_bound.str() << "," << rational_to_decimal(r.ratio, 40) << "," << rational_to_string(r.ratio)
       << "\n";
  }
  return os.str();
}

}  // namespace esz

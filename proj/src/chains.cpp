#include "esz/chains.hpp"

#include <algorithm>

#include "esz/errors.hpp"

namespace esz {
namespace {

void require_increasing(const std::vector<int>& indices, int n) {
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= n) throw domain_error("chain index out of range");
    if (i > 0 && indices[i] <= indices[i - 1]) throw domain_error("chain indices must be strictly increasing");
  }
}

}  // namespace

std::string chain_kind_name(ChainKind k) {
  switch (k) {
    case ChainKind::Cup:
      return "cup";
    case ChainKind::Cap:
      return "cap";
    case ChainKind::CupAndCap:
      return "cup+cap";
    case ChainKind::Neither:
      return "neither";
  }
  return "?";
}

ChainKind classify_chain(const PointSet& set, const std::vector<int>& indices) {
  require_increasing(indices, set.size());
  if (indices.size() <= 2) return ChainKind::CupAndCap;
  bool cup = true, cap = true;
  for (size_t t = 0; t + 2 < indices.size(); ++t) {
    const int s = set.ori(indices[t], indices[t + 1], indices[t + 2]);
    if (s <= 0) cup = false;
    if (s >= 0) cap = false;
  }
  if (cup) return ChainKind::Cup;
  if (cap) return ChainKind::Cap;
  return ChainKind::Neither;
}

namespace detail {

std::vector<int> chain_start_table(const PointSet& set, int dir) {
  const int n = set.size();
  set.ensure_orientation_table();
  std::vector<int> e(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  const auto at = [n](int a, int b) { return static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b); };
  for (int a = n - 2; a >= 0; --a)
    for (int b = a + 1; b < n; ++b) {
      int best = 2;
      for (int c = b + 1; c < n; ++c)
        if (set.ori(a, b, c) == dir && e[at(b, c)] + 1 > best) best = e[at(b, c)] + 1;
      e[at(a, b)] = best;
    }
  return e;
}

std::vector<int> chain_end_table(const PointSet& set, int dir) {
  const int n = set.size();
  set.ensure_orientation_table();
  std::vector<int> f(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  const auto at = [n](int a, int b) { return static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b); };
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a) {
      int best = 2;
      for (int h = 0; h < a; ++h)
        if (set.ori(h, a, b) == dir && f[at(h, a)] + 1 > best) best = f[at(h, a)] + 1;
      f[at(a, b)] = best;
    }
  return f;
}

ChainSearch longest_chain(const PointSet& set, int dir) {
  const int n = set.size();
  const ChainKind kind = dir > 0 ? ChainKind::Cup : ChainKind::Cap;
  if (n == 0) return {0, {{}, kind}};
  if (n == 1) return {1, {{0}, ChainKind::CupAndCap}};

  const std::vector<int> e = chain_start_table(set, dir);
  const auto at = [n](int a, int b) { return static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b); };
  int best = 2;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) best = std::max(best, e[at(a, b)]);

  // Greedy lexicographically smallest witness; the table certifies that each
  // greedy choice still reaches the maximum length.
  std::vector<int> w;
  for (int a = 0; a < n && w.empty(); ++a)
    for (int b = a + 1; b < n; ++b)
      if (e[at(a, b)] == best) {
        w = {a, b};
        break;
      }
  while (static_cast<int>(w.size()) < best) {
    const int a = w[w.size() - 2], b = w.back();
    const int remaining = best - static_cast<int>(w.size());
    for (int c = b + 1; c < n; ++c)
      if (set.ori(a, b, c) == dir && e[at(b, c)] == remaining + 1) {
        w.push_back(c);
        break;
      }
  }
  return {best, {std::move(w), best <= 2 ? ChainKind::CupAndCap : kind}};
}

}  // namespace detail

ChainSearch longest_cup(const PointSet& set) { return detail::longest_chain(set, +1); }
ChainSearch longest_cap(const PointSet& set) { return detail::longest_chain(set, -1); }

bool is_convex_position(const PointSet& set, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  const int k = static_cast<int>(indices.size());
  if (k <= 2) return true;
  // Monotone chain over the already x-sorted subset; count hull vertices.
  std::vector<int> lower, upper;
  for (int t = 0; t < k; ++t) {
    const int i = indices[static_cast<size_t>(t)];
    while (lower.size() >= 2 && set.ori(lower[lower.size() - 2], lower.back(), i) <= 0) lower.pop_back();
    lower.push_back(i);
  }
  for (int t = k - 1; t >= 0; --t) {
    const int i = indices[static_cast<size_t>(t)];
    while (upper.size() >= 2 && set.ori(upper[upper.size() - 2], upper.back(), i) <= 0) upper.pop_back();
    upper.push_back(i);
  }
  return static_cast<int>(lower.size() + upper.size()) - 2 == k;
}

ConvexSearch largest_convex_subset(const PointSet& set) {
  const int n = set.size();
  if (n == 0) return {0, {}};
  if (n == 1) return {1, {{0}}};
  if (n == 2) return {2, {{0, 1}}};
  set.ensure_orientation_table();

  const auto at = [n](int a, int b) { return static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b); };
  std::vector<int> cup(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<int> cap(static_cast<size_t>(n) * static_cast<size_t>(n));

  // For a fixed left endpoint L, dp[b][c] is the longest cup (resp. cap)
  // that starts at L and currently ends with the edge (b, c).
  const auto fill = [&](int L, int dir, std::vector<int>& dp) {
    for (int c = L + 1; c < n; ++c)
      for (int b = L; b < c; ++b) {
        if (b == L) {
          dp[at(b, c)] = 2;
          continue;
        }
        int best = 0;
        for (int a = L; a < b; ++a)
          if (dp[at(a, b)] > 0 && set.ori(a, b, c) == dir && dp[at(a, b)] + 1 > best) best = dp[at(a, b)] + 1;
        dp[at(b, c)] = best;
      }
  };

  int best_size = 3;  // any 3 points of a general-position set form a triangle
  int best_L = -1, best_R = -1;
  for (int L = 0; L + 1 < n; ++L) {
    std::fill(cup.begin(), cup.end(), 0);
    std::fill(cap.begin(), cap.end(), 0);
    fill(L, +1, cup);
    fill(L, -1, cap);
    for (int R = L + 1; R < n; ++R) {
      int mc = 0, mk = 0;
      for (int b = L; b < R; ++b) {
        mc = std::max(mc, cup[at(b, R)]);
        mk = std::max(mk, cap[at(b, R)]);
      }
      if (mc >= 2 && mk >= 2 && mc + mk - 2 > best_size) {
        best_size = mc + mk - 2;
        best_L = L;
        best_R = R;
      }
    }
  }

  if (best_L < 0) {
    // No pair beats a bare triangle; take the lexicographically first one.
    return {3, {{0, 1, 2}}};
  }

  // Witness extraction for the chosen endpoints: suffix tables s[b][c] =
  // longest chain starting with (b, c) and ending exactly at R.
  const int L = best_L, R = best_R;
  std::vector<int> scup(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  std::vector<int> scap(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  const auto fill_suffix = [&](int dir, std::vector<int>& s) {
    for (int b = L; b < R; ++b) s[at(b, R)] = 2;
    for (int b = R - 1; b > L; --b)
      for (int a = L; a < b; ++a) {
        int best = 0;
        for (int c = b + 1; c <= R; ++c)
          if (s[at(b, c)] > 0 && set.ori(a, b, c) == dir && s[at(b, c)] + 1 > best) best = s[at(b, c)] + 1;
        if (s[at(a, b)] < best) s[at(a, b)] = best;
      }
  };
  fill_suffix(+1, scup);
  fill_suffix(-1, scap);

  const auto extract = [&](int dir, const std::vector<int>& s, int want) {
    std::vector<int> chain{L};
    if (want == 2) {
      chain.push_back(R);
      return chain;
    }
    int first = -1;
    for (int j = L + 1; j < R && first < 0; ++j)
      if (s[at(L, j)] == want) first = j;
    chain.push_back(first);
    while (chain.back() != R) {
      const int a = chain[chain.size() - 2], b = chain.back();
      const int remaining = want - static_cast<int>(chain.size());
      for (int c = b + 1; c <= R; ++c)
        if (set.ori(a, b, c) == dir && s[at(b, c)] == remaining + 1) {
          chain.push_back(c);
          break;
        }
    }
    return chain;
  };

  int mc = 0, mk = 0;
  for (int j = L + 1; j <= R; ++j) {
    mc = std::max(mc, scup[at(L, j)]);
    mk = std::max(mk, scap[at(L, j)]);
  }
  const std::vector<int> lower = extract(+1, scup, mc);
  const std::vector<int> upper = extract(-1, scap, mk);

  std::vector<int> merged = lower;
  merged.insert(merged.end(), upper.begin(), upper.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return {best_size, {std::move(merged)}};
}

namespace {

// Exhaustive helpers. These deliberately avoid the DP code paths: cups and
// caps come from plain chain DFS, convex position from the Caratheodory
// criterion (a subset is convex iff no member lies in a triangle of three
// others).

bool dfs_chain(const PointSet& set, int dir, int k, std::vector<int>& chain, int next_from) {
  if (static_cast<int>(chain.size()) == k) return true;
  for (int c = next_from; c < set.size(); ++c) {
    if (chain.size() >= 2 && set.ori(chain[chain.size() - 2], chain.back(), c) != dir) continue;
    chain.push_back(c);
    if (dfs_chain(set, dir, k, chain, c + 1)) return true;
    chain.pop_back();
  }
  return false;
}

std::vector<char> bad_quad_table(const PointSet& set) {
  // Masks (n <= 20 here) of 4-subsets where one point lies inside the
  // triangle of the other three.
  const int n = set.size();
  std::vector<char> bad(static_cast<size_t>(1) << n, 0);
  set.ensure_orientation_table();
  const auto inside = [&](int p, int a, int b, int c) {
    const int s1 = set.ori(a, b, p), s2 = set.ori(b, c, p), s3 = set.ori(c, a, p);
    return s1 != 0 && s1 == s2 && s2 == s3;
  };
  std::vector<int> q(4);
  for (q[0] = 0; q[0] < n; ++q[0])
    for (q[1] = q[0] + 1; q[1] < n; ++q[1])
      for (q[2] = q[1] + 1; q[2] < n; ++q[2])
        for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
          bool b = false;
          for (int t = 0; t < 4 && !b; ++t)
            b = inside(q[static_cast<size_t>(t)], q[(t + 1) % 4], q[(t + 2) % 4], q[(t + 3) % 4]);
          if (b)
            bad[(1u << q[0]) | (1u << q[1]) | (1u << q[2]) | (1u << q[3])] = 1;
        }
  return bad;
}

bool dfs_convex(const std::vector<char>& bad, int n, int k, std::vector<int>& chosen, int next_from) {
  if (static_cast<int>(chosen.size()) == k) return true;
  for (int c = next_from; c < n; ++c) {
    bool ok = true;
    const int m = static_cast<int>(chosen.size());
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j)
        for (int l = j + 1; l < m && ok; ++l)
          if (bad[(1u << chosen[static_cast<size_t>(i)]) | (1u << chosen[static_cast<size_t>(j)]) |
                  (1u << chosen[static_cast<size_t>(l)]) | (1u << c)])
            ok = false;
    if (!ok) continue;
    chosen.push_back(c);
    if (dfs_convex(bad, n, k, chosen, c + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool brute_force_oracle(const PointSet& set, OracleTarget target, int k, int size_guard) {
  const int n = set.size();
  if (n > size_guard) throw size_guard_error(n, size_guard);
  if (k <= 0) return true;
  if (k > n) return false;
  if (k <= 2) return true;
  set.ensure_orientation_table();
  if (target == OracleTarget::Cup || target == OracleTarget::Cap) {
    std::vector<int> chain;
    return dfs_chain(set, target == OracleTarget::Cup ? +1 : -1, k, chain, 0);
  }
  const std::vector<char> bad = bad_quad_table(set);
  std::vector<int> chosen;
  return dfs_convex(bad, n, k, chosen, 0);
}

int brute_force_largest(const PointSet& set, OracleTarget target, int size_guard) {
  const int n = set.size();
  if (n > size_guard) throw size_guard_error(n, size_guard);
  for (int k = n; k >= 3; --k)
    if (brute_force_oracle(set, target, k, size_guard)) return k;
  return std::min(n, 2);
}

}  // namespace esz

#pragma once

#include <string>
#include <vector>

#include "esz/geometry.hpp"

namespace esz {

// Chains of length <= 2 count as both cups and caps; the DP recurrences and
// the extension lemmas stay uniform that way.
enum class ChainKind { Cup, Cap, CupAndCap, Neither };

std::string chain_kind_name(ChainKind k);

struct Chain {
  std::vector<int> indices;  // strictly increasing positions, x-order
  ChainKind kind = ChainKind::Neither;
};

struct ConvexWitness {
  std::vector<int> indices;  // ascending; every point a hull vertex when size >= 3
};

// Strictly increasing consecutive slopes -> Cup, strictly decreasing -> Cap.
// Requires distinct x and strictly increasing indices.
ChainKind classify_chain(const PointSet& set, const std::vector<int>& indices);

struct ChainSearch {
  int length = 0;
  Chain witness;  // lexicographically smallest among maximum-length chains
};

ChainSearch longest_cup(const PointSet& set);
ChainSearch longest_cap(const PointSet& set);

struct ConvexSearch {
  int size = 0;
  ConvexWitness witness;
};

// Maximum subset in convex position. With distinct x-coordinates a convex
// polygon splits at its leftmost/rightmost vertices into a cap (upper chain)
// and a cup (lower chain); the search maximizes cup+cap length over all
// endpoint pairs. Witness rule: smallest (leftmost, rightmost) pair achieving
// the maximum, then lexicographically smallest lower chain, then upper chain.
ConvexSearch largest_convex_subset(const PointSet& set);

// True iff the given points are all vertices of their common hull
// (trivially true for fewer than 3). Indices need not be sorted.
bool is_convex_position(const PointSet& set, std::vector<int> indices);

enum class OracleTarget { Cup, Cap, Convex };

// Ground truth by exhaustive enumeration, independent of the DP detectors.
// Throws SizeGuard when the set exceeds the guard.
bool brute_force_oracle(const PointSet& set, OracleTarget target, int k, int size_guard = 20);

// Largest k for which brute_force_oracle holds; same guard semantics.
int brute_force_largest(const PointSet& set, OracleTarget target, int size_guard = 20);

namespace detail {

// Longest cup/cap beginning with the pair (i, j), as a flat n*n table of
// lengths (0 for unused cells). dir = +1 builds cups, -1 caps.
std::vector<int> chain_start_table(const PointSet& set, int dir);
// Longest cup/cap ending with the pair (i, j).
std::vector<int> chain_end_table(const PointSet& set, int dir);

// Lexicographically smallest maximum chain extracted from a start table.
ChainSearch longest_chain(const PointSet& set, int dir);

}  // namespace detail

}  // namespace esz

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "esz/geometry.hpp"

namespace esz {

// Exactly C(m+n-4, n-2) points in general position with distinct x, free of
// n-cups and m-caps. Requires n, m >= 3. The output is certified by the chain
// detectors before it is returned; a certification failure aborts via
// InternalError (a construction bug, never expected).
PointSet cupcap_extremal(int n, int m);

// Exactly 2^(n-2) points in general position whose largest convex subset has
// n-1 points: the union of n-1 extremal blocks on a steep convex arc.
// Requires n >= 3. Certified (size; no convex n-gon) before return.
PointSet es_lower_bound(int n);

// Uniform points on the integer grid [0, 10^6]^2, resampled until the set
// validates (general position, distinct x). Deterministic per seed.
PointSet random_point_set(int size, std::uint64_t seed);

struct RandomFreeResult {
  std::vector<PointSet> sets;
  long attempts = 0;
  double acceptance_rate = 0.0;
};

// Rejection-samples `count` sets of the given size certified to contain no
// n_cup-cup and no m_cap-cap. Throws InputError("InfeasibleSize") when size
// exceeds f(n_cup, m_cap) and InputError("SamplerExhausted") when the attempt
// budget runs out.
RandomFreeResult random_free(int n_cup, int m_cap, int size, int count, std::uint64_t seed,
                             long attempt_budget_per_set = 200000);

// Replay header lines ("generator: ...", "seed: ...") for emitted files.
std::vector<std::string> generator_header(const std::string& spec);

}  // namespace esz

#include "esz/constructions.hpp"

#include <algorithm>
#include <random>

#include "esz/bounds.hpp"
#include "esz/chains.hpp"
#include "esz/errors.hpp"

namespace esz {
namespace {

struct Box {
  Rational xlo, xhi, ylo, yhi;
};

Box bbox(const std::vector<Point>& pts) {
  Box b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
  for (const Point& p : pts) {
    b.xlo = std::min(b.xlo, p.x);
    b.xhi = std::max(b.xhi, p.x);
    b.ylo = std::min(b.ylo, p.y);
    b.yhi = std::max(b.yhi, p.y);
  }
  return b;
}

// Upper bound on |slope| over all pairs: y-span / min x-gap.
Rational slope_bound(const std::vector<Point>& pts) {
  if (pts.size() < 2) return Rational(0);
  std::vector<Rational> xs;
  xs.reserve(pts.size());
  for (const Point& p : pts) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  Rational min_gap = xs.back() - xs.front();
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational gap = xs[i + 1] - xs[i];
    if (gap < min_gap) min_gap = gap;
  }
  const Box b = bbox(pts);
  const Rational yspan = b.yhi - b.ylo;
  if (min_gap <= 0) throw InternalError("ConstructionBug", "duplicate x inside a construction group");
  return yspan / min_gap;
}

void translate(std::vector<Point>& pts, const Rational& dx, const Rational& dy) {
  for (Point& p : pts) {
    p.x += dx;
    p.y += dy;
  }
}

std::vector<Point> cupcap_points(int n, int m) {
  // f(2, m) = f(n, 2) = 1: a single point has no 2-cup and no 2-cap.
  if (n == 2 || m == 2) return {{Rational(0), Rational(0)}};
  if (n == 3) {
    // An (m-1)-cap on the parabola y = -x^2: no 3-cup, no m-cap.
    std::vector<Point> pts;
    for (int i = 0; i < m - 1; ++i) pts.push_back({Rational(i), Rational(-static_cast<long long>(i) * i)});
    return pts;
  }
  if (m == 3) {
    std::vector<Point> pts;
    for (int i = 0; i < n - 1; ++i) pts.push_back({Rational(i), Rational(static_cast<long long>(i) * i)});
    return pts;
  }

  // Left group free of (n-1)-cups, right group free of (m-1)-caps; every
  // cross slope strictly exceeds every within-group slope, so a cup crosses
  // over at most once (left part + one right point) and a cap uses at most
  // one left point.
  std::vector<Point> left = cupcap_points(n - 1, m);
  std::vector<Point> right = cupcap_points(n, m - 1);
  const Box bl = bbox(left);
  translate(left, -bl.xlo, Rational(0));
  const Box bl2 = bbox(left);
  const Box br = bbox(right);
  translate(right, bl2.xhi + 1 - br.xlo, Rational(0));
  const Box br2 = bbox(right);

  const Rational sigma = std::max(slope_bound(left), slope_bound(right));
  const Rational width = br2.xhi - bl2.xlo;
  const Rational dy = sigma * width + (bl2.yhi - br2.ylo) + 1;
  translate(right, Rational(0), dy);

  left.insert(left.end(), right.begin(), right.end());
  return left;
}

void certify_cupcap(const PointSet& s, int n, int m) {
  const Integer want = f_cupcap(n, m);
  if (Integer(s.size()) != want)
    throw InternalError("ConstructionBug", "cupcap_extremal size mismatch");
  if (!validate(s).ok()) throw InternalError("ConstructionBug", "cupcap_extremal failed validation");
  if (longest_cup(s).length >= n) throw InternalError("ConstructionBug", "cupcap_extremal contains an n-cup");
  if (longest_cap(s).length >= m) throw InternalError("ConstructionBug", "cupcap_extremal contains an m-cap");
}

}  // namespace

PointSet cupcap_extremal(int n, int m) {
  if (n < 3 || m < 3) throw domain_error("cupcap_extremal requires n, m >= 3");
  PointSet s(cupcap_points(n, m));
  certify_cupcap(s, n, m);
  return s;
}

PointSet es_lower_bound(int n) {
  if (n < 3) throw domain_error("es_lower_bound requires n >= 3");

  std::vector<std::vector<Point>> blocks;
  Rational sigma(0);
  for (int i = 0; i <= n - 2; ++i) {
    std::vector<Point> b = cupcap_points(i + 2, n - i);
    const Box bb = bbox(b);
    translate(b, -bb.xlo, -bb.ylo);
    sigma = std::max(sigma, slope_bound(b));
    blocks.push_back(std::move(b));
  }

  // Blocks along a steep convex arc: every cross slope exceeds every
  // within-block slope, and slopes into each later block exceed all cross
  // slopes among earlier ones. A cup then takes a cup inside one block plus
  // one point per later block; a cap takes one earlier point plus a cap
  // inside one block.
  std::vector<Point> all = blocks[0];
  Rational m_bound = sigma + 1;  // strict upper bound on all slopes seen so far
  for (size_t j = 1; j < blocks.size(); ++j) {
    const Box cur = bbox(all);
    std::vector<Point>& b = blocks[j];
    const Box bb = bbox(b);
    const Rational x_off = cur.xhi + 1;
    const Rational total_width = x_off + (bb.xhi - bb.xlo) - cur.xlo;
    const Rational y_off = m_bound * total_width + cur.yhi + 1;
    translate(b, x_off, y_off);
    const Box placed = bbox(b);
    // Every incoming slope is > m_bound; record the new worst case.
    const Rational cross_upper = (placed.yhi - cur.ylo) / 1;  // min dx is 1
    m_bound = std::max(m_bound, cross_upper) + 1;
    all.insert(all.end(), b.begin(), b.end());
  }

  PointSet s(std::move(all));
  const Integer want = pow(Integer(2), static_cast<unsigned>(n - 2));
  if (Integer(s.size()) != want) throw InternalError("ConstructionBug", "es_lower_bound size mismatch");
  if (!validate(s).ok()) throw InternalError("ConstructionBug", "es_lower_bound failed validation");
  const int largest = largest_convex_subset(s).size;
  if (largest != std::min(s.size(), n - 1))
    throw InternalError("ConstructionBug",
                        "es_lower_bound largest convex subset is " + std::to_string(largest));
  return s;
}

PointSet random_point_set(int size, std::uint64_t seed) {
  if (size < 1) throw domain_error("random_point_set requires size >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coord(0, 1000000);

  std::vector<long long> xs, ys;
  auto collinear = [&](size_t i, size_t j, long long cx, long long cy) {
    const long long c =
        (xs[j] - xs[i]) * (cy - ys[i]) - (ys[j] - ys[i]) * (cx - xs[i]);
    return c == 0;
  };
  while (static_cast<int>(xs.size()) < size) {
    const long long cx = coord(rng), cy = coord(rng);
    bool ok = true;
    for (size_t i = 0; i < xs.size() && ok; ++i)
      if (xs[i] == cx) ok = false;
    for (size_t i = 0; i < xs.size() && ok; ++i)
      for (size_t j = i + 1; j < xs.size() && ok; ++j)
        if (collinear(i, j, cx, cy)) ok = false;
    if (!ok) continue;
    xs.push_back(cx);
    ys.push_back(cy);
  }
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) pts.push_back({Rational(xs[static_cast<size_t>(i)]), Rational(ys[static_cast<size_t>(i)])});
  PointSet s(std::move(pts));
  if (!validate(s).ok()) throw InternalError("ConstructionBug", "random_point_set failed validation");
  return s;
}

namespace {

// Jitter an extremal template: freeness has strict-inequality slack, so small
// rational perturbations usually preserve it; the detectors certify anyway.
std::optional<PointSet> jittered_template(const PointSet& tmpl, int size, std::mt19937_64& rng,
                                          int magnitude_step) {
  const int tn = tmpl.size();
  std::vector<int> idx(static_cast<size_t>(tn));
  for (int i = 0; i < tn; ++i) idx[static_cast<size_t>(i)] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(static_cast<size_t>(size));

  Box b{tmpl[0].x, tmpl[0].x, tmpl[0].y, tmpl[0].y};
  for (int i = 0; i < tn; ++i) {
    b.xlo = std::min(b.xlo, tmpl[i].x);
    b.xhi = std::max(b.xhi, tmpl[i].x);
    b.ylo = std::min(b.ylo, tmpl[i].y);
    b.yhi = std::max(b.yhi, tmpl[i].y);
  }
  const Rational xspan = b.xhi - b.xlo;
  const Rational yspan = b.yhi - b.ylo;
  Rational span = xspan > yspan ? xspan : yspan;
  if (span < 1) span = 1;
  Integer divisor = 400;
  for (int i = 0; i < magnitude_step; ++i) divisor *= 4;
  const Rational unit = span / Rational(divisor * 1000000);

  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(size));
  for (const int i : idx)
    pts.push_back({tmpl[i].x + unit * Rational(num(rng)), tmpl[i].y + unit * Rational(num(rng))});
  PointSet s(std::move(pts));
  if (!validate(s).ok()) return std::nullopt;
  return s;
}

}  // namespace

RandomFreeResult random_free(int n_cup, int m_cap, int size, int count, std::uint64_t seed,
                             long attempt_budget_per_set) {
  if (n_cup < 3 || m_cap < 3) throw domain_error("random_free requires n_cup, m_cap >= 3");
  if (size < 1 || count < 1) throw domain_error("random_free requires size, count >= 1");
  if (Integer(size) > f_cupcap(n_cup, m_cap))
    throw InputError("InfeasibleSize", "no (" + std::to_string(n_cup) + "," + std::to_string(m_cap) +
                                           ")-free set of size " + std::to_string(size) + " exists; maximum is " +
                                           f_cupcap(n_cup, m_cap).str());

  const PointSet tmpl = cupcap_extremal(n_cup, m_cap);
  RandomFreeResult out;
  const long budget = attempt_budget_per_set * count;
  for (int k = 0; k < count; ++k) {
    bool done = false;
    for (long local = 0; !done; ++local) {
      if (out.attempts >= budget)
        throw InputError("SamplerExhausted", "random_free: attempt budget exhausted after " +
                                                 std::to_string(out.attempts) + " attempts, " +
                                                 std::to_string(k) + "/" + std::to_string(count) + " sets");
      ++out.attempts;
      std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(out.attempts)));
      std::optional<PointSet> cand;
      if (out.attempts % 2 == 0) {
        cand = random_point_set(size, derive_seed(seed ^ 0x5eedu, static_cast<std::uint64_t>(out.attempts)));
      } else {
        cand = jittered_template(tmpl, size, rng, static_cast<int>(local % 4));
      }
      if (!cand) continue;
      if (longest_cup(*cand).length >= n_cup) continue;
      if (longest_cap(*cand).length >= m_cap) continue;
      out.sets.push_back(std::move(*cand));
      done = true;
    }
  }
  out.acceptance_rate = static_cast<double>(count) / static_cast<double>(out.attempts);
  return out;
}

std::vector<std::string> generator_header(const std::string& spec) {
  return {"generator: " + spec};
}

}  // namespace esz

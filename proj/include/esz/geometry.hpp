#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "esz/numbers.hpp"

namespace esz {

enum class Orientation { Left, Right, Collinear };

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

// Sign of the cross product (q - p) x (r - p). Left means counterclockwise.
Orientation orientation(const Point& p, const Point& q, const Point& r);

// (q.y - p.y) / (q.x - p.x). Throws VerticalPair when p.x == q.x.
Rational slope(const Point& p, const Point& q);

// An x-sorted point sequence (ties broken by y) with exact integer-scaled
// shadow coordinates so that the hot predicates avoid per-call gcd work.
// Immutable after construction; the lazily built orientation table is
// synchronized and safe to share across threads.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points, std::vector<int> source_lines = {});

  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }

  // 1-based line in the originating file, 0 when synthetic.
  int source_line(int i) const;

  // Exact orientation sign of points i, j, k: +1 Left, -1 Right, 0 collinear.
  int ori(int i, int j, int k) const;

  // sign(slope(i,j) - slope(k,l)); requires both pairs to have distinct x.
  int slope_cmp(int i, int j, int k, int l) const;

  bool has_distinct_x() const;

  // Builds the n^3 orientation sign table when the set is small enough.
  // Idempotent and thread-safe; a no-op above the size cap.
  void ensure_orientation_table() const;

 private:
  std::vector<Point> points_;
  std::vector<int> source_lines_;
  std::vector<Integer> sx_, sy_;  // x * lcm(x denominators), y * lcm(y denominators)
  struct OriTable;
  struct TableSlot;                         // once_flag + storage + atomic view
  mutable std::shared_ptr<TableSlot> slot_; // shared by copies; derived data only

  int ori_direct(int i, int j, int k) const;
};

struct ValidationResult {
  enum class Kind { Ok, DuplicatePoint, CollinearTriple, DuplicateX };
  Kind kind = Kind::Ok;
  std::array<int, 3> where{-1, -1, -1};  // offending indices, x-order

  bool ok() const { return kind == Kind::Ok; }
  std::string code() const;
  // Human-readable, naming source file lines when the set has them.
  std::string describe(const PointSet& set) const;
};

// Reports the first violated invariant in the order: duplicate point,
// collinear triple, duplicate x. Collinear triples precede duplicate-x so
// that vertically collinear inputs are rejected instead of sent to the shear
// (a shear cannot repair collinearity).
ValidationResult validate(const PointSet& set);

struct ShearResult {
  PointSet points;
  Rational epsilon;  // 0 when the input already had distinct x
};

// x' = x + epsilon * y with epsilon > 0 small enough that all x' are distinct
// and every triple orientation is preserved. Requires: no duplicate points,
// no collinear triples. The candidate epsilon is verified post hoc and halved
// until both checks pass.
ShearResult shear_distinct_x(const PointSet& set);

// Hull vertex indices in counterclockwise order, starting from the
// lexicographically smallest point. Requires general position, size >= 1.
std::vector<int> convex_hull(const PointSet& set);

// Point-set text format: one point per line, two whitespace-separated fields,
// each an integer or "p/q"; '#' starts a comment; blank lines ignored.
PointSet parse_point_set(std::string_view text);
std::string format_point_set(const PointSet& set, const std::vector<std::string>& header_comments = {});

PointSet reflect_y(const PointSet& set);

}  // namespace esz

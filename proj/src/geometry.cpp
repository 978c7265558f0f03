#include "esz/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <sstream>

#include "esz/errors.hpp"

namespace esz {
namespace {

constexpr int kOriTableCap = 160;  // 160^3 bytes ~ 4 MB

int sign_of_cross(const Rational& px, const Rational& py, const Rational& qx, const Rational& qy,
                  const Rational& rx, const Rational& ry) {
  const Rational cross = (qx - px) * (ry - py) - (qy - py) * (rx - px);
  return cross.sign();
}

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const int s = sign_of_cross(p.x, p.y, q.x, q.y, r.x, r.y);
  if (s > 0) return Orientation::Left;
  if (s < 0) return Orientation::Right;
  return Orientation::Collinear;
}

Rational slope(const Point& p, const Point& q) {
  if (p.x == q.x) throw vertical_pair_error();
  return (q.y - p.y) / (q.x - p.x);
}

struct PointSet::OriTable {
  int n = 0;
  std::vector<std::int8_t> signs;  // (i*n + j)*n + k
};

// Copies of a PointSet share the slot: the table depends only on the point
// data, which copies preserve bit-exactly.
struct PointSet::TableSlot {
  std::once_flag once;
  std::unique_ptr<OriTable> storage;
  std::atomic<const OriTable*> view{nullptr};
};

PointSet::PointSet(std::vector<Point> points, std::vector<int> source_lines)
    : points_(std::move(points)), source_lines_(std::move(source_lines)) {
  if (!source_lines_.empty() && source_lines_.size() != points_.size())
    throw std::invalid_argument("source line count does not match point count");

  std::vector<size_t> order(points_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (points_[a].x != points_[b].x) return points_[a].x < points_[b].x;
    return points_[a].y < points_[b].y;
  });
  std::vector<Point> sorted;
  sorted.reserve(points_.size());
  std::vector<int> lines;
  for (const size_t i : order) {
    sorted.push_back(points_[i]);
    if (!source_lines_.empty()) lines.push_back(source_lines_[i]);
  }
  points_ = std::move(sorted);
  source_lines_ = std::move(lines);

  // Integer shadow coordinates: per-axis positive scaling preserves every
  // orientation sign and slope comparison.
  Integer lx = 1, ly = 1;
  for (const Point& p : points_) {
    lx = lcm(lx, denominator(p.x));
    ly = lcm(ly, denominator(p.y));
  }
  sx_.reserve(points_.size());
  sy_.reserve(points_.size());
  for (const Point& p : points_) {
    sx_.push_back(numerator(p.x) * (lx / denominator(p.x)));
    sy_.push_back(numerator(p.y) * (ly / denominator(p.y)));
  }
  slot_ = std::make_shared<TableSlot>();
}

int PointSet::source_line(int i) const {
  if (source_lines_.empty()) return 0;
  return source_lines_[static_cast<size_t>(i)];
}

int PointSet::ori_direct(int i, int j, int k) const {
  const Integer cross = (sx_[j] - sx_[i]) * (sy_[k] - sy_[i]) - (sy_[j] - sy_[i]) * (sx_[k] - sx_[i]);
  return cross.sign();
}

int PointSet::ori(int i, int j, int k) const {
  const OriTable* t = slot_ ? slot_->view.load(std::memory_order_acquire) : nullptr;
  if (t) {
    const size_t n = static_cast<size_t>(t->n);
    return t->signs[(static_cast<size_t>(i) * n + static_cast<size_t>(j)) * n + static_cast<size_t>(k)];
  }
  return ori_direct(i, j, k);
}

void PointSet::ensure_orientation_table() const {
  if (size() > kOriTableCap || size() < 3) return;
  std::call_once(slot_->once, [this] {
    auto t = std::make_unique<OriTable>();
    t->n = size();
    const size_t n = static_cast<size_t>(t->n);
    t->signs.assign(n * n * n, 0);
    for (int i = 0; i < t->n; ++i)
      for (int j = i + 1; j < t->n; ++j)
        for (int k = j + 1; k < t->n; ++k) {
          const std::int8_t s = static_cast<std::int8_t>(ori_direct(i, j, k));
          const auto set = [&](int a, int b, int c, std::int8_t v) {
            t->signs[(static_cast<size_t>(a) * n + static_cast<size_t>(b)) * n + static_cast<size_t>(c)] = v;
          };
          // Orientation is antisymmetric under swapping any two arguments.
          set(i, j, k, s);
          set(j, k, i, s);
          set(k, i, j, s);
          set(j, i, k, static_cast<std::int8_t>(-s));
          set(i, k, j, static_cast<std::int8_t>(-s));
          set(k, j, i, static_cast<std::int8_t>(-s));
        }
    slot_->storage = std::move(t);
    slot_->view.store(slot_->storage.get(), std::memory_order_release);
  });
}

int PointSet::slope_cmp(int i, int j, int k, int l) const {
  const Integer dxij = sx_[j] - sx_[i];
  const Integer dxkl = sx_[l] - sx_[k];
  if (dxij == 0 || dxkl == 0) throw vertical_pair_error();
  const Integer lhs = (sy_[j] - sy_[i]) * dxkl;
  const Integer rhs = (sy_[l] - sy_[k]) * dxij;
  const Integer diff = lhs - rhs;
  int s = diff.sign();
  if (dxij.sign() < 0) s = -s;
  if (dxkl.sign() < 0) s = -s;
  return s;
}

bool PointSet::has_distinct_x() const {
  for (int i = 0; i + 1 < size(); ++i)
    if (points_[static_cast<size_t>(i)].x == points_[static_cast<size_t>(i) + 1].x) return false;
  return true;
}

std::string ValidationResult::code() const {
  switch (kind) {
    case Kind::Ok:
      return "ok";
    case Kind::DuplicatePoint:
      return "DuplicatePoint";
    case Kind::CollinearTriple:
      return "CollinearTriple";
    case Kind::DuplicateX:
      return "DuplicateX";
  }
  return "?";
}

std::string ValidationResult::describe(const PointSet& set) const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << code() << ":";
  for (const int i : where) {
    if (i < 0) continue;
    os << " point " << i;
    if (set.source_line(i) > 0) os << " (line " << set.source_line(i) << ")";
  }
  return os.str();
}

ValidationResult validate(const PointSet& set) {
  const int n = set.size();
  for (int i = 0; i + 1 < n; ++i)
    if (set[i] == set[i + 1]) return {ValidationResult::Kind::DuplicatePoint, {i, i + 1, -1}};
  set.ensure_orientation_table();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (set.ori(i, j, k) == 0) return {ValidationResult::Kind::CollinearTriple, {i, j, k}};
  for (int i = 0; i + 1 < n; ++i)
    if (set[i].x == set[i + 1].x) return {ValidationResult::Kind::DuplicateX, {i, i + 1, -1}};
  return {};
}

ShearResult shear_distinct_x(const PointSet& set) {
  if (set.has_distinct_x()) return {set, Rational(0)};
  {
    const ValidationResult v = validate(set);
    if (!v.ok() && v.kind != ValidationResult::Kind::DuplicateX)
      throw InputError(v.code(), "shear requires a duplicate-free, collinearity-free set: " + v.describe(set));
  }

  const int n = set.size();
  // Any epsilon below min |dx| / (1 + |dy|) over distinct-x pairs keeps the
  // x-order of such pairs; equal-x pairs separate for every epsilon > 0.
  Rational eps(1);
  bool have_bound = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Rational dx = set[j].x - set[i].x;
      if (dx == 0) continue;
      Rational dy = set[j].y - set[i].y;
      if (dy < 0) dy = -dy;
      const Rational bound = abs(dx) / (1 + dy);
      if (!have_bound || bound < eps) {
        eps = bound;
        have_bound = true;
      }
    }
  eps /= 2;

  for (;;) {
    std::vector<Point> sheared;
    sheared.reserve(static_cast<size_t>(n));
    std::vector<int> lines;
    for (int i = 0; i < n; ++i) {
      sheared.push_back({set[i].x + eps * set[i].y, set[i].y});
      if (set.source_line(i) > 0) lines.push_back(set.source_line(i));
    }
    PointSet out(std::move(sheared), std::move(lines));
    bool good = out.has_distinct_x();
    if (good) {
      out.ensure_orientation_table();
      set.ensure_orientation_table();
      for (int i = 0; good && i < n; ++i)
        for (int j = i + 1; good && j < n; ++j)
          for (int k = j + 1; good && k < n; ++k)
            if (out.ori(i, j, k) != set.ori(i, j, k)) good = false;
    }
    if (good) return {std::move(out), eps};
    eps /= 2;
  }
}

std::vector<int> convex_hull(const PointSet& set) {
  const int n = set.size();
  if (n == 0) throw domain_error("convex hull of an empty set");
  if (n == 1) return {0};
  if (n == 2) return {0, 1};
  set.ensure_orientation_table();

  // Monotone chain over the (x, y)-sorted order. Strict turns only: the
  // caller guarantees general position.
  std::vector<int> lower, upper;
  for (int i = 0; i < n; ++i) {
    while (lower.size() >= 2 && set.ori(lower[lower.size() - 2], lower.back(), i) <= 0) lower.pop_back();
    lower.push_back(i);
  }
  for (int i = n - 1; i >= 0; --i) {
    while (upper.size() >= 2 && set.ori(upper[upper.size() - 2], upper.back(), i) <= 0) upper.pop_back();
    upper.push_back(i);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

PointSet parse_point_set(std::string_view text) {
  std::vector<Point> points;
  std::vector<int> lines;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    const size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> fields;
    std::istringstream is{std::string(line)};
    std::string f;
    while (is >> f) fields.push_back(f);
    if (fields.empty()) continue;
    if (fields.size() != 2)
      throw InputError("ParseError", "line " + std::to_string(line_no) + ": expected two fields, got " +
                                         std::to_string(fields.size()));
    try {
      points.push_back({parse_rational(fields[0]), parse_rational(fields[1])});
    } catch (const std::invalid_argument& e) {
      throw InputError("ParseError", "line " + std::to_string(line_no) + ": " + e.what());
    }
    lines.push_back(line_no);
  }
  if (points.empty()) throw InputError("ParseError", "no points in input");
  return PointSet(std::move(points), std::move(lines));
}

std::string format_point_set(const PointSet& set, const std::vector<std::string>& header_comments) {
  std::ostringstream os;
  for (const std::string& c : header_comments) os << "# " << c << "\n";
  for (int i = 0; i < set.size(); ++i)
    os << rational_to_string(set[i].x) << " " << rational_to_string(set[i].y) << "\n";
  return os.str();
}

PointSet reflect_y(const PointSet& set) {
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(set.size()));
  for (int i = 0; i < set.size(); ++i) pts.push_back({set[i].x, -set[i].y});
  return PointSet(std::move(pts));
}

}  // namespace esz

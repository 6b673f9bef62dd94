#include "stabwalls/vgit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stabwalls/errors.hpp"
#include "stabwalls/parallel.hpp"

namespace stabwalls {

void TorusWeights::validate() const {
  if (rank < 1) throw InputError("torus rank must be positive");
  if (summands.empty()) throw InputError("at least one summand is required");
  for (const auto& s : summands) {
    if (s.dim < 1) throw InputError("summand " + s.label + " has dimension < 1");
    if (static_cast<int>(s.weight.size()) != rank) throw InputError("summand " + s.label + " has a weight of the wrong length");
  }
}

TorusWeights TorusWeights::scaling(int k, int dim) {
  TorusWeights w;
  w.rank = k;
  for (int i = 0; i <= k; ++i) {
    Summand s{"W" + std::to_string(i), dim, std::vector<long>(static_cast<std::size_t>(k), 0)};
    if (i > 0) s.weight[static_cast<std::size_t>(i) - 1] = 1;
    w.summands.push_back(std::move(s));
  }
  return w;
}

namespace {

void check_support(const TorusWeights& w, const Support& s) {
  if (s.empty()) throw InputError("support must be nonempty");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= static_cast<int>(w.summands.size())) throw InputError("support index out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw InputError("support indices must be strictly increasing");
  }
}

void check_character(const TorusWeights& w, const Character& chi) {
  if (static_cast<int>(chi.size()) != w.rank) throw InputError("character has the wrong length");
}

Rational weight_at(const TorusWeights& w, int summand, int coord) {
  return Rational(w.summands[static_cast<std::size_t>(summand)].weight[static_cast<std::size_t>(coord)]);
}

}  // namespace

SemistabilityResult is_semistable(const TorusWeights& w, const Character& chi, const Support& s) {
  check_support(w, s);
  check_character(w, chi);
  const std::size_t k = s.size();
  const int t = w.rank;
  // chi = sum lambda_v w_v, sum lambda_v = 1, lambda >= 0
  Matrix a;
  std::vector<Rational> b;
  for (int c = 0; c < t; ++c) {
    std::vector<Rational> row;
    for (int v : s) row.push_back(weight_at(w, v, c));
    a.push_back(std::move(row));
    b.push_back(chi[static_cast<std::size_t>(c)]);
  }
  a.emplace_back(k, Rational(1));
  b.emplace_back(1);
  SemistabilityResult out;
  out.semistable = maximize(a, b, std::vector<Rational>(k, Rational(0))).status == LpResult::Status::optimal;
  if (!out.semistable) return out;
  // relative interior: some representation with every lambda_v >= s > 0;
  // substitute lambda_v = mu_v + s and maximize s
  for (int c = 0; c < t; ++c) {
    Rational total = 0;
    for (int v : s) total += weight_at(w, v, c);
    a[static_cast<std::size_t>(c)].push_back(total);
  }
  a.back().push_back(Rational(static_cast<long>(k)));
  std::vector<Rational> cost(k + 1, Rational(0));
  cost.back() = 1;
  LpResult r = maximize(a, b, cost);
  out.stable = r.status == LpResult::Status::optimal && r.value > 0;
  return out;
}

long mu(const TorusWeights& w, const Support& s, const std::vector<long>& ops) {
  check_support(w, s);
  if (static_cast<int>(ops.size()) != w.rank) throw InputError("one-parameter subgroup has the wrong length");
  long best = 0;
  bool first = true;
  for (int v : s) {
    long pairing = 0;
    for (int c = 0; c < w.rank; ++c) pairing += ops[static_cast<std::size_t>(c)] * w.summands[static_cast<std::size_t>(v)].weight[static_cast<std::size_t>(c)];
    if (first || pairing > best) best = pairing;
    first = false;
  }
  return best;
}

Rational mu(const TorusWeights& w, const Character& chi, const Support& s, const std::vector<long>& ops) {
  check_character(w, chi);
  Rational out(mu(w, s, ops));
  for (int c = 0; c < w.rank; ++c) out -= Rational(ops[static_cast<std::size_t>(c)]) * chi[static_cast<std::size_t>(c)];
  return out;
}

std::vector<Support> all_supports(const TorusWeights& w) {
  const int k = static_cast<int>(w.summands.size());
  if (k > 20) throw InputError("too many summands");
  std::vector<Support> out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    Support s;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Support> semistable_supports(const TorusWeights& w, const Character& chi) {
  std::vector<Support> out;
  for (auto& s : all_supports(w)) {
    if (is_semistable(w, chi, s).semistable) out.push_back(std::move(s));
  }
  return out;
}

std::string quotient_label(const TorusWeights& w, const std::vector<Support>& minimal) {
  std::string out;
  for (const auto& s : minimal) {
    if (!out.empty()) out += " | ";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out += "×";
      out += "P(" + w.summands[static_cast<std::size_t>(s[i])].label + ")";
    }
  }
  return out;
}

namespace {

std::vector<Support> minimal_of(const std::vector<Support>& sets) {
  std::vector<Support> out;
  for (const auto& s : sets) {
    bool minimal = std::none_of(sets.begin(), sets.end(), [&](const Support& o) {
      return o.size() < s.size() && std::includes(s.begin(), s.end(), o.begin(), o.end());
    });
    if (minimal) out.push_back(s);
  }
  return out;
}

using Point = std::vector<Rational>;

Rational dot(const std::vector<Rational>& a, const Point& p) {
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * p[i];
  return out;
}

std::vector<Point> weight_points(const TorusWeights& w) {
  std::set<Point> pts;
  for (const auto& s : w.summands) {
    Point p;
    for (long x : s.weight) p.emplace_back(x);
    pts.insert(std::move(p));
  }
  return {pts.begin(), pts.end()};
}

// Lines through pairs of distinct weights, primitive integer normal with
// positive first nonzero entry.
std::vector<CharacterWall> lines_through(const std::vector<Point>& pts) {
  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  std::vector<CharacterWall> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Integer nx = Integer(pts[i][1] - pts[j][1]), ny = Integer(pts[j][0] - pts[i][0]);
      Integer g = gcd(nx, ny);
      nx /= g;
      ny /= g;
      if (nx < 0 || (nx == 0 && ny < 0)) {
        nx = -nx;
        ny = -ny;
      }
      std::vector<Rational> n{Rational(nx), Rational(ny)};
      Rational off = dot(n, pts[i]);
      if (seen.insert({n, off}).second) out.push_back({n, off});
    }
  }
  std::sort(out.begin(), out.end(), [](const CharacterWall& a, const CharacterWall& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  return out;
}

Rational inf_norm(const Point& p) {
  Rational out = 0;
  for (const auto& x : p) out = std::max(out, Rational(abs(x)));
  return out;
}

// Half-plane then cross-product order on nonzero plane vectors.
bool angle_less(const Point& a, const Point& b) {
  auto half = [](const Point& p) { return p[1] < 0 || (p[1] == 0 && p[0] < 0) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

struct Cell {
  int dimension;
  Point sample;
};

std::vector<Cell> cells_rank1(const std::vector<Point>& pts) {
  std::vector<Cell> out;
  out.push_back({1, {pts.front()[0] - 1}});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.push_back({0, pts[i]});
    if (i + 1 < pts.size()) out.push_back({1, {(pts[i][0] + pts[i + 1][0]) / 2}});
  }
  out.push_back({1, {pts.back()[0] + 1}});
  return out;
}

std::vector<Cell> cells_rank2(const std::vector<Point>& pts, const std::vector<CharacterWall>& lines) {
  std::set<Point> vertex_set(pts.begin(), pts.end());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto x = solve({lines[i].normal, lines[j].normal}, {lines[i].offset, lines[j].offset});
      if (x) vertex_set.insert(*x);
    }
  }
  std::vector<Point> vertices(vertex_set.begin(), vertex_set.end());
  std::vector<Cell> out;
  for (const auto& v : vertices) out.push_back({0, v});
  if (lines.empty()) {
    out.push_back({2, {vertices[0][0] + 1, vertices[0][1]}});
    return out;
  }
  for (const auto& line : lines) {
    Point dir{line.normal[1], -line.normal[0]};
    std::vector<std::pair<Rational, Point>> on;
    for (const auto& v : vertices) {
      if (dot(line.normal, v) == line.offset) on.emplace_back(dot(dir, v), v);
    }
    std::sort(on.begin(), on.end());
    auto shifted = [&](const Point& p, const Rational& s) { return Point{p[0] + s * dir[0], p[1] + s * dir[1]}; };
    out.push_back({1, shifted(on.front().second, Rational(-1))});
    for (std::size_t i = 0; i + 1 < on.size(); ++i) {
      out.push_back({1, {(on[i].second[0] + on[i + 1].second[0]) / 2, (on[i].second[1] + on[i + 1].second[1]) / 2}});
    }
    out.push_back({1, shifted(on.back().second, Rational(1))});
  }
  for (const auto& v : vertices) {
    std::vector<Point> rays;
    Rational eps = 1;
    for (const auto& line : lines) {
      Rational val = dot(line.normal, v) - line.offset;
      if (val == 0) {
        rays.push_back({line.normal[1], -line.normal[0]});
        rays.push_back({-line.normal[1], line.normal[0]});
      } else {
        eps = std::min(eps, Rational(abs(val) / (2 * (abs(line.normal[0]) + abs(line.normal[1])))));
      }
    }
    if (rays.empty()) continue;
    std::sort(rays.begin(), rays.end(), angle_less);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const Point& a = rays[i];
      const Point& b = rays[(i + 1) % rays.size()];
      Point bis;
      if (a[0] * b[1] - a[1] * b[0] > 0) {
        Rational na = inf_norm(a), nb = inf_norm(b);
        bis = {a[0] / na + b[0] / nb, a[1] / na + b[1] / nb};
      } else {
        bis = {-a[1], a[0]};
      }
      Rational scale = eps / inf_norm(bis);
      out.push_back({2, {v[0] + scale * bis[0], v[1] + scale * bis[1]}});
    }
  }
  return out;
}

}  // namespace

VgitArrangement vgit_chambers(const TorusWeights& w, int threads) {
  w.validate();
  if (w.rank > 2) throw InputError("unsupported torus rank " + std::to_string(w.rank) + " (at most 2)");
  std::vector<Point> pts = weight_points(w);
  VgitArrangement out;
  std::vector<Cell> cells;
  if (w.rank == 1) {
    for (const auto& p : pts) out.walls.push_back({{Rational(1)}, p[0]});
    cells = cells_rank1(pts);
  } else {
    out.walls = lines_through(pts);
    cells = cells_rank2(pts, out.walls);
  }
  std::vector<std::vector<Support>> labels(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) { labels[i] = semistable_supports(w, cells[i].sample); });

  // one chamber per (dimension, side of every wall, label)
  std::set<std::tuple<int, std::vector<int>, std::vector<Support>, Point>> seen;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (labels[i].empty()) continue;
    std::vector<int> side;
    for (const auto& wall : out.walls) side.push_back(sign(dot(wall.normal, cells[i].sample) - wall.offset));
    Point key_point = cells[i].dimension == 0 ? cells[i].sample : Point{};
    if (!seen.insert({cells[i].dimension, side, labels[i], key_point}).second) continue;
    VgitChamber ch;
    ch.dimension = cells[i].dimension;
    ch.sample = cells[i].sample;
    ch.semistable = labels[i];
    ch.minimal = minimal_of(labels[i]);
    ch.quotient = quotient_label(w, ch.minimal);
    out.chambers.push_back(std::move(ch));
  }
  std::sort(out.chambers.begin(), out.chambers.end(), [](const VgitChamber& a, const VgitChamber& b) {
    return std::tie(a.minimal, a.dimension, a.sample) < std::tie(b.minimal, b.dimension, b.sample);
  });
  return out;
}

std::vector<Flip> flip_sequence(const TorusWeights& w, const Character& from, const Character& to) {
  w.validate();
  check_character(w, from);
  check_character(w, to);
  if (w.rank > 2) throw InputError("unsupported torus rank " + std::to_string(w.rank) + " (at most 2)");
  std::vector<Point> pts = weight_points(w);
  std::vector<CharacterWall> walls;
  if (w.rank == 1) {
    for (const auto& p : pts) walls.push_back({{Rational(1)}, p[0]});
  } else {
    walls = lines_through(pts);
  }
  Point dir;
  for (std::size_t c = 0; c < from.size(); ++c) dir.push_back(to[c] - from[c]);
  std::map<Rational, int> crossings;
  for (const auto& wall : walls) {
    Rational a = dot(wall.normal, from) - wall.offset, b = dot(wall.normal, to) - wall.offset;
    if (a == 0 || b == 0) throw ComputationError("perturb endpoints: an endpoint lies on a wall");
    if ((a < 0) == (b < 0)) continue;
    crossings[a / (a - b)]++;
  }
  auto at = [&](const Rational& s) {
    Point p;
    for (std::size_t c = 0; c < from.size(); ++c) p.push_back(from[c] + s * dir[c]);
    return p;
  };
  for (const auto& [s, count] : crossings) {
    Point p = at(s);
    bool weight_hit = w.rank == 2 && std::find(pts.begin(), pts.end(), p) != pts.end();
    if (count > 1 || weight_hit) throw ComputationError("perturb endpoints: the path meets a wall non-transversally");
  }
  std::vector<Rational> cuts{Rational(0)};
  for (const auto& [s, count] : crossings) cuts.push_back(s);
  cuts.push_back(Rational(1));
  std::vector<Flip> out;
  std::vector<Support> before = semistable_supports(w, from);
  for (std::size_t i = 1; i + 1 < cuts.size(); ++i) {
    std::vector<Support> after = semistable_supports(w, at((cuts[i] + cuts[i + 1]) / 2));
    Flip f;
    f.position = cuts[i];
    f.character = at(cuts[i]);
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(f.gained));
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(f.lost));
    if (!f.gained.empty() || !f.lost.empty()) out.push_back(std::move(f));
    before = std::move(after);
  }
  return out;
}

}  // namespace stabwalls

#include "sphroot/polyhedron.hpp"

#include <algorithm>

namespace sphroot {

namespace {

VecZ homogenize(const VecQ& p, const Rational& height) {
  VecQ h(p.size() + 1);
  h.head(p.size()) = p;
  h(p.size()) = height;
  return primitive_of(h);
}

}  // namespace

Polyhedron::Polyhedron(std::vector<VecQ> points, Cone recession) {
  if (points.empty()) throw Error("UsageError", "polyhedron needs at least one point");
  if (!recession.strongly_convex())
    throw Error("UsageError", "recession cone must be strongly convex");
  int n = recession.rank();
  for (const VecQ& p : points) {
    if (p.size() != n) throw Error("UsageError", "polyhedron point rank mismatch");
  }
  // homogenize: vertices at height 1, recession rays at height 0
  std::vector<VecZ> gens;
  for (const VecQ& p : points) gens.push_back(homogenize(p, 1));
  for (const VecZ& r : recession.rays()) gens.push_back(homogenize(to_rational(r), 0));
  Cone h = Cone::from_generators_z(recession.side(), n + 1, gens);

  recession_ = std::move(recession);
  for (const VecZ& r : h.rays()) {
    if (r(n) > 0) {
      VecQ v(n);
      for (int i = 0; i < n; ++i) v(i) = Rational(r(i)) / Rational(r(n));
      vertices_.push_back(std::move(v));
    }
  }
  std::sort(vertices_.begin(), vertices_.end(), VecQLess());
  if (vertices_.empty())
    throw Error("UsageError", "degenerate polyhedron (no vertices after minimization)");
  for (const VecZ& f : h.facets()) {
    VecZ a(n);
    for (int i = 0; i < n; ++i) a(i) = f(i);
    ineqs_.emplace_back(std::move(a), f(n));
  }
}

Polyhedron Polyhedron::point(const VecQ& p, const Cone& recession) {
  return Polyhedron({p}, recession);
}

Polyhedron Polyhedron::segment(const VecQ& a, const VecQ& b, const Cone& recession) {
  return Polyhedron({a, b}, recession);
}

Polyhedron Polyhedron::cone_translate(const Cone& recession) {
  return Polyhedron({VecQ::Zero(recession.rank())}, recession);
}

bool Polyhedron::contains(const VecQ& x) const {
  for (const auto& [a, c] : ineqs_) {
    if (dot(a, x) + Rational(c) < 0) return false;
  }
  return true;
}

bool polyhedron_equal(const Polyhedron& a, const Polyhedron& b) {
  if (a.side() != b.side() || a.rank() != b.rank()) return false;
  if (a.vertices().size() != b.vertices().size()) return false;
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    if (a.vertices()[i] != b.vertices()[i]) return false;
  }
  return cone_equal(a.recession(), b.recession());
}

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
  if (a.side() != b.side() || a.rank() != b.rank())
    throw Error("UsageError", "minkowski sum side/rank mismatch");
  std::vector<VecQ> pts;
  for (const VecQ& u : a.vertices()) {
    for (const VecQ& v : b.vertices()) pts.push_back(u + v);
  }
  return Polyhedron(pts, cone_sum(a.recession(), b.recession()));
}

Polyhedron translate(const Polyhedron& p, const VecQ& v) {
  std::vector<VecQ> pts;
  for (const VecQ& u : p.vertices()) pts.push_back(u + v);
  return Polyhedron(pts, p.recession());
}

Polyhedron dilate(const Polyhedron& p, const Rational& factor) {
  if (factor <= 0) throw Error("UsageError", "dilation factor must be positive");
  std::vector<VecQ> pts;
  for (const VecQ& u : p.vertices()) pts.push_back(VecQ(factor * u));
  return Polyhedron(pts, p.recession());
}

std::optional<Rational> support_min(const Polyhedron& p, const VecQ& m) {
  for (const VecZ& r : p.recession().rays()) {
    if (dot(m, to_rational(r)) < 0) return std::nullopt;
  }
  std::optional<Rational> best;
  for (const VecQ& v : p.vertices()) {
    Rational val = dot(m, v);
    if (!best || val < *best) best = val;
  }
  return best;
}

std::optional<Rational> support_min(const Polyhedron& p, const VecZ& m) {
  return support_min(p, to_rational(m));
}

std::optional<VecQ> support_argmin(const Polyhedron& p, const VecQ& m) {
  auto val = support_min(p, m);
  if (!val) return std::nullopt;
  for (const VecQ& v : p.vertices()) {
    if (dot(m, v) == *val) return v;
  }
  return std::nullopt;
}

bool ray_meets(const Polyhedron& p, const VecZ& dir) {
  // feasibility of { t >= 0 : <a, t*dir> + c >= 0 for all facets }
  Rational lo = 0;
  std::optional<Rational> hi;
  for (const auto& [a, c] : p.inequalities()) {
    Rational slope = Rational(dot(a, dir));
    Rational offs = Rational(c);
    if (slope == 0) {
      if (offs < 0) return false;
    } else if (slope > 0) {
      Rational bound = -offs / slope;  // t >= bound
      if (bound > lo) lo = bound;
    } else {
      Rational bound = -offs / slope;  // t <= bound
      if (!hi || bound < *hi) hi = bound;
    }
  }
  return !hi || lo <= *hi;
}

bool is_vertex_of(const Polyhedron& p, const VecQ& v) {
  for (const VecQ& u : p.vertices()) {
    if (u == v) return true;
  }
  return false;
}

QuasiFan normal_quasifan(const Polyhedron& p, const Cone& within) {
  if (within.side() != other(p.side()) || within.rank() != p.rank())
    throw Error("UsageError", "normal_quasifan side/rank mismatch");
  QuasiFan fan;
  fan.support = within;
  int target_dim = within.dim();
  for (const VecQ& v : p.vertices()) {
    std::vector<VecZ> ineqs = within.facets();
    for (const VecQ& u : p.vertices()) {
      if (&u == &v) continue;
      ineqs.push_back(primitive_of(VecQ(u - v)));
    }
    Cone cell = Cone::from_inequalities(within.side(), within.rank(), ineqs, within.equations());
    if (cell.dim() != target_dim) continue;
    bool dup = false;
    for (const Cone& c : fan.maximal) {
      if (cone_equal(c, cell)) {
        dup = true;
        break;
      }
    }
    if (!dup) fan.maximal.push_back(std::move(cell));
  }
  return fan;
}

QuasiFan quasifan_refine(const QuasiFan& a, const QuasiFan& b) {
  if (!cone_equal(a.support, b.support))
    throw Error("UsageError", "quasifan_refine support mismatch");
  QuasiFan fan;
  fan.support = a.support;
  int target_dim = a.support.dim();
  for (const Cone& ca : a.maximal) {
    for (const Cone& cb : b.maximal) {
      Cone cell = intersect(ca, cb);
      if (cell.dim() != target_dim) continue;
      bool dup = false;
      for (const Cone& c : fan.maximal) {
        if (cone_equal(c, cell)) {
          dup = true;
          break;
        }
      }
      if (!dup) fan.maximal.push_back(std::move(cell));
    }
  }
  return fan;
}

bool quasifan_equal(const QuasiFan& a, const QuasiFan& b) {
  if (!cone_equal(a.support, b.support)) return false;
  if (a.maximal.size() != b.maximal.size()) return false;
  for (const Cone& ca : a.maximal) {
    bool found = false;
    for (const Cone& cb : b.maximal) {
      if (cone_equal(ca, cb)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace sphroot

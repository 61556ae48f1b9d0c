#pragma once

#include <optional>

#include "sphroot/cone.hpp"

namespace sphroot {

// Q-rational polyhedron as a Minkowski sum conv(vertices) + recession cone.
// The vertex list is minimal; the recession cone must be strongly convex.
class Polyhedron {
 public:
  Polyhedron() = default;
  Polyhedron(std::vector<VecQ> points, Cone recession);

  static Polyhedron point(const VecQ& p, const Cone& recession);
  static Polyhedron segment(const VecQ& a, const VecQ& b, const Cone& recession);
  static Polyhedron cone_translate(const Cone& recession);  // 0 + cone

  Side side() const { return recession_.side(); }
  int rank() const { return recession_.rank(); }
  const std::vector<VecQ>& vertices() const { return vertices_; }
  const Cone& recession() const { return recession_; }

  bool contains(const VecQ& x) const;
  // Inequality description <a,x> + c >= 0 from the homogenization.
  const std::vector<std::pair<VecZ, Integer>>& inequalities() const { return ineqs_; }

 private:
  std::vector<VecQ> vertices_;
  Cone recession_;
  std::vector<std::pair<VecZ, Integer>> ineqs_;
};

bool polyhedron_equal(const Polyhedron& a, const Polyhedron& b);
Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b);
Polyhedron translate(const Polyhedron& p, const VecQ& v);
Polyhedron dilate(const Polyhedron& p, const Rational& factor);  // factor > 0

// min over the polyhedron of the pairing with m; nullopt when unbounded below.
std::optional<Rational> support_min(const Polyhedron& p, const VecQ& m);
std::optional<Rational> support_min(const Polyhedron& p, const VecZ& m);
// A vertex attaining the minimum (first in lex order).
std::optional<VecQ> support_argmin(const Polyhedron& p, const VecQ& m);

// Does the ray {t*dir : t >= 0} meet the polyhedron?
bool ray_meets(const Polyhedron& p, const VecZ& dir);

bool is_vertex_of(const Polyhedron& p, const VecQ& v);

struct QuasiFan {
  std::vector<Cone> maximal;
  Cone support;
};

// Cells of linearity of m -> support_min(p, m) intersected with `within`;
// cells of full dimension in `within` only.
QuasiFan normal_quasifan(const Polyhedron& p, const Cone& within);
QuasiFan quasifan_refine(const QuasiFan& a, const QuasiFan& b);
bool quasifan_equal(const QuasiFan& a, const QuasiFan& b);

}  // namespace sphroot

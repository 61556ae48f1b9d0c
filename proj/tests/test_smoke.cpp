#include <cassert>
#include <iostream>

#include "sphroot/cone.hpp"
#include "sphroot/hilbert.hpp"
#include "sphroot/polyhedron.hpp"
#include "sphroot/sublattice.hpp"

using namespace sphroot;

static VecZ zv(std::initializer_list<long> xs) {
  VecZ v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

static VecQ qv(std::initializer_list<long> xs) { return to_rational(zv(xs)); }

int main() {
  // orthant: self-dual, rays recovered
  Cone orthant = Cone::from_generators_z(Side::N, 2, {zv({1, 0}), zv({0, 1})});
  assert(orthant.rays().size() == 2);
  assert(orthant.facets().size() == 2);
  assert(orthant.dim() == 2 && orthant.lineality_dim() == 0);
  assert(cone_equal(orthant, dual(dual(orthant))));

  // redundant generator dropped
  Cone c = Cone::from_generators_z(Side::N, 2, {zv({1, 0}), zv({1, 1}), zv({1, 2})});
  assert(c.rays().size() == 2);

  // halfspace: one facet, lineality 1 after linear_part of dual etc.
  Cone ray = Cone::from_generators_z(Side::N, 2, {zv({1, 0})});
  Cone half = dual(ray);
  assert(half.dim() == 2 && half.lineality_dim() == 1);

  // zero cone
  Cone zero = Cone::zero(Side::N, 2);
  assert(zero.dim() == 0 && zero.rays().empty());
  Cone full = dual(zero);
  assert(full.dim() == 2 && full.lineality_dim() == 2);

  // polyhedron minimization: box Minkowski sum
  Polyhedron a = Polyhedron::segment(qv({0, 0}), qv({-1, 0}), zero);
  Polyhedron b = Polyhedron::segment(qv({0, 0}), qv({0, -1}), zero);
  Polyhedron box = minkowski_sum(a, b);
  assert(box.vertices().size() == 4);

  // support function
  auto m = support_min(box, zv({1, 1}));
  assert(m && *m == Rational(-2));

  // hull scan example: segment + ray
  Cone r11 = Cone::from_generators_z(Side::N, 2, {zv({1, 1})});
  Polyhedron p = Polyhedron({qv({0, 0}), qv({-1, 0})}, r11);
  assert(p.vertices().size() == 2);
  assert(!support_min(p, zv({-1, 0})).has_value());

  // quasifan: two halfplanes from a segment
  QuasiFan f = normal_quasifan(a, Cone::full(Side::M, 2));
  assert(f.maximal.size() == 2);
  QuasiFan g = normal_quasifan(b, Cone::full(Side::M, 2));
  QuasiFan fg = quasifan_refine(f, g);
  assert(fg.maximal.size() == 4);

  // sublattice membership
  MatZ basis(2, 1);
  basis(0, 0) = 1;
  basis(1, 0) = 2;
  Sublattice s(2, basis);
  assert(s.member(zv({2, 4})));
  assert(!s.member(zv({1, 1})));

  MatZ b2(2, 2);
  b2 << 2, 0, 0, 2;
  Sublattice s2(2, b2);
  assert(!s2.member(zv({1, 0})));
  assert(s2.saturation().member(zv({1, 0})));

  // hilbert basis of the orthant = unit vectors
  auto hb = hilbert_basis(orthant);
  assert(hb.size() == 2);

  // cone with lineality: hilbert basis exists
  Cone withlin = Cone::from_generators_z(Side::N, 2, {zv({1, 0}), zv({-1, 0}), zv({0, 1})});
  auto hb2 = hilbert_basis(withlin);
  assert(hb2.size() >= 3);

  std::cout << "smoke ok\n";
  return 0;
}

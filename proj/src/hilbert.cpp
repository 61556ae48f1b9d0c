#include "sphroot/hilbert.hpp"

#include <algorithm>
#include <functional>

#include "sphroot/sublattice.hpp"

namespace sphroot {

namespace {

// Pulling triangulation of a pointed cone into simplicial subcones, each given
// by an independent subset of the rays.
void triangulate(const Cone& c, std::vector<std::vector<VecZ>>& out) {
  const auto& rays = c.rays();
  if (rays.empty()) return;
  int d = c.dim();
  if (static_cast<int>(rays.size()) == d) {
    out.push_back(rays);
    return;
  }
  const VecZ& apex = rays.front();
  for (const VecZ& f : c.facets()) {
    if (dot(f, apex) == 0) continue;
    std::vector<VecQ> fgens;
    for (const VecZ& r : rays) {
      if (dot(f, r) == 0) fgens.push_back(to_rational(r));
    }
    Cone facet_cone = Cone::from_generators(c.side(), c.rank(), fgens);
    std::vector<std::vector<VecZ>> sub;
    triangulate(facet_cone, sub);
    for (auto& simplex : sub) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
}

// Lattice points of { sum lambda_i r_i : 0 <= lambda_i <= 1 } for independent rays.
std::vector<VecZ> parallelepiped_points(int rank, const std::vector<VecZ>& rays) {
  std::size_t k = rays.size();
  MatQ r(rank, static_cast<Eigen::Index>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (int i = 0; i < rank; ++i) r(i, static_cast<Eigen::Index>(j)) = Rational(rays[j](i));
  }
  // bounding box over the 2^k vertex sums
  VecQ lo = VecQ::Zero(rank), hi = VecQ::Zero(rank);
  for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
    VecQ s = VecQ::Zero(rank);
    for (std::size_t j = 0; j < k; ++j) {
      if ((mask >> j) & 1) s += to_rational(rays[j]);
    }
    for (int i = 0; i < rank; ++i) {
      if (s(i) < lo(i)) lo(i) = s(i);
      if (s(i) > hi(i)) hi(i) = s(i);
    }
  }
  std::vector<VecZ> pts;
  VecZ x(rank);
  std::vector<Integer> lo_i(rank), hi_i(rank);
  for (int i = 0; i < rank; ++i) {
    lo_i[i] = ceil_q(lo(i));
    hi_i[i] = floor_q(hi(i));
  }
  std::function<void(int)> rec = [&](int i) {
    if (i == rank) {
      VecQ b(rank);
      for (int j = 0; j < rank; ++j) b(j) = Rational(x(j));
      auto lambda = solve(r, b);
      if (!lambda) return;
      for (std::size_t j = 0; j < k; ++j) {
        const Rational& l = (*lambda)(static_cast<Eigen::Index>(j));
        if (l < 0 || l > 1) return;
      }
      pts.push_back(x);
      return;
    }
    for (Integer v = lo_i[i]; v <= hi_i[i]; ++v) {
      x(i) = v;
      rec(i + 1);
    }
  };
  rec(0);
  return pts;
}

std::vector<VecZ> hilbert_pointed(const Cone& c) {
  if (c.dim() > 4) throw Error("HilbertDimension", "Hilbert basis limited to dimension 4");
  std::vector<std::vector<VecZ>> simplices;
  triangulate(c, simplices);
  std::vector<VecZ> cand;
  for (const auto& s : simplices) {
    for (VecZ& p : parallelepiped_points(c.rank(), s)) cand.push_back(std::move(p));
  }
  for (const VecZ& r : c.rays()) cand.push_back(r);
  // dedupe, drop zero
  std::sort(cand.begin(), cand.end(), VecZLess());
  cand.erase(std::unique(cand.begin(), cand.end(),
                         [](const VecZ& a, const VecZ& b) { return !lex_less(a, b) && !lex_less(b, a); }),
             cand.end());
  std::vector<VecZ> nonzero;
  for (auto& v : cand) {
    bool zero = true;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v(i) != 0) zero = false;
    }
    if (!zero) nonzero.push_back(std::move(v));
  }
  // grading strictly positive on the cone minus origin
  VecZ w = VecZ::Zero(c.rank());
  for (const VecZ& f : c.facets()) w += f;
  for (const VecZ& e : c.equations()) {
    // equations do not grade; fine, they vanish on the cone
    (void)e;
  }
  std::stable_sort(nonzero.begin(), nonzero.end(), [&](const VecZ& a, const VecZ& b) {
    Integer wa = dot(w, a), wb = dot(w, b);
    if (wa != wb) return wa < wb;
    return lex_less(a, b);
  });
  std::vector<VecZ> basis;
  for (const VecZ& h : nonzero) {
    bool reducible = false;
    for (const VecZ& g : basis) {
      VecZ diff = h - g;
      bool zero = true;
      for (Eigen::Index i = 0; i < diff.size(); ++i) {
        if (diff(i) != 0) zero = false;
      }
      if (!zero && c.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(h);
  }
  return basis;
}

}  // namespace

std::vector<VecZ> hilbert_basis(const Cone& c) {
  if (c.lineality_dim() == 0) return hilbert_pointed(c);
  // quotient out the lineality lattice, lift back, and add the lineality basis
  MatZ lin(c.rank(), c.lineality_dim());
  for (int j = 0; j < c.lineality_dim(); ++j) lin.col(j) = c.lineality()[static_cast<std::size_t>(j)];
  Sublattice sub(c.rank(), hnf_columns(lin));
  Sublattice sat = sub.saturation();
  auto q = sat.quotient();
  std::vector<VecQ> image_gens;
  for (const VecZ& r : c.rays()) image_gens.push_back(to_rational(VecZ(q.map * r)));
  Cone image = Cone::from_generators(c.side(), static_cast<int>(q.map.rows()), image_gens);
  std::vector<VecZ> out;
  for (const VecZ& h : hilbert_pointed(image)) out.push_back(VecZ(q.lift * h));
  for (Eigen::Index j = 0; j < sat.basis().cols(); ++j) {
    VecZ l = sat.basis().col(j);
    out.push_back(l);
    out.push_back(VecZ(-l));
  }
  return out;
}

}  // namespace sphroot

#include "sphroot/cone.hpp"

#include <algorithm>
#include <set>

namespace sphroot {

namespace {

struct DDRay {
  VecZ v;
  std::vector<char> tight;  // per processed inequality
};

bool same_vec(const VecZ& a, const VecZ& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

bool is_zero_vec(const VecZ& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != 0) return false;
  }
  return true;
}

// Restrict the lineality basis to a hyperplane <a,.> = 0; returns the split
// generator (with <a,l0> > 0) if the basis was not already contained in it.
std::optional<VecZ> restrict_lineality(std::vector<VecZ>& lin, const VecZ& a) {
  Eigen::Index split = -1;
  for (std::size_t i = 0; i < lin.size(); ++i) {
    if (dot(a, lin[i]) != 0) {
      split = static_cast<Eigen::Index>(i);
      break;
    }
  }
  if (split < 0) return std::nullopt;
  VecZ l0 = lin[split];
  if (dot(a, l0) < 0) l0 = VecZ(-l0);
  Integer p0 = dot(a, l0);
  std::vector<VecZ> next;
  for (std::size_t i = 0; i < lin.size(); ++i) {
    if (static_cast<Eigen::Index>(i) == split) continue;
    Integer pi = dot(a, lin[i]);
    next.push_back(primitive(VecZ(p0 * lin[i] - pi * l0)));
  }
  lin = std::move(next);
  return l0;
}

// dim of the minimal face cut out by the constraints tight at the given rays:
// rank of { eqs } u { processed ineqs tight at all of them }.
int tight_rank(int rank, const std::vector<VecZ>& eqs, const std::vector<VecZ>& ineqs,
               std::size_t processed, const std::vector<const DDRay*>& rays) {
  std::vector<const VecZ*> rows;
  for (const VecZ& e : eqs) rows.push_back(&e);
  for (std::size_t i = 0; i < processed; ++i) {
    bool all_tight = true;
    for (const DDRay* r : rays) {
      if (!r->tight[i]) {
        all_tight = false;
        break;
      }
    }
    if (all_tight) rows.push_back(&ineqs[i]);
  }
  MatQ m(static_cast<Eigen::Index>(rows.size()), rank);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rank; ++j) m(static_cast<Eigen::Index>(i), j) = Rational((*rows[i])(j));
  }
  return rank_of(m);
}

}  // namespace

DDOutput double_description(int rank, const std::vector<VecZ>& ineqs,
                            const std::vector<VecZ>& eqs) {
  std::vector<VecZ> lin;
  for (int i = 0; i < rank; ++i) {
    VecZ e = VecZ::Zero(rank);
    e(i) = 1;
    lin.push_back(e);
  }
  for (const VecZ& a : eqs) restrict_lineality(lin, a);

  std::vector<DDRay> rays;
  auto recompute_tight = [&](DDRay& r, std::size_t processed) {
    r.tight.assign(processed, 0);
    for (std::size_t i = 0; i < processed; ++i) r.tight[i] = (dot(ineqs[i], r.v) == 0);
  };

  std::size_t processed = 0;
  for (const VecZ& a : ineqs) {
    if (auto l0 = restrict_lineality(lin, a)) {
      Integer p0 = dot(a, *l0);
      for (DDRay& r : rays) {
        Integer pr = dot(a, r.v);
        if (pr != 0) r.v = primitive(VecZ(p0 * r.v - pr * *l0));
      }
      DDRay nr;
      nr.v = *l0;
      rays.push_back(std::move(nr));
      ++processed;
      for (DDRay& r : rays) recompute_tight(r, processed);
    } else {
      std::vector<DDRay> pos, zero, neg;
      for (DDRay& r : rays) {
        Integer p = dot(a, r.v);
        if (p > 0) {
          pos.push_back(std::move(r));
        } else if (p == 0) {
          zero.push_back(std::move(r));
        } else {
          neg.push_back(std::move(r));
        }
      }
      // adjacency via the rank test: minimal face containing both rays has
      // dimension lineality_dim + 2
      int lin_dim = static_cast<int>(lin.size());
      std::vector<DDRay> fresh;
      for (const DDRay& p : pos) {
        for (const DDRay& m : neg) {
          std::vector<const DDRay*> pair{&p, &m};
          int rk = tight_rank(rank, eqs, ineqs, processed, pair);
          if (rank - rk != lin_dim + 2) continue;
          Integer pp = dot(a, p.v);
          Integer pm = dot(a, m.v);
          DDRay nr;
          nr.v = primitive(VecZ(pp * m.v - pm * p.v));
          if (is_zero_vec(nr.v)) continue;
          bool dup = false;
          for (const DDRay& q : fresh) {
            if (same_vec(q.v, nr.v)) {
              dup = true;
              break;
            }
          }
          for (const DDRay& q : zero) {
            if (same_vec(q.v, nr.v)) {
              dup = true;
              break;
            }
          }
          if (!dup) fresh.push_back(std::move(nr));
        }
      }
      rays.clear();
      for (auto& r : pos) rays.push_back(std::move(r));
      for (auto& r : zero) rays.push_back(std::move(r));
      for (auto& r : fresh) rays.push_back(std::move(r));
      ++processed;
      for (DDRay& r : rays) recompute_tight(r, processed);
    }
  }

  DDOutput out;
  out.lineality = lin;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

namespace {

// Canonical representative of a ray class modulo the lineality space: zero out
// the pivot coordinates of the lineality basis, then primitivize.
VecZ reduce_mod_lineality(const VecZ& ray, const std::vector<VecZ>& lin) {
  if (lin.empty()) return primitive(ray);
  VecQ x = to_rational(ray);
  std::vector<VecQ> basis;
  for (const VecZ& l : lin) basis.push_back(to_rational(l));
  std::vector<Eigen::Index> pivots;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[k](pivots[i]) != 0) {
        Rational f = basis[k](pivots[i]) / basis[i](pivots[i]);
        basis[k] -= f * basis[i];
      }
    }
    Eigen::Index piv = -1;
    for (Eigen::Index j = 0; j < basis[k].size(); ++j) {
      if (basis[k](j) != 0) {
        piv = j;
        break;
      }
    }
    pivots.push_back(piv);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (pivots[i] >= 0 && x(pivots[i]) != 0) {
      Rational f = x(pivots[i]) / basis[i](pivots[i]);
      x -= f * basis[i];
    }
  }
  return primitive_of(x);
}

std::vector<VecZ> canonical_lineality(const std::vector<VecZ>& lin, int rank) {
  if (lin.empty()) return {};
  MatZ m(rank, static_cast<Eigen::Index>(lin.size()));
  for (std::size_t j = 0; j < lin.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = lin[j];
  MatZ h = hnf_columns(m);
  std::vector<VecZ> out;
  for (Eigen::Index j = 0; j < h.cols(); ++j) out.push_back(primitive(VecZ(h.col(j))));
  std::sort(out.begin(), out.end(), VecZLess());
  return out;
}

std::vector<VecZ> sorted_unique_nonzero(std::vector<VecZ> v) {
  std::sort(v.begin(), v.end(), VecZLess());
  v.erase(std::unique(v.begin(), v.end(), same_vec), v.end());
  std::vector<VecZ> out;
  for (auto& x : v) {
    if (!is_zero_vec(x)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

Cone Cone::build(Side side, int rank, const std::vector<VecZ>& gens) {
  // dual pass: facets/equations of cone(gens)
  DDOutput dualdd = double_description(rank, gens, {});
  // primal pass back through the inequality description
  DDOutput primal = double_description(rank, dualdd.rays, dualdd.lineality);

  Cone c;
  c.side_ = side;
  c.rank_ = rank;
  c.lineality_ = canonical_lineality(primal.lineality, rank);
  std::vector<VecZ> rays;
  for (const VecZ& r : primal.rays) rays.push_back(reduce_mod_lineality(r, c.lineality_));
  c.rays_ = sorted_unique_nonzero(std::move(rays));
  c.equations_ = canonical_lineality(dualdd.lineality, rank);
  std::vector<VecZ> facets;
  for (const VecZ& f : dualdd.rays) facets.push_back(reduce_mod_lineality(f, c.equations_));
  c.facets_ = sorted_unique_nonzero(std::move(facets));
  c.dim_ = rank - static_cast<int>(c.equations_.size());
  return c;
}

Cone Cone::from_generators_z(Side side, int rank, const std::vector<VecZ>& gens) {
  std::vector<VecZ> clean;
  for (const VecZ& g : gens) {
    if (g.size() != rank) throw Error("UsageError", "generator rank mismatch");
    if (!is_zero_vec(g)) clean.push_back(primitive(g));
  }
  return build(side, rank, clean);
}

Cone Cone::from_generators(Side side, int rank, const std::vector<VecQ>& gens) {
  std::vector<VecZ> zg;
  for (const VecQ& g : gens) {
    if (g.size() != rank) throw Error("UsageError", "generator rank mismatch");
    VecZ p = primitive_of(g);
    if (!is_zero_vec(p)) zg.push_back(p);
  }
  return build(side, rank, zg);
}

Cone Cone::from_inequalities(Side side, int rank, const std::vector<VecZ>& ineqs,
                             const std::vector<VecZ>& eqs) {
  DDOutput primal = double_description(rank, ineqs, eqs);
  std::vector<VecZ> gens = primal.rays;
  for (const VecZ& l : primal.lineality) {
    gens.push_back(l);
    gens.push_back(VecZ(-l));
  }
  return build(side, rank, gens);
}

Cone Cone::zero(Side side, int rank) { return build(side, rank, {}); }

Cone Cone::full(Side side, int rank) {
  std::vector<VecZ> gens;
  for (int i = 0; i < rank; ++i) {
    VecZ e = VecZ::Zero(rank);
    e(i) = 1;
    gens.push_back(e);
    gens.push_back(VecZ(-e));
  }
  return build(side, rank, gens);
}

bool Cone::contains(const VecQ& x) const {
  for (const VecZ& f : facets_) {
    if (dot(f, x) < 0) return false;
  }
  for (const VecZ& a : equations_) {
    if (dot(a, x) != 0) return false;
  }
  return true;
}

bool Cone::contains(const VecZ& x) const { return contains(to_rational(x)); }

bool Cone::contains_in_relative_interior(const VecQ& x) const {
  for (const VecZ& f : facets_) {
    if (dot(f, x) <= 0) return false;
  }
  for (const VecZ& a : equations_) {
    if (dot(a, x) != 0) return false;
  }
  return true;
}

VecQ Cone::relative_interior_point() const {
  VecQ p = VecQ::Zero(rank_);
  for (const VecZ& r : rays_) p += to_rational(r);
  return p;
}

std::vector<VecQ> Cone::generator_set() const {
  std::vector<VecQ> g;
  for (const VecZ& r : rays_) g.push_back(to_rational(r));
  for (const VecZ& l : lineality_) {
    g.push_back(to_rational(l));
    g.push_back(to_rational(VecZ(-l)));
  }
  return g;
}

Cone dual(const Cone& c) {
  std::vector<VecZ> gens = c.facets();
  for (const VecZ& e : c.equations()) {
    gens.push_back(e);
    gens.push_back(VecZ(-e));
  }
  return Cone::from_generators_z(other(c.side()), c.rank(), gens);
}

Cone linear_part(const Cone& c) {
  std::vector<VecZ> gens;
  for (const VecZ& l : c.lineality()) {
    gens.push_back(l);
    gens.push_back(VecZ(-l));
  }
  return Cone::from_generators_z(c.side(), c.rank(), gens);
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.side() != b.side() || a.rank() != b.rank())
    throw Error("UsageError", "cone intersection side/rank mismatch");
  std::vector<VecZ> ineqs = a.facets();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  std::vector<VecZ> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.side(), a.rank(), ineqs, eqs);
}

Cone cone_sum(const Cone& a, const Cone& b) {
  if (a.side() != b.side() || a.rank() != b.rank())
    throw Error("UsageError", "cone sum side/rank mismatch");
  std::vector<VecQ> gens = a.generator_set();
  auto gb = b.generator_set();
  gens.insert(gens.end(), gb.begin(), gb.end());
  return Cone::from_generators(a.side(), a.rank(), gens);
}

bool contains_cone(const Cone& outer, const Cone& inner) {
  for (const VecQ& g : inner.generator_set()) {
    if (!outer.contains(g)) return false;
  }
  return true;
}

bool cone_equal(const Cone& a, const Cone& b) {
  if (a.side() != b.side() || a.rank() != b.rank()) return false;
  return contains_cone(a, b) && contains_cone(b, a);
}

std::vector<Cone> faces_of(const Cone& c) {
  std::vector<Cone> out;
  std::set<std::vector<std::size_t>> seen;
  std::size_t nf = c.facets().size();
  if (nf > 16) throw Error("UsageError", "face enumeration limited to 16 facets");
  for (std::size_t mask = 0; mask < (std::size_t(1) << nf); ++mask) {
    std::vector<std::size_t> tight_rays;
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
      bool tight = true;
      for (std::size_t f = 0; f < nf; ++f) {
        if ((mask >> f) & 1) {
          if (dot(c.facets()[f], c.rays()[i]) != 0) {
            tight = false;
            break;
          }
        }
      }
      if (tight) tight_rays.push_back(i);
    }
    if (!seen.insert(tight_rays).second) continue;
    std::vector<VecQ> gens;
    for (std::size_t i : tight_rays) gens.push_back(to_rational(c.rays()[i]));
    for (const VecZ& l : c.lineality()) {
      gens.push_back(to_rational(l));
      gens.push_back(to_rational(VecZ(-l)));
    }
    out.push_back(Cone::from_generators(c.side(), c.rank(), gens));
  }
  return out;
}

Cone cone_from_generators(Side side, int rank, const std::vector<VecQ>& gens) {
  return Cone::from_generators(side, rank, gens);
}

}  // namespace sphroot

#pragma once

#include <vector>

#include "sphroot/linalg.hpp"

namespace sphroot {

// Which of the two dual lattices a vector or cone lives in. The pairing is the
// standard dot product in the fixed dual bases.
enum class Side { M, N };

inline Side other(Side s) { return s == Side::M ? Side::N : Side::M; }
inline const char* to_string(Side s) { return s == Side::M ? "M" : "N"; }

struct DualPair {
  int rank = 0;
};

// Minimal double description of a polyhedral cone given by inequalities
// { x : <a,x> >= 0 for a in ineqs, <b,x> = 0 for b in eqs }.
struct DDOutput {
  std::vector<VecZ> lineality;  // basis of the lineality space
  std::vector<VecZ> rays;       // primitive extreme rays modulo lineality
};
DDOutput double_description(int rank, const std::vector<VecZ>& ineqs,
                            const std::vector<VecZ>& eqs);

// Rational polyhedral cone with both descriptions computed eagerly at
// construction and cached. Rays and facet normals are primitive integer
// vectors in deterministic lexicographic order.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(Side side, int rank, const std::vector<VecQ>& gens);
  static Cone from_generators_z(Side side, int rank, const std::vector<VecZ>& gens);
  static Cone from_inequalities(Side side, int rank, const std::vector<VecZ>& ineqs,
                                const std::vector<VecZ>& eqs = {});
  static Cone zero(Side side, int rank);
  static Cone full(Side side, int rank);

  Side side() const { return side_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  int lineality_dim() const { return static_cast<int>(lineality_.size()); }
  bool strongly_convex() const { return lineality_.empty(); }

  const std::vector<VecZ>& rays() const { return rays_; }
  const std::vector<VecZ>& lineality() const { return lineality_; }
  // Inequality description of this cone (on the dual side): <f,x> >= 0.
  const std::vector<VecZ>& facets() const { return facets_; }
  // Equation description: <a,x> = 0 on the cone; basis of span(cone)^perp.
  const std::vector<VecZ>& equations() const { return equations_; }

  bool contains(const VecQ& x) const;
  bool contains(const VecZ& x) const;
  bool contains_in_relative_interior(const VecQ& x) const;
  VecQ relative_interior_point() const;

  // All generators (rays plus +-lineality) as rational vectors.
  std::vector<VecQ> generator_set() const;

 private:
  Side side_ = Side::N;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<VecZ> rays_, lineality_, facets_, equations_;

  static Cone build(Side side, int rank, const std::vector<VecZ>& gens);
};

Cone dual(const Cone& c);
Cone linear_part(const Cone& c);                 // c cap -c
Cone intersect(const Cone& a, const Cone& b);
Cone cone_sum(const Cone& a, const Cone& b);     // cone generated by both
bool contains_cone(const Cone& outer, const Cone& inner);
bool cone_equal(const Cone& a, const Cone& b);

// All faces, including the cone itself and its minimal face.
std::vector<Cone> faces_of(const Cone& c);

// The paper-facing constructor names.
Cone cone_from_generators(Side side, int rank, const std::vector<VecQ>& gens);
inline Cone cone_dual(const Cone& c) { return dual(c); }
inline Cone cone_linear_part(const Cone& c) { return linear_part(c); }

}  // namespace sphroot

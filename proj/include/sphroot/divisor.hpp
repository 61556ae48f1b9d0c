#pragma once

#include <map>

#include "sphroot/polyhedron.hpp"
#include "sphroot/ratfunc.hpp"

namespace sphroot {

enum class CurveKind { A1, P1 };
inline const char* to_string(CurveKind c) { return c == CurveKind::A1 ? "A1" : "P1"; }

// Q-divisor on A^1 or P^1 with finite support; zero coefficients not stored.
struct QDivisor {
  CurveKind curve = CurveKind::A1;
  std::map<CurvePoint, Rational> coeff;

  Rational at(const CurvePoint& p) const {
    auto it = coeff.find(p);
    return it == coeff.end() ? Rational(0) : it->second;
  }
  void set(const CurvePoint& p, const Rational& c) {
    if (c == 0)
      coeff.erase(p);
    else
      coeff[p] = c;
  }
  Rational degree() const {
    Rational d = 0;
    for (const auto& [p, c] : coeff) d += c;
    return d;
  }
};

QDivisor floor_divisor(const QDivisor& d);
bool operator==(const QDivisor& a, const QDivisor& b);

// sigma-polyhedral divisor over A^1 or P^1: finitely many coefficients differ
// from the tail cone; every stored coefficient has recession sigma.
class PolyDivisor {
 public:
  PolyDivisor() = default;
  PolyDivisor(CurveKind curve, Cone tail);

  CurveKind curve() const { return curve_; }
  const Cone& tail() const { return tail_; }
  int rank() const { return tail_.rank(); }

  void set_coefficient(const CurvePoint& p, Polyhedron delta);
  Polyhedron coefficient(const CurvePoint& p) const;  // tail translate off support
  const std::map<CurvePoint, Polyhedron>& stored() const { return coeff_; }
  std::vector<CurvePoint> support() const;

 private:
  CurveKind curve_ = CurveKind::A1;
  Cone tail_;
  std::map<CurvePoint, Polyhedron> coeff_;
};

// D(m) = sum_z min_{v in Delta_z(0)} <m,v> . z ; requires m in sigma-dual.
QDivisor pd_evaluate(const PolyDivisor& d, const VecZ& m);

// Minkowski sum of all coefficients (finitely many differ from the tail).
Polyhedron pd_degree(const PolyDivisor& d);
// Sum over the finite points only (the coloring-side degree).
Polyhedron pd_degree_affine(const PolyDivisor& d);

enum class Properness { Proper, Improper, Inconclusive };

struct PropernessReport {
  Properness status = Properness::Proper;
  std::vector<std::string> diagnostics;
  bool ok() const { return status == Properness::Proper; }
};

PropernessReport pd_is_proper(const PolyDivisor& d);

// Is f * chi^m a section, i.e. ord_z f + floor(D(m))_z >= 0 everywhere?
// f = 0 counts as a section.
bool section_contains(const PolyDivisor& d, const VecZ& m, const RatFunc& f);

// phi_m = (t-1)^{-v1(m)} t^{-floor(v0(m))}
RatFunc canonical_generator(const VecQ& v0, const VecQ& v1, const VecZ& m);

// Minimal section of D(m) over the affine part: prod (t-z)^{-floor(D(m))_z}.
RatFunc canonical_section(const PolyDivisor& d, const VecZ& m);

// Dimension bound for P1 sections: deg floor(D(m)); negative means empty.
Integer p1_section_degree(const PolyDivisor& d, const VecZ& m);

QuasiFan divisor_quasifan(const PolyDivisor& d);

// Rays of sigma that do not meet deg D (all of sigma(1) over A^1).
std::vector<VecZ> star_rays(const PolyDivisor& d);

struct PointVertexLess {
  bool operator()(const std::pair<CurvePoint, VecQ>& a,
                  const std::pair<CurvePoint, VecQ>& b) const {
    if (!(a.first == b.first)) return a.first < b.first;
    return lex_less(a.second, b.second);
  }
};

struct PrincipalParts {
  std::map<VecZ, Integer, VecZLess> horizontal;  // ray -> coefficient
  std::map<std::pair<CurvePoint, VecQ>, Integer, PointVertexLess> vertical;
};

PrincipalParts principal_divisor_parts(const PolyDivisor& d, const RatFunc& f, const VecZ& m);

}  // namespace sphroot

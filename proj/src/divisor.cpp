#include "sphroot/divisor.hpp"

#include <algorithm>

#include "sphroot/hilbert.hpp"

namespace sphroot {

QDivisor floor_divisor(const QDivisor& d) {
  QDivisor out;
  out.curve = d.curve;
  for (const auto& [p, c] : d.coeff) out.set(p, Rational(floor_q(c)));
  return out;
}

bool operator==(const QDivisor& a, const QDivisor& b) {
  return a.curve == b.curve && a.coeff == b.coeff;
}

PolyDivisor::PolyDivisor(CurveKind curve, Cone tail) : curve_(curve), tail_(std::move(tail)) {
  if (!tail_.strongly_convex()) throw Error("UsageError", "tail cone must be strongly convex");
}

void PolyDivisor::set_coefficient(const CurvePoint& p, Polyhedron delta) {
  if (p.infinite && curve_ == CurveKind::A1)
    throw Error("UsageError", "point at infinity on an affine curve");
  if (!cone_equal(delta.recession(), tail_))
    throw Error("UsageError", "coefficient recession must equal the tail cone");
  coeff_.insert_or_assign(p, std::move(delta));
}

Polyhedron PolyDivisor::coefficient(const CurvePoint& p) const {
  auto it = coeff_.find(p);
  if (it != coeff_.end()) return it->second;
  return Polyhedron::cone_translate(tail_);
}

std::vector<CurvePoint> PolyDivisor::support() const {
  std::vector<CurvePoint> s;
  for (const auto& [p, delta] : coeff_) s.push_back(p);
  return s;
}

QDivisor pd_evaluate(const PolyDivisor& d, const VecZ& m) {
  Cone weight_cone = dual(d.tail());
  if (!weight_cone.contains(m))
    throw Error("OutsideWeightCone", "m is not in the dual of the tail cone");
  QDivisor out;
  out.curve = d.curve();
  for (const auto& [p, delta] : d.stored()) {
    auto v = support_min(delta, m);
    out.set(p, *v);  // finite: m lies in the dual of the recession cone
  }
  return out;
}

Polyhedron pd_degree(const PolyDivisor& d) {
  Polyhedron sum = Polyhedron::cone_translate(d.tail());
  bool first = true;
  for (const auto& [p, delta] : d.stored()) {
    sum = first ? delta : minkowski_sum(sum, delta);
    first = false;
  }
  return sum;
}

Polyhedron pd_degree_affine(const PolyDivisor& d) {
  Polyhedron sum = Polyhedron::cone_translate(d.tail());
  bool first = true;
  for (const auto& [p, delta] : d.stored()) {
    if (p.infinite) continue;
    sum = first ? delta : minkowski_sum(sum, delta);
    first = false;
  }
  return sum;
}

PropernessReport pd_is_proper(const PolyDivisor& d) {
  PropernessReport rep;
  if (d.curve() == CurveKind::A1) {
    rep.diagnostics.push_back("affine curve: proper");
    return rep;
  }
  Polyhedron deg = pd_degree(d);
  const Cone& sigma = d.tail();
  for (const VecQ& v : deg.vertices()) {
    if (!sigma.contains(v)) {
      rep.status = Properness::Improper;
      rep.diagnostics.push_back("degree vertex " + to_string(v) + " lies outside the tail cone");
    }
  }
  if (rep.status == Properness::Improper) return rep;
  if (deg.contains(VecQ::Zero(d.rank()))) {
    rep.status = Properness::Improper;
    rep.diagnostics.push_back("degree polyhedron contains 0, so it equals the tail cone");
    return rep;
  }
  // boundary principality: on each face of the weight cone where the support
  // minimum of deg D vanishes identically, re-derive the vanishing through the
  // evaluated divisor at Hilbert basis elements.
  Cone weight_cone = dual(sigma);
  for (const Cone& face : faces_of(weight_cone)) {
    VecQ p = face.relative_interior_point();
    bool zero_p = true;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p(i) != 0) zero_p = false;
    }
    if (zero_p && face.dim() > 0) continue;  // spanning faces carry their own point
    auto val = support_min(deg, p);
    if (!val || *val != 0) continue;
    if (face.dim() == weight_cone.dim()) {
      rep.status = Properness::Improper;
      rep.diagnostics.push_back("support minimum of deg vanishes on the interior");
      return rep;
    }
    std::vector<VecZ> hb;
    try {
      hb = hilbert_basis(face);
    } catch (const Error&) {
      rep.status = Properness::Inconclusive;
      rep.diagnostics.push_back("principality check inconclusive: face dimension exceeds 4");
      continue;
    }
    for (const VecZ& h : hb) {
      auto hv = support_min(deg, to_rational(h));
      if (!hv || *hv != 0) continue;
      QDivisor ev = pd_evaluate(d, h);
      Integer r = 1;
      for (const auto& [pt, c] : ev.coeff) r = lcm(r, Integer(c.get_den()));
      QDivisor scaled = pd_evaluate(d, VecZ(r * h));
      if (scaled.degree() != 0) {
        rep.status = Properness::Improper;
        rep.diagnostics.push_back("boundary weight " + to_string(h) +
                                  ": evaluated divisor has nonzero degree, not principal");
      }
    }
  }
  if (rep.status == Properness::Proper) rep.diagnostics.push_back("deg D strictly inside the tail cone");
  return rep;
}

namespace {

// Divide out every (t - z) factor for z in pts; true if the rest is constant.
bool poles_confined_to(const Poly& den, const std::vector<Rational>& pts) {
  Poly rem = den;
  for (const Rational& z : pts) {
    Poly lin = Poly::linear(z);
    while (rem.degree() > 0) {
      auto [q, r] = Poly::divmod(rem, lin);
      if (!r.is_zero()) break;
      rem = q;
    }
  }
  return rem.degree() <= 0;
}

}  // namespace

bool section_contains(const PolyDivisor& d, const VecZ& m, const RatFunc& f) {
  if (f.is_zero()) return true;
  QDivisor floor_d = floor_divisor(pd_evaluate(d, m));
  std::vector<Rational> finite_pts;
  for (const auto& [p, c] : floor_d.coeff) {
    if (!p.infinite) finite_pts.push_back(p.z);
  }
  if (!poles_confined_to(f.den(), finite_pts)) return false;
  for (const auto& [p, c] : floor_d.coeff) {
    if (p.infinite) continue;
    if (Rational(f.ord_at(p)) + c < 0) return false;
  }
  if (d.curve() == CurveKind::P1) {
    Rational c_inf = floor_d.at(CurvePoint::inf());
    if (Rational(f.ord_at(CurvePoint::inf())) + c_inf < 0) return false;
  }
  return true;
}

RatFunc canonical_generator(const VecQ& v0, const VecQ& v1, const VecZ& m) {
  Rational e1 = -dot(m, v1);
  if (!is_integer(e1)) throw Error("LatticeError", "v1(m) must be an integer");
  Integer exp1 = e1.get_num();
  Integer exp0 = -floor_q(dot(m, v0));
  return RatFunc::linear_power_product({{Rational(1), exp1}, {Rational(0), exp0}});
}

RatFunc canonical_section(const PolyDivisor& d, const VecZ& m) {
  QDivisor floor_d = floor_divisor(pd_evaluate(d, m));
  std::vector<std::pair<Rational, Integer>> factors;
  for (const auto& [p, c] : floor_d.coeff) {
    if (p.infinite) continue;
    factors.emplace_back(p.z, Integer(-c.get_num()));
  }
  return RatFunc::linear_power_product(factors);
}

Integer p1_section_degree(const PolyDivisor& d, const VecZ& m) {
  QDivisor floor_d = floor_divisor(pd_evaluate(d, m));
  return floor_d.degree().get_num();
}

QuasiFan divisor_quasifan(const PolyDivisor& d) {
  Cone weight_cone = dual(d.tail());
  QuasiFan fan;
  fan.support = weight_cone;
  fan.maximal.push_back(weight_cone);
  for (const auto& [p, delta] : d.stored()) {
    fan = quasifan_refine(fan, normal_quasifan(delta, weight_cone));
  }
  return fan;
}

std::vector<VecZ> star_rays(const PolyDivisor& d) {
  std::vector<VecZ> out;
  if (d.curve() == CurveKind::A1) return d.tail().rays();
  Polyhedron deg = pd_degree(d);
  for (const VecZ& r : d.tail().rays()) {
    if (!ray_meets(deg, r)) out.push_back(r);
  }
  return out;
}

namespace {

std::vector<Integer> small_divisors(const Integer& n0) {
  Integer n = abs(n0);
  std::vector<Integer> out;
  if (n == 0) return out;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      out.push_back(n / i);
    }
    if (out.size() > 512) break;  // coefficients beyond test scale; skip extras
  }
  return out;
}

std::vector<Rational> rational_roots(const Poly& p0) {
  std::vector<Rational> roots;
  if (p0.is_zero() || p0.degree() == 0) return roots;
  Integer clear = 1;
  for (const Rational& c : p0.coeffs()) clear = lcm(clear, Integer(c.get_den()));
  std::vector<Integer> ic;
  for (const Rational& c : p0.coeffs()) ic.push_back(Integer(Rational(c * Rational(clear)).get_num()));
  while (ic.size() > 1 && ic.front() == 0) {
    roots.push_back(0);
    ic.erase(ic.begin());
  }
  if (ic.size() <= 1) return roots;
  Poly p(std::vector<Rational>(0));
  {
    std::vector<Rational> cc;
    for (const Integer& c : ic) cc.push_back(Rational(c));
    p = Poly(std::move(cc));
  }
  for (const Integer& num : small_divisors(ic.front())) {
    for (const Integer& den : small_divisors(ic.back())) {
      for (int sign : {1, -1}) {
        Rational cand(sign * num, den);
        cand.canonicalize();
        if (p.eval(cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

PrincipalParts principal_divisor_parts(const PolyDivisor& d, const RatFunc& f, const VecZ& m) {
  if (!section_contains(d, m, f)) throw Error("NotASection", "f chi^m is not a section");
  if (f.is_zero()) throw Error("NotASection", "principal divisor of zero");
  PrincipalParts parts;
  for (const VecZ& rho : star_rays(d)) {
    Integer c = dot(rho, m);
    if (c != 0) parts.horizontal[rho] = c;
  }
  // points to scan: divisor support plus rational zeros/poles of f
  std::vector<CurvePoint> pts = d.support();
  for (const Rational& z : rational_roots(f.num())) pts.push_back(CurvePoint::finite(z));
  for (const Rational& z : rational_roots(f.den())) pts.push_back(CurvePoint::finite(z));
  if (d.curve() == CurveKind::P1) pts.push_back(CurvePoint::inf());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const CurvePoint& z : pts) {
    if (z.infinite && d.curve() == CurveKind::A1) continue;
    Polyhedron delta = d.coefficient(z);
    Integer ord = f.ord_at(z);
    for (const VecQ& v : delta.vertices()) {
      Integer mu = mu_denominator(v);
      Rational coeff = Rational(mu) * (dot(m, v) + Rational(ord));
      if (coeff != 0) parts.vertical[{z, v}] = coeff.get_num();
    }
  }
  return parts;
}

}  // namespace sphroot

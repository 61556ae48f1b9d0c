#pragma once

#include <map>
#include <vector>

#include "sphroot/rational.hpp"

namespace sphroot {

// Dense polynomial in t over Q; no trailing zero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // constant
  explicit Poly(std::vector<Rational> coeffs);

  static Poly t();
  static Poly linear(const Rational& root);  // t - root

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly derivative() const;
  Rational eval(const Rational& x) const;

  // quotient and remainder; divisor must be nonzero
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic gcd

  Poly monic() const;
  std::string str() const;  // "3*t^2 - 2*t + 1"

 private:
  std::vector<Rational> coeffs_;  // coeffs_[i] * t^i
  void trim();
};

struct CurvePoint {
  bool infinite = false;
  Rational z = 0;

  static CurvePoint finite(const Rational& z) { return {false, z}; }
  static CurvePoint inf() { return {true, 0}; }
  bool operator==(const CurvePoint& o) const {
    return infinite == o.infinite && (infinite || z == o.z);
  }
  bool operator<(const CurvePoint& o) const {
    if (infinite != o.infinite) return !infinite;  // finite points first
    if (infinite) return false;
    return z < o.z;
  }
  std::string str() const { return infinite ? "inf" : to_string(z); }
};

// Reduced fraction of polynomials with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
  RatFunc(Poly num, Poly den);

  static RatFunc t() { return RatFunc(Poly::t(), Poly(Rational(1))); }
  // (t - z1)^e1 * ... product of linear powers, exponents in Z
  static RatFunc linear_power_product(const std::vector<std::pair<Rational, Integer>>& factors);

  bool is_zero() const { return num_.is_zero(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc derivative() const;
  RatFunc pow(const Integer& e) const;  // negative allowed for nonzero f

  // vanishing order at a point; poles negative; at infinity deg(den)-deg(num).
  // f must be nonzero.
  int ord_at(const CurvePoint& p) const;

  // substitute t -> g(t)
  RatFunc compose(const RatFunc& g) const;

  std::string str() const;

 private:
  Poly num_, den_;
  void reduce();
};

int ord_at(const RatFunc& f, const CurvePoint& p);

}  // namespace sphroot

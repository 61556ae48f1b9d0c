#include "sphroot/ratfunc.hpp"

#include <sstream>

namespace sphroot {

Poly::Poly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::t() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::linear(const Rational& root) { return Poly(std::vector<Rational>{-root, 1}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw Error("UsageError", "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    c[i - 1] = Rational(Integer(static_cast<unsigned long>(i))) * coeffs_[i];
  }
  return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
  Rational r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("UsageError", "polynomial division by zero");
  Poly r = a;
  std::vector<Rational> q(a.coeffs_.size(), Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational f = r.leading() / b.leading();
    q[static_cast<std::size_t>(shift)] += f;
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      r.coeffs_[i + static_cast<std::size_t>(shift)] -= f * b.coeffs_[i];
    }
    r.trim();
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.monic();
  }
  return a.is_zero() ? Poly() : a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  Poly r = *this;
  Rational lead = r.leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Rational a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("UsageError", "rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    std::vector<Rational> n = num_.coeffs(), d = den_.coeffs();
    for (auto& c : n) c /= lead;
    for (auto& c : d) c /= lead;
    num_ = Poly(std::move(n));
    den_ = Poly(std::move(d));
  }
}

RatFunc RatFunc::linear_power_product(const std::vector<std::pair<Rational, Integer>>& factors) {
  Poly num(Rational(1)), den(Rational(1));
  for (const auto& [root, e] : factors) {
    if (e == 0) continue;
    Poly lin = Poly::linear(root);
    Integer n = e > 0 ? e : Integer(-e);
    if (!n.fits_slong_p()) throw Error("UsageError", "exponent too large");
    long k = n.get_si();
    Poly p(Rational(1));
    for (long i = 0; i < k; ++i) p = p * lin;
    if (e > 0)
      num = num * p;
    else
      den = den * p;
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error("UsageError", "division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::pow(const Integer& e) const {
  if (e == 0) return RatFunc(Rational(1));
  if (is_zero()) {
    if (e > 0) return RatFunc();
    throw Error("UsageError", "negative power of zero");
  }
  Integer n = e > 0 ? e : Integer(-e);
  if (!n.fits_slong_p()) throw Error("UsageError", "exponent too large");
  long k = n.get_si();
  RatFunc base = e > 0 ? *this : RatFunc(den_, num_);
  RatFunc r(Rational(1));
  for (long i = 0; i < k; ++i) r = r * base;
  return r;
}

int RatFunc::ord_at(const CurvePoint& p) const {
  if (is_zero()) throw Error("UsageError", "order of the zero function");
  if (p.infinite) return den_.degree() - num_.degree();
  auto count = [&](const Poly& f) {
    int k = 0;
    Poly g = f;
    Poly lin = Poly::linear(p.z);
    while (!g.is_zero()) {
      auto [q, r] = Poly::divmod(g, lin);
      if (!r.is_zero()) break;
      g = q;
      ++k;
    }
    return k;
  };
  return count(num_) - count(den_);
}

RatFunc RatFunc::compose(const RatFunc& g) const {
  auto eval_poly = [&](const Poly& p) {
    RatFunc r(Rational(0));
    for (int i = p.degree(); i >= 0; --i) r = r * g + RatFunc(p.coeff(i));
    return r;
  };
  return eval_poly(num_) / eval_poly(den_);
}

std::string RatFunc::str() const {
  if (den_ == Poly(Rational(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

int ord_at(const RatFunc& f, const CurvePoint& p) { return f.ord_at(p); }

}  // namespace sphroot

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

namespace sphroot {

using Integer = mpz_class;
using Rational = mpq_class;

// Base error type; `code` is stable across releases and mapped to CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Canonical "p/q" (or "p") rendering; mpq_class is always reduced with q > 0.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Strict parser for the file format: optional sign, digits, optional /digits, q > 0.
inline std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  bool seen_slash = false;
  std::size_t digits_before = 0, digits_after = 0;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash) return std::nullopt;
      seen_slash = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      (seen_slash ? digits_after : digits_before)++;
    } else {
      return std::nullopt;
    }
  }
  if (digits_before == 0 || (seen_slash && digits_after == 0)) return std::nullopt;
  Rational q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace sphroot

namespace Eigen {

template <>
struct NumTraits<sphroot::Integer> : GenericNumTraits<sphroot::Integer> {
  typedef sphroot::Integer Real;
  typedef sphroot::Integer NonInteger;
  typedef sphroot::Integer Nested;
  typedef sphroot::Integer Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<sphroot::Rational> : GenericNumTraits<sphroot::Rational> {
  typedef sphroot::Rational Real;
  typedef sphroot::Rational NonInteger;
  typedef sphroot::Rational Nested;
  typedef sphroot::Rational Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 120,
    MulCost = 100
  };
};

}  // namespace Eigen

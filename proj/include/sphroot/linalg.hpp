#pragma once

#include <optional>
#include <vector>

#include "sphroot/rational.hpp"

namespace sphroot {

using VecZ = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

VecQ to_rational(const VecZ& v);
VecZ numerators_after_clearing(const VecQ& v);  // v * lcm(denominators), as integers

// Least r > 0 with r*v integral; the paper's mu(v).
Integer mu_denominator(const VecQ& v);

// Divide by content gcd; zero vector stays zero. Does not change direction.
VecZ primitive(const VecZ& v);
// Primitive integer vector spanning the same ray as the rational input.
VecZ primitive_of(const VecQ& v);

Rational dot(const VecQ& a, const VecQ& b);
Rational dot(const VecZ& a, const VecQ& b);
Integer dot(const VecZ& a, const VecZ& b);

bool lex_less(const VecZ& a, const VecZ& b);
bool lex_less(const VecQ& a, const VecQ& b);

// Strict total order usable as std::map comparators.
struct VecZLess {
  bool operator()(const VecZ& a, const VecZ& b) const { return lex_less(a, b); }
};
struct VecQLess {
  bool operator()(const VecQ& a, const VecQ& b) const { return lex_less(a, b); }
};

std::string to_string(const VecZ& v);
std::string to_string(const VecQ& v);

// Exact Gaussian elimination.
int rank_of(MatQ a);
std::optional<VecQ> solve(const MatQ& a, const VecQ& b);  // one solution of a x = b
MatQ kernel_basis(const MatQ& a);                         // columns span ker(a)

// Smith normal form: u * a * v = d with u, v unimodular, d diagonal,
// d(0,0) | d(1,1) | ... Zero rows/cols trail.
struct SmithForm {
  MatZ u, d, v;
  MatZ u_inv, v_inv;
  int rank = 0;
};
SmithForm smith_form(const MatZ& a);

// Column-style Hermite normal form of the column lattice (independent columns out).
MatZ hnf_columns(const MatZ& a);

std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b);  // a x = b over Z
MatZ integer_kernel(const MatZ& a);  // saturated basis of ker(a) cap Z^n, columns

}  // namespace sphroot

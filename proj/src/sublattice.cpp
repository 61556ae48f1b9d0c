#include "sphroot/sublattice.hpp"

namespace sphroot {

Sublattice::Sublattice(int ambient_rank, MatZ basis, std::optional<VecZ> offset)
    : ambient_rank_(ambient_rank), basis_(std::move(basis)), offset_(std::move(offset)) {
  if (basis_.rows() != ambient_rank_) throw Error("UsageError", "sublattice basis rank mismatch");
  snf_ = smith_form(basis_);
  if (snf_.rank != basis_.cols()) throw Error("UsageError", "sublattice basis not independent");
}

Sublattice Sublattice::full(int rank) {
  return Sublattice(rank, MatZ::Identity(rank, rank));
}

Sublattice Sublattice::from_congruence(const VecZ& w, const Integer& modulus) {
  int n = static_cast<int>(w.size());
  // kernel of [w^T | -modulus] projected to the first n coordinates
  MatZ m(1, n + 1);
  for (int i = 0; i < n; ++i) m(0, i) = w(i);
  m(0, n) = -modulus;
  MatZ k = integer_kernel(m);
  MatZ proj(n, k.cols());
  for (Eigen::Index j = 0; j < k.cols(); ++j) {
    for (int i = 0; i < n; ++i) proj(i, j) = k(i, j);
  }
  MatZ h = hnf_columns(proj);
  return Sublattice(n, h);
}

bool Sublattice::member(const VecQ& v) const {
  if (v.size() != ambient_rank_) throw Error("UsageError", "sublattice member rank mismatch");
  VecQ w = v;
  if (offset_) w -= to_rational(*offset_);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (!is_integer(w(i))) return false;
  }
  VecZ b(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) b(i) = w(i).get_num();
  return solve_integer(basis_, b).has_value();
}

bool Sublattice::member(const VecZ& v) const { return member(to_rational(v)); }

Sublattice Sublattice::saturation() const {
  MatZ sat(ambient_rank_, snf_.rank);
  for (int j = 0; j < snf_.rank; ++j) sat.col(j) = snf_.u_inv.col(j);
  return Sublattice(ambient_rank_, hnf_columns(sat));
}

Integer Sublattice::index_in_saturation() const {
  Integer idx = 1;
  for (int i = 0; i < snf_.rank; ++i) idx *= snf_.d(i, i);
  return idx;
}

Sublattice::Quotient Sublattice::quotient() const {
  if (index_in_saturation() != 1)
    throw Error("UsageError", "quotient requires a saturated sublattice");
  int n = ambient_rank_, k = rank();
  Quotient q;
  q.map = MatZ(n - k, n);
  for (int i = k; i < n; ++i) q.map.row(i - k) = snf_.u.row(i);
  q.lift = MatZ(n, n - k);
  for (int j = k; j < n; ++j) q.lift.col(j - k) = snf_.u_inv.col(j);
  return q;
}

MatZ Sublattice::complement() const {
  if (index_in_saturation() != 1)
    throw Error("UsageError", "complement requires a saturated sublattice");
  int n = ambient_rank_, k = rank();
  MatZ c(n, n - k);
  for (int j = k; j < n; ++j) c.col(j - k) = snf_.u_inv.col(j);
  return c;
}

}  // namespace sphroot

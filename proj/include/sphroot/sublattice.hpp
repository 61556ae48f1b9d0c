#pragma once

#include "sphroot/linalg.hpp"

namespace sphroot {

// Affine sublattice offset + span_Z(basis columns); membership decided exactly
// through the Smith normal form of the basis matrix.
class Sublattice {
 public:
  Sublattice() = default;
  Sublattice(int ambient_rank, MatZ basis, std::optional<VecZ> offset = std::nullopt);

  static Sublattice full(int rank);
  // { m : <m, w> = 0 mod modulus } for a primitive integer w.
  static Sublattice from_congruence(const VecZ& w, const Integer& modulus);

  int ambient_rank() const { return ambient_rank_; }
  int rank() const { return static_cast<int>(basis_.cols()); }
  const MatZ& basis() const { return basis_; }
  const std::optional<VecZ>& offset() const { return offset_; }
  bool is_full() const { return rank() == ambient_rank_ && index_in_saturation() == 1 && !offset_; }

  bool member(const VecQ& v) const;
  bool member(const VecZ& v) const;

  Sublattice saturation() const;
  Integer index_in_saturation() const;

  // For a saturated sublattice S of Z^n: quotient map Z^n -> Z^{n-k} with
  // kernel S, plus a section (lift) with map*lift = identity.
  struct Quotient {
    MatZ map;   // (n-k) x n
    MatZ lift;  // n x (n-k)
  };
  Quotient quotient() const;

  // Saturated complement C with S (+) C = Z^n; throws if S is not saturated.
  MatZ complement() const;

 private:
  int ambient_rank_ = 0;
  MatZ basis_;  // columns, independent
  std::optional<VecZ> offset_;
  SmithForm snf_;
};

}  // namespace sphroot

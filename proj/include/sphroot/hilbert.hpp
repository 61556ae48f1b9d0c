#pragma once

#include "sphroot/cone.hpp"

namespace sphroot {

// Hilbert basis of C cap Z^n. Lineality is handled by passing to the pointed
// quotient; the result then contains +-basis vectors of the lineality lattice.
// Intended for dim(C) <= 4; throws Error("HilbertDimension", ...) above that.
std::vector<VecZ> hilbert_basis(const Cone& c);

}  // namespace sphroot

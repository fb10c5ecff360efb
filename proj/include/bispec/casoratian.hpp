#ifndef BISPEC_CASORATIAN_HPP
#define BISPEC_CASORATIAN_HPP

#include <vector>

#include "bispec/poly.hpp"

namespace bispec {

/// Casoratian determinant det(p_i(x - j)), i = 1..s, j = 0..s-1.
///
/// For pairwise distinct degrees d_i its degree is sum d_i - s(s-1)/2; with a
/// repeated degree it is strictly smaller. Throws std::invalid_argument for s = 0.
Poly casoratian(const std::vector<Poly>& polys);

}  // namespace bispec

#endif

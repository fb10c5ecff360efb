#ifndef BISPEC_COMBINATORICS_HPP
#define BISPEC_COMBINATORICS_HPP

#include <vector>

#include "bispec/poly.hpp"
#include "bispec/rational.hpp"

namespace bispec {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Rat poch(const Rat& a, long n);

/// Gamma(alpha+s)/Gamma(alpha) for integer s.
///
/// For s < 0 this is 1/(alpha+s)_{-s}, continued analytically; throws PoleError
/// when that Pochhammer product vanishes.
Rat gamma_ratio(const Rat& alpha, long s);

/// Generalized binomial a(a-1)...(a-k+1)/k!, zero for k < 0.
Rat binomial(const Rat& a, long k);

/// binom(x+l, l) = (x+1)(x+2)...(x+l)/l! as a polynomial of degree l.
Poly binom_poly(int l);

/// Coefficients w with p = sum_l w_l binom(x+l, l).
std::vector<Rat> to_binomial_basis(const Poly& p);
Poly from_binomial_basis(const std::vector<Rat>& w);

/// Checks, exactly for u = 0..u_max,
///   sum_{j=0}^{l-alpha-k} (-1)^j binom(alpha+j+k-l-1, j) binom(alpha+u, alpha+j) = binom(u+l-k, l-k).
/// Requires l >= alpha + k (throws std::invalid_argument otherwise).
bool combinatorial_identity_check(long alpha, long k, long l, long u_max);

}  // namespace bispec

#endif

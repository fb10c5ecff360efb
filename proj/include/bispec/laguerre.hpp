#ifndef BISPEC_LAGUERRE_HPP
#define BISPEC_LAGUERRE_HPP

#include <map>
#include <mutex>
#include <vector>

#include "bispec/poly.hpp"
#include "bispec/rational.hpp"

namespace bispec {

/// L_n^alpha(x) = sum_{j=0}^n (-x)^j/j! binom(n+alpha, n-j), with the binomial
/// taken through Pochhammer symbols so that alpha may be any rational.
Poly laguerre(int n, const Rat& alpha);

/// (L_n^alpha)^{(j)}(0) = (-1)^j binom(n+alpha, n-j); zero for j > n.
Rat laguerre_deriv_at_zero(int n, const Rat& alpha, int j);

/// c_j = (alpha-beta)_j / j!, j = 0..n, so that L_n^alpha = sum_j c_j L_{n-j}^beta.
std::vector<Rat> laguerre_connection(int n, const Rat& alpha, const Rat& beta);

/// Gamma(alpha)-normalized integral of L_n^alpha against the weight with
/// parameter alpha - l:
///
///     Gamma(alpha-l+1)/Gamma(alpha) * (l)_n/n!.
///
/// For l >= 1 the second factor is binom(n+l-1, l-1). Throws PoleError when
/// Gamma(alpha-l+1)/Gamma(alpha) has a pole.
Rat laguerre_weight_moment(int n, const Rat& alpha, int l);

/// Gamma(alpha+shift+j+1)/Gamma(alpha): the normalized moment of x^j under the
/// weight with parameter alpha + shift.
Rat monomial_moment(int j, const Rat& alpha, int shift);

/// Coefficients c_k with p = sum_k c_k L_k^alpha (index = k).
std::vector<Rat> expand_in_laguerre(const Poly& p, const Rat& alpha);

/// Append-only table of L_n^alpha for one alpha. Lookups are mutex-guarded so a
/// shared cache is safe for concurrent readers; results equal laguerre(n, alpha).
class LaguerreCache {
public:
    explicit LaguerreCache(Rat alpha) : alpha_(std::move(alpha)) {}
    LaguerreCache(const LaguerreCache& other);
    LaguerreCache& operator=(const LaguerreCache&) = delete;

    const Rat& alpha() const { return alpha_; }
    Poly get(int n) const;

private:
    Rat alpha_;
    mutable std::mutex mutex_;
    mutable std::map<int, Poly> table_;
};

}  // namespace bispec

#endif

#include "bispec/laguerre.hpp"

#include <stdexcept>

#include "bispec/combinatorics.hpp"

namespace bispec {

Poly laguerre(int n, const Rat& alpha) {
    if (n < 0) throw std::domain_error("laguerre: negative degree");
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        // binom(n+alpha, n-j) = (alpha+j+1)_{n-j} / (n-j)!
        Rat b = poch(alpha + Rat(j + 1), n - j) / factorial(n - j);
        Rat term = b / factorial(j);
        c[static_cast<std::size_t>(j)] = (j % 2) ? -term : term;
    }
    return Poly(std::move(c));
}

Rat laguerre_deriv_at_zero(int n, const Rat& alpha, int j) {
    if (n < 0 || j < 0) throw std::domain_error("laguerre_deriv_at_zero: negative index");
    if (j > n) return {};
    const Rat b = poch(alpha + Rat(j + 1), n - j) / factorial(n - j);
    return (j % 2) ? -b : b;
}

std::vector<Rat> laguerre_connection(int n, const Rat& alpha, const Rat& beta) {
    if (n < 0) throw std::domain_error("laguerre_connection: negative degree");
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[static_cast<std::size_t>(j)] = poch(alpha - beta, j) / factorial(j);
    return c;
}

Rat laguerre_weight_moment(int n, const Rat& alpha, int l) {
    if (n < 0) throw std::domain_error("laguerre_weight_moment: negative degree");
    // Only the L_0 term of the connection expansion to parameter alpha-l survives.
    return gamma_ratio(alpha, 1 - l) * poch(Rat(l), n) / factorial(n);
}

Rat monomial_moment(int j, const Rat& alpha, int shift) {
    if (j < 0) throw std::domain_error("monomial_moment: negative power");
    return gamma_ratio(alpha, static_cast<long>(shift) + j + 1);
}

std::vector<Rat> expand_in_laguerre(const Poly& p, const Rat& alpha) {
    if (p.is_zero()) return {};
    std::vector<Rat> c(static_cast<std::size_t>(p.degree()) + 1);
    Poly rest = p;
    while (!rest.is_zero()) {
        const int k = rest.degree();
        const Poly l = laguerre(k, alpha);
        const Rat ck = rest.leading() / l.leading();
        c[static_cast<std::size_t>(k)] = ck;
        rest.add_scaled(l, -ck);
    }
    return c;
}

LaguerreCache::LaguerreCache(const LaguerreCache& other) : alpha_(other.alpha_) {
    std::lock_guard lock(other.mutex_);
    table_ = other.table_;
}

Poly LaguerreCache::get(int n) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(n);
    if (it != table_.end()) return it->second;
    return table_.emplace(n, laguerre(n, alpha_)).first->second;
}

}  // namespace bispec

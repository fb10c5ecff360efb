#include "bispec/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "bispec/errors.hpp"

namespace bispec {

Rat poch(const Rat& a, long n) {
    if (n < 0) throw std::domain_error("poch: negative length");
    Rat r(1);
    Rat t = a;
    for (long k = 0; k < n; ++k) {
        r *= t;
        t += Rat(1);
    }
    return r;
}

Rat gamma_ratio(const Rat& alpha, long s) {
    if (s >= 0) return poch(alpha, s);
    const Rat d = poch(alpha + Rat(s), -s);
    if (d.is_zero())
        throw PoleError("gamma_ratio: Gamma(" + (alpha + Rat(s)).str() + ")/Gamma(" + alpha.str() +
                        ") has a pole in the numerator");
    return d.inverse();
}

Rat binomial(const Rat& a, long k) {
    if (k < 0) return {};
    return poch(a - Rat(k - 1), k) / factorial(k);
}

Poly binom_poly(int l) {
    if (l < 0) throw std::domain_error("binom_poly: negative index");
    Poly p = Poly::constant(Rat(1));
    for (int k = 1; k <= l; ++k) p = p * Poly{Rat(k), Rat(1)};
    return p * factorial(l).inverse();
}

std::vector<Rat> to_binomial_basis(const Poly& p) {
    if (p.is_zero()) return {};
    std::vector<Rat> w(static_cast<std::size_t>(p.degree()) + 1);
    Poly rest = p;
    // binom(x+l, l) has leading coefficient 1/l!, so peel from the top.
    while (!rest.is_zero()) {
        const int l = rest.degree();
        const Rat c = rest.leading() * factorial(l);
        w[static_cast<std::size_t>(l)] = c;
        rest.add_scaled(binom_poly(l), -c);
    }
    return w;
}

Poly from_binomial_basis(const std::vector<Rat>& w) {
    Poly p;
    for (std::size_t l = 0; l < w.size(); ++l)
        if (!w[l].is_zero()) p.add_scaled(binom_poly(static_cast<int>(l)), w[l]);
    return p;
}

bool combinatorial_identity_check(long alpha, long k, long l, long u_max) {
    if (alpha < 0 || k < 0 || u_max < 0) throw std::invalid_argument("combinatorial_identity_check: negative argument");
    if (l < alpha + k)
        throw std::invalid_argument("combinatorial_identity_check: needs l >= alpha + k (l=" + std::to_string(l) + ")");
    for (long u = 0; u <= u_max; ++u) {
        Rat lhs;
        for (long j = 0; j <= l - alpha - k; ++j) {
            Rat term = binomial(Rat(alpha + j + k - l - 1), j) * binomial(Rat(alpha + u), alpha + j);
            if (j % 2) term = -term;
            lhs += term;
        }
        if (lhs != binomial(Rat(u + l - k), l - k)) return false;
    }
    return true;
}

}  // namespace bispec

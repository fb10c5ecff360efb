// Test-only oracles and generators. Nothing here calls the library routine it
// is meant to check: determinants are Leibniz sums, binomial coordinates come
// from values at -1, -2, ..., and Gamma ratios are explicit products.
#ifndef BISPEC_TESTS_SUPPORT_HPP
#define BISPEC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "bispec/family.hpp"
#include "bispec/laguerre.hpp"
#include "bispec/laurent.hpp"
#include "bispec/parse.hpp"
#include "bispec/poly.hpp"
#include "bispec/rational.hpp"

namespace oracle {

using bispec::Poly;
using bispec::Rat;

inline Rat unit(int sign, Rat) { return Rat(sign); }
inline Poly unit(int sign, Poly) { return Poly::constant(Rat(sign)); }

template <class T>
T leibniz(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total{};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        T term = unit(inversions % 2 ? -1 : 1, T{});
        for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
        total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Gamma(alpha+s)/Gamma(alpha) by an explicit product; nullopt at a pole.
inline std::optional<Rat> gamma_ratio(const Rat& alpha, long s) {
    Rat r(1);
    if (s >= 0) {
        for (long k = 0; k < s; ++k) r = r * (alpha + Rat(k));
        return r;
    }
    for (long k = s; k < 0; ++k) {
        const Rat f = alpha + Rat(k);
        if (f.is_zero()) return std::nullopt;
        r = r / f;
    }
    return r;
}

inline Rat choose(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    Rat r(1);
    for (long i = 0; i < k; ++i) r = r * Rat(n - i, i + 1);
    return r;
}

/// Generalized binomial with rational top, as a falling product.
inline Rat choose(const Rat& a, long k) {
    if (k < 0) return Rat(0);
    Rat r(1);
    for (long i = 0; i < k; ++i) r = r * (a - Rat(i)) / Rat(i + 1);
    return r;
}

/// w with p = sum_l w_l binom(x+l, l), from p(-k) = sum_{l<k} (-1)^l C(k-1, l) w_l.
inline std::vector<Rat> binomial_coordinates(const Poly& p) {
    const int d = std::max(p.degree(), 0);
    std::vector<Rat> w(static_cast<std::size_t>(d) + 1);
    for (int k = 1; k <= d + 1; ++k) {
        Rat rest = p(Rat(-k));
        for (int l = 0; l < k - 1; ++l) {
            Rat c = choose(k - 1, l) * w[static_cast<std::size_t>(l)];
            rest = rest - (l % 2 ? -c : c);
        }
        const int l = k - 1;
        w[static_cast<std::size_t>(l)] = l % 2 ? -rest : rest;
    }
    return w;
}

/// Laguerre polynomial by the classical three-term recurrence.
inline Poly laguerre(int n, const Rat& alpha) {
    Poly prev;  // L_{-1} = 0
    Poly cur = Poly::constant(Rat(1));
    for (int k = 0; k < n; ++k) {
        Poly next = cur * Poly{Rat(2 * k + 1) + alpha, Rat(-1)} - prev * (Rat(k) + alpha);
        next *= Rat(1, k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Omega_G(x) = det(R_g(x - j)) by the Leibniz formula over Q[x].
inline Poly omega(const bispec::FamilySpec& spec) {
    const std::size_t m = spec.r_polys().size();
    std::vector<std::vector<Poly>> mat(m, std::vector<Poly>(m));
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t j = 0; j < m; ++j) mat[l][j] = spec.r_polys()[l].shifted(Rat(-static_cast<long>(j) - 1));
    return leibniz(mat);
}

/// q_n as the (m+1)x(m+1) determinant with first row L_{n-j} and rows R_g(n-j).
inline Poly q_direct(const bispec::FamilySpec& spec, int n) {
    const std::size_t m = spec.r_polys().size();
    std::vector<std::vector<Poly>> mat(m + 1, std::vector<Poly>(m + 1));
    for (std::size_t j = 0; j <= m; ++j) {
        const int k = n - static_cast<int>(j);
        mat[0][j] = k >= 0 ? oracle::laguerre(k, spec.alpha()) : Poly();
        for (std::size_t g = 0; g < m; ++g) mat[g + 1][j] = Poly::constant(spec.r_polys()[g](Rat(k)));
    }
    return leibniz(mat);
}

/// Termwise evaluation of <p, x^i>, i < m, straight from the generic form:
///   int p x^i x^{alpha-m} e^{-x} + int p U_i x^alpha e^{-x}, divided by Gamma(alpha),
/// with U_i assembled term by term. Throws std::domain_error at a pole.
inline Rat generic_moment(const bispec::FamilySpec& spec, const std::vector<Rat>& kappa_row, const Poly& p, int i) {
    const Rat& alpha = spec.alpha();
    const int m = static_cast<int>(spec.r_polys().size());
    auto gr = [&](long s) {
        auto v = oracle::gamma_ratio(alpha, s);
        if (!v) throw std::domain_error("pole");
        return *v;
    };
    Rat total;
    for (int e = 0; e <= p.degree(); ++e) {
        const Rat c = p.coeff(e);
        if (c.is_zero()) continue;
        total = total + c * gr(-m + e + i + 1);
        // U_i: m copies of -x^{-m+i}/m plus the kappa-weighted binomial tails.
        total = total - c * gr(e - m + i + 1);
        for (std::size_t g = 0; g < spec.r_polys().size(); ++g) {
            const auto w = binomial_coordinates(spec.r_polys()[g]);
            for (std::size_t l = 0; l < w.size(); ++l) {
                Rat poch(1);
                for (std::size_t t = 0; t < l; ++t) poch = poch * (alpha - Rat(static_cast<long>(l)) + Rat(static_cast<long>(t)));
                total = total + c * kappa_row[g] * poch * w[l] * gr(e - static_cast<long>(l));
            }
        }
    }
    return total;
}

/// Termwise evaluation of <p, x^i>, i < m, for integer alpha in 1..max G:
/// the shifted-weight integral of p (x^i)^{(xi_M)}, the Laurent part over
/// g < alpha, and point masses from g >= alpha.
inline Rat xi_moment(const bispec::FamilySpec& spec, const std::vector<Rat>& kappa_row, const Poly& p, int i) {
    const long a = *spec.alpha().to_long();
    const Rat alpha = spec.alpha();
    const int m = static_cast<int>(spec.r_polys().size());
    const long xi_major = std::max<long>(0, m - a);
    const long xi_minor = std::max<long>(0, a - m);
    auto gr = [&](long s) {
        auto v = oracle::gamma_ratio(alpha, s);
        if (!v) throw std::domain_error("pole");
        return *v;
    };
    Rat total;
    // (x^i)^{(xi_M)} = i!/(i-xi_M)! x^{i-xi_M}
    if (i >= xi_major) {
        Rat falling(1);
        for (long t = 0; t < xi_major; ++t) falling = falling * Rat(i - t);
        for (int e = 0; e <= p.degree(); ++e)
            if (!p.coeff(e).is_zero()) total = total + p.coeff(e) * falling * gr(xi_minor - a + e + i - xi_major + 1);
    }
    Rat lead_factor(1);
    for (long t = 0; t < xi_major; ++t) lead_factor = lead_factor * Rat(i - m + a + 1 + t);
    // Laurent weight, collected by power before integrating.
    std::map<long, Rat> weight;
    weight[-m + i] = weight[-m + i] - lead_factor;
    for (std::size_t g = 0; g < spec.r_polys().size(); ++g) {
        const long gg = spec.g_set()[g];
        const auto w = binomial_coordinates(spec.r_polys()[g]);
        const long top = gg < a ? gg : a - 1;
        for (long l = 0; l <= top; ++l) {
            Rat poch(1);
            for (long t = 0; t < l; ++t) poch = poch * (alpha - Rat(l) + Rat(t));
            weight[-l - 1] = weight[-l - 1] + kappa_row[g] * poch * w[static_cast<std::size_t>(l)];
        }
    }
    std::map<long, Rat> prod;
    for (int e = 0; e <= p.degree(); ++e)
        for (const auto& [f, c] : weight) prod[e + f] = prod[e + f] + p.coeff(e) * c;
    for (const auto& [e, c] : prod)
        if (!c.is_zero()) total = total + c * gr(e + 1);
    for (std::size_t g = 0; g < spec.r_polys().size(); ++g) {
        const long gg = spec.g_set()[g];
        if (gg < a) continue;
        const auto w = binomial_coordinates(spec.r_polys()[g]);
        for (long j = 0; j <= gg - a; ++j) {
            Rat s;
            for (long l = a + j; l <= gg; ++l) {
                Rat poch(1);
                for (long t = 0; t < j; ++t) poch = poch * (alpha - Rat(l) + Rat(t));
                s = s + poch * w[static_cast<std::size_t>(l)];
            }
            total = total + kappa_row[g] * p.coeff(static_cast<int>(j)) * s;
        }
    }
    return total;
}

}  // namespace oracle

namespace gen {

using bispec::Poly;
using bispec::Rat;

/// Integer in [lo, hi].
inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rat rational(std::mt19937_64& rng, long span = 9, long max_den = 5) {
    return Rat(uniform(rng, -span, span), uniform(rng, 1, max_den));
}

/// Big operands for field-axiom checks.
inline Rat big_rational(std::mt19937_64& rng) {
    mpz_class num(static_cast<long>(rng() >> 2));
    mpz_class den(static_cast<long>((rng() >> 2) | 1));
    num *= static_cast<long>(rng() >> 40);
    if (rng() & 1) num = -num;
    return Rat(mpq_class(num, den));
}

inline Poly poly(std::mt19937_64& rng, int degree, long span = 5) {
    std::vector<Rat> c;
    for (int k = 0; k <= degree; ++k) c.push_back(rational(rng, span, 3));
    while (c.back().is_zero()) c.back() = Rat(uniform(rng, 1, span));
    return Poly(std::move(c));
}

inline Poly integer_poly(std::mt19937_64& rng, int degree, long span = 3) {
    std::vector<Rat> c;
    for (int k = 0; k <= degree; ++k) c.push_back(Rat(uniform(rng, -span, span)));
    while (c.back().is_zero()) c.back() = Rat(uniform(rng, 1, span));
    return Poly(std::move(c));
}

/// Random admissible spec with |G| <= max_m and max G <= max_g.
inline bispec::FamilySpec admissible_spec(std::mt19937_64& rng, const Rat& alpha, int max_m = 3, int max_g = 6) {
    for (;;) {
        const int m = static_cast<int>(uniform(rng, 1, max_m));
        std::vector<int> pool(static_cast<std::size_t>(max_g));
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> g(pool.begin(), pool.begin() + m);
        std::sort(g.begin(), g.end());
        std::vector<Poly> r;
        for (int gi : g) r.push_back(integer_poly(rng, gi));
        auto spec = bispec::FamilySpec::make(alpha, g, r);
        const auto cert = bispec::certify_admissible(spec);
        if (!cert.pass()) continue;
        return spec;
    }
}

}  // namespace gen

#endif

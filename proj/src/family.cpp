#include "bispec/family.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "bispec/casoratian.hpp"
#include "bispec/combinatorics.hpp"
#include "bispec/errors.hpp"
#include "bispec/linalg.hpp"
#include "bispec/parse.hpp"

namespace bispec {

// ---------------------------------------------------------------------------
// FamilySpec

FamilySpec FamilySpec::make(Rat alpha, std::vector<int> g_set, std::vector<Poly> r_polys) {
    if (g_set.empty()) throw InvalidSpec("family: G must contain at least one element");
    if (g_set.size() != r_polys.size())
        throw InvalidSpec("family: " + std::to_string(g_set.size()) + " elements in G but " +
                          std::to_string(r_polys.size()) + " R polynomials");
    for (std::size_t i = 0; i < g_set.size(); ++i) {
        if (g_set[i] <= 0) throw InvalidSpec("family: G entries must be positive integers");
        if (i > 0 && g_set[i] <= g_set[i - 1]) throw InvalidSpec("family: G must be strictly increasing");
        if (r_polys[i].degree() != g_set[i])
            throw InvalidSpec("family: R_" + std::to_string(g_set[i]) + " = " + render_poly(r_polys[i]) +
                              " does not have degree " + std::to_string(g_set[i]));
    }
    FamilySpec s;
    s.alpha_ = std::move(alpha);
    s.g_ = std::move(g_set);
    s.r_ = std::move(r_polys);
    return s;
}

const Poly& FamilySpec::r_of(int g) const {
    for (std::size_t i = 0; i < g_.size(); ++i)
        if (g_[i] == g) return r_[i];
    throw std::out_of_range("family: " + std::to_string(g) + " is not in G");
}

FamilySpec FamilySpec::with_alpha(const Rat& alpha) const {
    FamilySpec s = *this;
    s.alpha_ = alpha;
    return s;
}

FamilySpec FamilySpec::with_r(std::size_t index, Poly r) const {
    std::vector<Poly> rs = r_;
    rs.at(index) = std::move(r);
    return make(alpha_, g_, std::move(rs));
}

bool FamilySpec::alpha_is_small_integer() const {
    const auto a = alpha_.to_long();
    return a && *a >= 1 && *a <= max_g();
}

// ---------------------------------------------------------------------------
// Casoratian and admissibility

Poly omega(const FamilySpec& spec) {
    std::vector<Poly> shifted;
    shifted.reserve(spec.r_polys().size());
    for (const auto& r : spec.r_polys()) shifted.push_back(r.shifted(Rat(-1)));
    return casoratian(shifted);
}

namespace {

constexpr long kMaxScan = 50'000'000;

mpz_class ceil_of(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q;
}

}  // namespace

AdmissibilityCertificate certify_admissible(const FamilySpec& spec) {
    AdmissibilityCertificate cert;
    cert.omega = omega(spec);
    if (cert.omega.is_zero()) throw DegenerateFamily("family: the Casoratian Omega_G is identically zero");

    const int d = cert.omega.degree();
    if (d == 0) {
        cert.root_bound = Rat(0);
        cert.integer_scan_bound = 0;
    } else {
        const Rat lead = cert.omega.leading();
        Rat max_ratio;
        Rat sum_ratio;
        for (int i = 0; i < d; ++i) {
            const Rat r = (cert.omega.coeff(i) / lead).abs();
            max_ratio = std::max(max_ratio, r);
            sum_ratio += r;
        }
        const Rat cauchy = Rat(1) + max_ratio;
        const Rat lagrange = std::max(Rat(1), sum_ratio);
        cert.root_bound = std::min(cauchy, lagrange);
        const mpz_class scan = ceil_of(cert.root_bound);
        if (scan > kMaxScan)
            throw Error("certify_admissible: root bound " + cert.root_bound.str() + " is too large to scan");
        cert.integer_scan_bound = scan.get_si();
    }
    for (long n = 0; n <= cert.integer_scan_bound; ++n) {
        const Rat v = cert.omega(Rat(n));
        if (v.is_zero()) {
            cert.failure = AdmissibilityCertificate::Failure{n, v};
            break;
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------
// beta and q_n

BetaRow beta(const FamilySpec& spec, int n) {
    const std::size_t m = static_cast<std::size_t>(spec.m());
    std::vector<RatVector> values(m, RatVector(m + 1));
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t i = 0; i <= m; ++i) values[g][i] = spec.r_polys()[g](Rat(n - static_cast<long>(i)));

    BetaRow row;
    row.n = n;
    row.values.resize(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        RatMatrix minor(m, m);
        for (std::size_t g = 0; g < m; ++g) {
            std::size_t c = 0;
            for (std::size_t i = 0; i <= m; ++i)
                if (i != j) minor(g, c++) = values[g][i];
        }
        const Rat d = determinant(std::move(minor));
        row.values[j] = (j % 2) ? -d : d;
    }
    return row;
}

namespace {

Poly assemble_q(const BetaRow& row, int m, const LaguerreCache& lag) {
    if (row.values.front().is_zero())
        throw DegenerateFamily("family: Omega_G(" + std::to_string(row.n) + ") = 0, so q_" + std::to_string(row.n) +
                               " drops degree");
    Poly q;
    for (int j = 0; j <= std::min(m, row.n); ++j) q.add_scaled(lag.get(row.n - j), row.values[static_cast<std::size_t>(j)]);
    return q;
}

}  // namespace

Poly q_poly(const FamilySpec& spec, int n) {
    if (n < 0) throw std::domain_error("q_poly: negative index");
    const LaguerreCache lag(spec.alpha());
    return assemble_q(beta(spec, n), spec.m(), lag);
}

QSequence::QSequence(FamilySpec spec) : spec_(std::move(spec)), laguerre_(spec_.alpha()) {}

const Poly& QSequence::operator[](int n) {
    if (n < 0) throw std::domain_error("QSequence: negative index");
    while (static_cast<int>(q_.size()) <= n) {
        const int k = static_cast<int>(q_.size());
        q_.push_back(assemble_q(beta(spec_, k), spec_.m(), laguerre_));
    }
    return q_[static_cast<std::size_t>(n)];
}

Rat QSequence::leading(int n) { return (*this)[n].leading(); }

// ---------------------------------------------------------------------------
// Reduced representation

namespace {

Rat coordinate(const Poly& p, int k, ReductionBasis basis) {
    if (basis == ReductionBasis::monomial) return p.coeff(k);
    const auto w = to_binomial_basis(p);
    return k < static_cast<int>(w.size()) ? w[static_cast<std::size_t>(k)] : Rat();
}

}  // namespace

FamilySpec reduce_representation(const FamilySpec& spec, ReductionBasis basis) {
    const auto& g = spec.g_set();
    std::vector<Poly> reduced;
    reduced.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        Poly r = spec.r_polys()[i];
        // Highest lower element first: each step only touches coordinates at or
        // below that element, and the lower reduced seeds are already clean.
        for (std::size_t k = i; k-- > 0;) {
            const Rat c = coordinate(r, g[k], basis);
            if (c.is_zero()) continue;
            r.add_scaled(reduced[k], -(c / coordinate(reduced[k], g[k], basis)));
        }
        reduced.push_back(std::move(r));
    }
    return FamilySpec::make(spec.alpha(), g, std::move(reduced));
}

// ---------------------------------------------------------------------------
// Presets

namespace {

std::vector<int> segment(int first, int count) {
    std::vector<int> g(static_cast<std::size_t>(count));
    for (int h = 0; h < count; ++h) g[static_cast<std::size_t>(h)] = first + h;
    return g;
}

// binom(x+alpha+h-1, alpha+h-1) + (h-1)! sum_{l=0}^{top} (-1)^l coef(h-l-1)/(alpha-l)_l binom(x+l, l)
template <class Coef>
Poly preset_seed(int alpha, int h, int top, Coef coef) {
    Poly r = binom_poly(alpha + h - 1);
    const Rat hf = factorial(h - 1);
    for (int l = 0; l <= top; ++l) {
        Rat c = hf * coef(h - l - 1) / poch(Rat(alpha - l), l);
        if (l % 2) c = -c;
        r.add_scaled(binom_poly(l), c);
    }
    return r;
}

}  // namespace

FamilySpec krall_preset(int alpha, int m, const std::vector<Rat>& a) {
    if (m < 1) throw InvalidPreset("krall preset: m must be positive");
    if (alpha < m) throw InvalidPreset("krall preset: needs alpha >= m (alpha=" + std::to_string(alpha) + ", m=" +
                                       std::to_string(m) + ")");
    if (static_cast<int>(a.size()) != m)
        throw InvalidPreset("krall preset: expected " + std::to_string(m) + " parameters a_0..a_{m-1}, got " +
                            std::to_string(a.size()));
    if (a.front().is_zero()) throw InvalidPreset("krall preset: a_0 must be nonzero");
    std::vector<Poly> r;
    for (int h = 1; h <= m; ++h)
        r.push_back(preset_seed(alpha, h, h - 1, [&](int idx) { return a[static_cast<std::size_t>(idx)]; }));
    return FamilySpec::make(Rat(alpha), segment(alpha, m), std::move(r));
}

FamilySpec degenerate_preset(int alpha, int m, const std::vector<Rat>& a_tilde) {
    if (alpha < 1) throw InvalidPreset("degenerate preset: alpha must be positive");
    if (alpha >= m)
        throw InvalidPreset("degenerate preset: needs alpha <= m-1 (alpha=" + std::to_string(alpha) + ", m=" +
                            std::to_string(m) + ")");
    if (static_cast<int>(a_tilde.size()) != alpha)
        throw InvalidPreset("degenerate preset: expected " + std::to_string(alpha) + " parameters a~_" +
                            std::to_string(m - alpha) + "..a~_" + std::to_string(m - 1) + ", got " +
                            std::to_string(a_tilde.size()));
    const int offset = m - alpha;
    std::vector<Poly> r;
    for (int h = 1; h <= m; ++h)
        r.push_back(preset_seed(alpha, h, h + alpha - m - 1,
                                [&](int idx) { return a_tilde[static_cast<std::size_t>(idx - offset)]; }));
    return FamilySpec::make(Rat(alpha), segment(alpha, m), std::move(r));
}

std::optional<KrallForm> match_krall_form(const FamilySpec& spec) {
    const auto alpha_l = spec.alpha().to_long();
    if (!alpha_l || *alpha_l < 1) return std::nullopt;
    const int alpha = static_cast<int>(*alpha_l);
    const int m = spec.m();
    if (spec.g_set() != segment(alpha, m)) return std::nullopt;

    const bool krall = alpha >= m;
    const FamilySpec red = reduce_representation(spec, ReductionBasis::binomial);
    std::map<int, Rat> params;
    for (int h = 1; h <= m; ++h) {
        const int g = alpha + h - 1;
        auto w = to_binomial_basis(red.r_polys()[static_cast<std::size_t>(h - 1)]);
        const Rat lead = w[static_cast<std::size_t>(g)];
        const int top = krall ? h - 1 : h + alpha - m - 1;
        const Rat hf = factorial(h - 1);
        for (int l = 0; l < g; ++l) {
            const Rat wl = w[static_cast<std::size_t>(l)] / lead;
            if (l > top) {
                if (!wl.is_zero()) return std::nullopt;
                continue;
            }
            // w_l = (h-1)! (-1)^l a_{h-l-1} / (alpha-l)_l
            Rat value = wl * poch(Rat(alpha - l), l) / hf;
            if (l % 2) value = -value;
            const int idx = h - l - 1;
            auto [it, inserted] = params.emplace(idx, value);
            if (!inserted && it->second != value) return std::nullopt;
        }
    }

    KrallForm form{krall ? KrallForm::Kind::krall : KrallForm::Kind::degenerate, alpha, m, {}};
    const int first = krall ? 0 : m - alpha;
    for (int idx = first; idx < m; ++idx) form.params.push_back(params.at(idx));
    if (krall && form.params.front().is_zero()) return std::nullopt;
    return form;
}

std::optional<FamilySpec> krall_quotient_family(const FamilySpec& degenerate, int n_check) {
    const auto alpha_l = degenerate.alpha().to_long();
    const int m = degenerate.m();
    if (!alpha_l || *alpha_l < 1 || *alpha_l >= m) return std::nullopt;
    const int alpha = static_cast<int>(*alpha_l);
    const int drop = m - alpha;
    // Target preset: Laguerre parameter m, alpha seeds.
    const int t_alpha = m;
    const int t_m = alpha;

    QSequence q(degenerate);
    const Poly x_drop = Poly::monomial(Rat(1), drop);
    std::vector<Poly> quotients;
    std::vector<std::vector<Rat>> lag_coeffs;
    for (int n = 0; n <= n_check; ++n) {
        auto [quot, rem] = divmod(q[n + drop], x_drop);
        if (!rem.is_zero()) return std::nullopt;
        auto c = expand_in_laguerre(quot, Rat(t_alpha));
        for (int k = 0; k + t_m < n; ++k)
            if (!c[static_cast<std::size_t>(k)].is_zero()) return std::nullopt;
        quotients.push_back(std::move(quot));
        lag_coeffs.push_back(std::move(c));
    }

    // Each target seed is binom(x+g, g) + sum_{l<t_m} t_l binom(x+l, l) and must
    // be annihilated by every full row: sum_j c_{n,n-j} R(n-j) = 0.
    std::vector<Rat> a(static_cast<std::size_t>(t_m));
    for (int h = 1; h <= t_m; ++h) {
        const int g = t_alpha + h - 1;
        RatMatrix sys(0, static_cast<std::size_t>(t_m));
        RatVector rhs;
        for (int n = t_m; n <= n_check; ++n) {
            RatVector row(static_cast<std::size_t>(t_m));
            Rat b;
            for (int j = 0; j <= t_m; ++j) {
                const Rat c = lag_coeffs[static_cast<std::size_t>(n)][static_cast<std::size_t>(n - j)];
                if (c.is_zero()) continue;
                const Rat at(n - j);
                for (int l = 0; l < t_m; ++l) row[static_cast<std::size_t>(l)] += c * binom_poly(l)(at);
                b -= c * binom_poly(g)(at);
            }
            sys.append_row(row);
            rhs.push_back(b);
        }
        RatVector t;
        try {
            t = *solve_linear(sys, rhs).particular;
        } catch (const InconsistentSystem&) {
            return std::nullopt;
        }
        a[static_cast<std::size_t>(h - 1)] = t[0] / factorial(h - 1);
    }
    if (a.front().is_zero()) return std::nullopt;

    FamilySpec target = krall_preset(t_alpha, t_m, a);
    QSequence tq(target);
    try {
        for (int n = 0; n <= n_check; ++n) {
            const Poly& qt = tq[n];
            const Poly& p = quotients[static_cast<std::size_t>(n)];
            if (p * qt.leading() != qt * p.leading()) return std::nullopt;
        }
    } catch (const DegenerateFamily&) {
        return std::nullopt;
    }
    return target;
}

}  // namespace bispec

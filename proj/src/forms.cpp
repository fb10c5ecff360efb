#include "bispec/forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bispec/combinatorics.hpp"
#include "bispec/errors.hpp"
#include "bispec/linalg.hpp"

namespace bispec {

std::vector<Rat> kappa_solve(const FamilySpec& spec, int i) {
    const int m = spec.m();
    if (i < 0 || i >= m) throw std::out_of_range("kappa_solve: row index out of range");
    const auto& r = spec.r_polys();
    RatMatrix a(0, r.size());
    RatVector b;
    for (int j = 1; j <= m - i; ++j) {
        RatVector row;
        for (const auto& rg : r) row.push_back(rg(Rat(-j)));
        a.append_row(row);
        b.push_back(Rat(j == m - i ? 1 : 0));
    }
    try {
        return *solve_linear(a, b).particular;
    } catch (const InconsistentSystem&) {
        throw NoSolution("kappa_solve: no kappa for row " + std::to_string(i) +
                         " (the values R_g(-j) are rank deficient)");
    }
}

KappaMatrix kappa_matrix(const FamilySpec& spec) {
    KappaMatrix k;
    for (int i = 0; i < spec.m(); ++i) k.rows.push_back(kappa_solve(spec, i));
    return k;
}

bool kappa_satisfies_conditions(const FamilySpec& spec, const KappaMatrix& kappa) {
    const int m = spec.m();
    if (static_cast<int>(kappa.rows.size()) != m) return false;
    for (int i = 0; i < m; ++i) {
        const auto& row = kappa.rows[static_cast<std::size_t>(i)];
        if (row.size() != spec.r_polys().size()) return false;
        for (int j = 1; j <= m - i; ++j) {
            Rat s;
            for (std::size_t g = 0; g < row.size(); ++g) s += row[g] * spec.r_polys()[g](Rat(-j));
            if ((j < m - i) != s.is_zero()) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::vector<Rat>> binomial_coordinates(const FamilySpec& spec) {
    std::vector<std::vector<Rat>> w;
    for (const auto& r : spec.r_polys()) w.push_back(to_binomial_basis(r));
    return w;
}

void check_row(const FamilySpec& spec, const std::vector<Rat>& row) {
    if (row.size() != spec.r_polys().size())
        throw std::invalid_argument("kappa row has " + std::to_string(row.size()) + " entries, expected " +
                                    std::to_string(spec.r_polys().size()));
}

// sum_g kappa^g sum_{l=0}^{top(g)} (alpha-l)_l w_l^g x^{-l-1}
LaurentPoly negative_part(const FamilySpec& spec, const std::vector<std::vector<Rat>>& w,
                          const std::vector<Rat>& kappa_row, int (*top)(int g, const Rat& alpha)) {
    const int max_g = spec.max_g();
    std::vector<Rat> c(static_cast<std::size_t>(max_g) + 1);  // c[l] multiplies x^{-l-1}
    for (std::size_t k = 0; k < w.size(); ++k) {
        const int g = spec.g_set()[k];
        const int t = top(g, spec.alpha());
        for (int l = 0; l <= t; ++l)
            c[static_cast<std::size_t>(l)] +=
                kappa_row[k] * poch(spec.alpha() - Rat(l), l) * w[k][static_cast<std::size_t>(l)];
    }
    std::reverse(c.begin(), c.end());
    return LaurentPoly(-max_g - 1, std::move(c));
}

int full_top(int g, const Rat&) { return g; }

int xi_top(int g, const Rat& alpha) {
    const long a = *alpha.to_long();
    return g < a ? g : static_cast<int>(a) - 1;
}

Rat integrate(const LaurentPoly& f, const Rat& alpha, long shift) {
    Rat v;
    f.for_each_term([&](int e, const Rat& c) { v += c * gamma_ratio(alpha, shift + e + 1); });
    return v;
}

Rat integrate(const Poly& f, const Rat& alpha, long shift) {
    Rat v;
    for (int e = 0; e <= f.degree(); ++e) {
        const Rat& c = f.coeffs()[static_cast<std::size_t>(e)];
        if (!c.is_zero()) v += c * gamma_ratio(alpha, shift + e + 1);
    }
    return v;
}

}  // namespace

LaurentPoly u_function(const FamilySpec& spec, const std::vector<Rat>& kappa_row, int i) {
    check_row(spec, kappa_row);
    // m copies of -x^{-m+i}/m
    LaurentPoly u = LaurentPoly::monomial(Rat(-1), -spec.m() + i);
    u += negative_part(spec, binomial_coordinates(spec), kappa_row, full_top);
    return u;
}

LaurentPoly u_function_alt(const FamilySpec& spec, const KappaMatrix& kappa, int i) {
    const int m = spec.m();
    const auto& row = kappa.rows.at(static_cast<std::size_t>(i));
    check_row(spec, row);
    const auto w = binomial_coordinates(spec);
    LaurentPoly u = LaurentPoly::monomial(Rat(-1), -m + i);
    for (int l = m - i - 1; l <= spec.max_g(); ++l) {
        Rat s;
        for (std::size_t k = 0; k < w.size(); ++k)
            if (spec.g_set()[k] >= l) s += row[k] * w[k][static_cast<std::size_t>(l)];
        if (!s.is_zero()) u += LaurentPoly::monomial(poch(spec.alpha() - Rat(l), l) * s, -l - 1);
    }
    return u;
}

// ---------------------------------------------------------------------------

BilinearForm::BilinearForm(FamilySpec spec, KappaMatrix kappa, FormVariant variant)
    : spec_(std::move(spec)), kappa_(std::move(kappa)), variant_(variant) {
    if (static_cast<int>(kappa_.rows.size()) != spec_.m())
        throw std::invalid_argument("BilinearForm: kappa needs " + std::to_string(spec_.m()) + " rows");
    for (const auto& row : kappa_.rows) check_row(spec_, row);
    w_ = binomial_coordinates(spec_);
    const int m = spec_.m();

    if (variant_ == FormVariant::generic) {
        for (int i = 0; i < m; ++i) weights_.push_back(u_function(spec_, kappa_.rows[static_cast<std::size_t>(i)], i));
        return;
    }

    const int alpha = static_cast<int>(*spec_.alpha().to_long());
    xi_major_ = std::max(0, m - alpha);
    xi_minor_ = std::max(0, alpha - m);
    for (int i = 0; i < m; ++i) {
        const auto& row = kappa_.rows[static_cast<std::size_t>(i)];
        LaurentPoly w = LaurentPoly::monomial(-poch(Rat(i - m + alpha + 1), xi_major_), -m + i);
        w += negative_part(spec_, w_, row, xi_top);
        weights_.push_back(std::move(w));

        std::vector<Rat> d(static_cast<std::size_t>(spec_.max_g() - alpha) + 1);
        for (std::size_t k = 0; k < w_.size(); ++k) {
            const int g = spec_.g_set()[k];
            if (g < alpha) continue;
            for (int j = 0; j <= g - alpha; ++j) {
                Rat s;
                for (int l = alpha + j; l <= g; ++l)
                    s += poch(Rat(alpha - l), j) * w_[k][static_cast<std::size_t>(l)];
                d[static_cast<std::size_t>(j)] += row[k] * s;
            }
        }
        discrete_.push_back(std::move(d));
    }
}

BilinearForm BilinearForm::generic(FamilySpec spec, KappaMatrix kappa) {
    if (spec.alpha().is_integer() && spec.alpha() <= Rat(spec.max_g()))
        throw PoleError("generic form: alpha = " + spec.alpha().str() + " is an integer <= max G = " +
                        std::to_string(spec.max_g()));
    return BilinearForm(std::move(spec), std::move(kappa), FormVariant::generic);
}

BilinearForm BilinearForm::xi(FamilySpec spec, KappaMatrix kappa) {
    if (!spec.alpha_is_small_integer())
        throw VariantError("xi form: alpha = " + spec.alpha().str() + " is not an integer in 1.." +
                           std::to_string(spec.max_g()));
    return BilinearForm(std::move(spec), std::move(kappa), FormVariant::xi);
}

BilinearForm BilinearForm::canonical(const FamilySpec& spec) {
    KappaMatrix k = kappa_matrix(spec);
    if (spec.alpha_is_small_integer()) return xi(spec, std::move(k));
    return generic(spec, std::move(k));
}

Rat BilinearForm::operator()(const Poly& p, const Poly& q) const {
    return variant_ == FormVariant::generic ? inner_generic(*this, p, q) : inner_xi(*this, p, q);
}

Rat inner_generic(const BilinearForm& form, const Poly& p, const Poly& q) {
    if (form.variant_ != FormVariant::generic) throw VariantError("inner_generic called on an xi form");
    const Rat& alpha = form.spec_.alpha();
    const int m = form.spec_.m();
    Rat v = integrate(p * q, alpha, -m);
    for (int i = 0; i < m && i <= q.degree(); ++i) {
        const Rat qi = q.coeff(i);
        if (!qi.is_zero()) v += qi * integrate(p * form.weights_[static_cast<std::size_t>(i)], alpha, 0);
    }
    return v;
}

Rat inner_xi(const BilinearForm& form, const Poly& p, const Poly& q) {
    if (form.variant_ != FormVariant::xi) throw VariantError("inner_xi called on a generic form");
    const Rat& alpha = form.spec_.alpha();
    const long a = *alpha.to_long();
    const int m = form.spec_.m();
    Rat v = integrate(p * q.derivative(form.xi_major_), alpha, form.xi_minor_ - a);
    for (int i = 0; i < m && i <= q.degree(); ++i) {
        const Rat qi = q.coeff(i);
        if (qi.is_zero()) continue;
        Rat s = integrate(p * form.weights_[static_cast<std::size_t>(i)], alpha, 0);
        const auto& d = form.discrete_[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < d.size(); ++j) s += d[j] * p.coeff(static_cast<int>(j));
        v += qi * s;
    }
    return v;
}

Rat closed_form_moment(const FamilySpec& spec, const std::vector<Rat>& kappa_row, int k, int u) {
    if (k < 0 || u < k) throw std::domain_error("closed_form_moment: needs 0 <= k <= u");
    check_row(spec, kappa_row);
    const Rat& alpha = spec.alpha();
    Rat v;
    for (std::size_t idx = 0; idx < kappa_row.size(); ++idx) {
        if (kappa_row[idx].is_zero()) continue;
        const int g = spec.g_set()[idx];
        const auto w = to_binomial_basis(spec.r_polys()[idx]);
        Rat s;
        for (int l = k; l <= g; ++l)
            s += poch(alpha - Rat(l), k) * w[static_cast<std::size_t>(l)] * binomial(Rat(u + l - k), l - k);
        v += kappa_row[idx] * s;
    }
    return v;
}

OrthoReport ortho_check(const BilinearForm& form, int n_max) {
    OrthoReport rep;
    rep.n_max = n_max;
    QSequence q(form.spec());
    for (int n = 0; n <= n_max; ++n) {
        for (int i = 0; i <= n; ++i) {
            OrthoEntry e{n, i, form(q[n], q[i])};
            const bool bad = (i < n) != e.value.is_zero();
            if (bad && !rep.first_violation) rep.first_violation = e;
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

OrthoReport monomial_ortho_check(const BilinearForm& form, int n_max) {
    OrthoReport rep;
    rep.n_max = n_max;
    QSequence q(form.spec());
    for (int n = form.spec().m(); n <= n_max; ++n) {
        for (int i = 0; i < n; ++i) {
            OrthoEntry e{n, i, form(q[n], Poly::monomial(Rat(1), i))};
            if (!e.value.is_zero() && !rep.first_violation) rep.first_violation = e;
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

}  // namespace bispec

#ifndef BISPEC_FORMS_HPP
#define BISPEC_FORMS_HPP

#include <optional>
#include <vector>

#include "bispec/family.hpp"
#include "bispec/laurent.hpp"
#include "bispec/poly.hpp"
#include "bispec/rational.hpp"

namespace bispec {

/// kappa[i][k] is kappa_i^g for g = g_set()[k], i = 0..m-1.
struct KappaMatrix {
    std::vector<std::vector<Rat>> rows;

    friend bool operator==(const KappaMatrix&, const KappaMatrix&) = default;
};

/// Solves sum_g kappa^g R_g(-j) = 0 for j = 1..m-1-i together with the
/// normalization sum_g kappa^g R_g(-m+i) = 1. Free variables (in G order) are
/// set to zero. Throws NoSolution when the system is inconsistent.
std::vector<Rat> kappa_solve(const FamilySpec& spec, int i);

/// All rows of kappa_solve.
KappaMatrix kappa_matrix(const FamilySpec& spec);

/// True when every row satisfies the vanishing conditions and has a nonzero
/// value at -m+i.
bool kappa_satisfies_conditions(const FamilySpec& spec, const KappaMatrix& kappa);

/// U_i = sum_g ( -x^{-m+i}/m + kappa^g sum_{l=0}^g (alpha-l)_l w_l^g x^{-l-1} ),
/// with w^g the coefficients of R_g in the basis binom(x+l, l).
LaurentPoly u_function(const FamilySpec& spec, const std::vector<Rat>& kappa_row, int i);

/// -x^{-m+i} + sum_{l=m-i-1}^{max G} (alpha-l)_l x^{-l-1} sum_{g>=l} kappa_i^g w_l^g.
/// Agrees with u_function only when the kappa row satisfies the vanishing conditions.
LaurentPoly u_function_alt(const FamilySpec& spec, const KappaMatrix& kappa, int i);

enum class FormVariant {
    /// alpha is not an integer <= max G.
    generic,
    /// alpha is an integer in 1..max G.
    xi,
};

/// Bilinear form <p, q> for which the q_n are orthogonal, with all values
/// divided by Gamma(alpha) so that they are rational.
class BilinearForm {
public:
    /// Throws PoleError if alpha is an integer <= max G.
    static BilinearForm generic(FamilySpec spec, KappaMatrix kappa);
    /// Throws VariantError unless alpha is an integer in 1..max G.
    static BilinearForm xi(FamilySpec spec, KappaMatrix kappa);
    /// The canonical kappa_matrix and the variant dictated by alpha.
    static BilinearForm canonical(const FamilySpec& spec);

    const FamilySpec& spec() const { return spec_; }
    const KappaMatrix& kappa() const { return kappa_; }
    FormVariant variant() const { return variant_; }
    /// xi_M = max(0, m-alpha), xi_m = max(0, alpha-m); both zero for the generic variant.
    int xi_major() const { return xi_major_; }
    int xi_minor() const { return xi_minor_; }

    /// Dispatches on variant().
    Rat operator()(const Poly& p, const Poly& q) const;

private:
    BilinearForm(FamilySpec spec, KappaMatrix kappa, FormVariant variant);

    friend Rat inner_generic(const BilinearForm&, const Poly&, const Poly&);
    friend Rat inner_xi(const BilinearForm&, const Poly&, const Poly&);

    FamilySpec spec_;
    KappaMatrix kappa_;
    FormVariant variant_;
    int xi_major_ = 0;
    int xi_minor_ = 0;
    std::vector<std::vector<Rat>> w_;
    // Per i: U_i (generic) or the integral part of the xi form.
    std::vector<LaurentPoly> weights_;
    // xi form only: the point-mass coefficient of p^{(j)}(0)/j! for each i.
    std::vector<std::vector<Rat>> discrete_;
};

/// Generic-variant value; throws VariantError on an xi form.
Rat inner_generic(const BilinearForm& form, const Poly& p, const Poly& q);

/// Integer-alpha value: the integral against x^{xi_m} e^{-x} of p q^{(xi_M)}, the
/// Laurent part over g < alpha, and the point masses at 0 coming from g >= alpha.
/// Throws VariantError on a generic form.
Rat inner_xi(const BilinearForm& form, const Poly& p, const Poly& q);

/// sum_g kappa^g sum_{l=k}^g (alpha-l)_k w_l^g binom(u+l-k, l-k): the value of
/// <x^k L_u^alpha, x^i> for u >= k. Throws std::domain_error if u < k.
Rat closed_form_moment(const FamilySpec& spec, const std::vector<Rat>& kappa_row, int k, int u);

struct OrthoEntry {
    int n;
    int i;
    Rat value;
};

struct OrthoReport {
    int n_max = 0;
    /// <q_n, q_i> for 0 <= i <= n <= n_max, row by row.
    std::vector<OrthoEntry> entries;
    /// First entry with i < n and a nonzero value, or i = n and a zero value.
    std::optional<OrthoEntry> first_violation;

    bool pass() const { return !first_violation.has_value(); }
};

/// Checks <q_n, q_i> = 0 for i < n <= n_max and <q_n, q_n> != 0.
OrthoReport ortho_check(const BilinearForm& form, int n_max);

/// Checks <q_n, x^i> = 0 for m <= n <= n_max, i < n. Holds for any kappa, so
/// the diagonal is not inspected; entries hold <q_n, x^i>.
OrthoReport monomial_ortho_check(const BilinearForm& form, int n_max);

}  // namespace bispec

#endif

#ifndef BISPEC_FAMILY_HPP
#define BISPEC_FAMILY_HPP

#include <deque>
#include <optional>
#include <vector>

#include "bispec/laguerre.hpp"
#include "bispec/poly.hpp"
#include "bispec/rational.hpp"

namespace bispec {

/// Input datum of the construction: the Laguerre parameter alpha, a strictly
/// increasing set G of positive integers, and one polynomial R_g of exact
/// degree g for each g in G.
///
/// Leading coefficients of R_g are not normalized; rescaling R_g only rescales q_n.
class FamilySpec {
public:
    /// Validates the invariants; throws InvalidSpec.
    static FamilySpec make(Rat alpha, std::vector<int> g_set, std::vector<Poly> r_polys);

    const Rat& alpha() const { return alpha_; }
    const std::vector<int>& g_set() const { return g_; }
    /// R polynomials aligned with g_set().
    const std::vector<Poly>& r_polys() const { return r_; }
    int m() const { return static_cast<int>(g_.size()); }
    int max_g() const { return g_.back(); }
    /// R_g for g in G; throws std::out_of_range otherwise.
    const Poly& r_of(int g) const;

    FamilySpec with_alpha(const Rat& alpha) const;
    FamilySpec with_r(std::size_t index, Poly r) const;

    /// True when alpha is a positive integer not exceeding max G.
    bool alpha_is_small_integer() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    FamilySpec() = default;
    Rat alpha_;
    std::vector<int> g_;
    std::vector<Poly> r_;
};

/// Omega_G(x) = det(R_{g_l}(x - j)), l, j = 1..m.
Poly omega(const FamilySpec& spec);

struct AdmissibilityCertificate {
    struct Failure {
        long n;
        Rat value;
    };

    Poly omega;
    /// Every real root of omega lies in [-bound, bound].
    Rat root_bound;
    /// Integers 0..integer_scan_bound were checked exactly.
    long integer_scan_bound = 0;
    /// Empty on pass: omega(n) != 0 for every integer n >= 0.
    std::optional<Failure> failure;

    bool pass() const { return !failure.has_value(); }
};

/// Certifies omega(n) != 0 for all integers n >= 0: a root bound B (the smaller
/// of the Cauchy and Lagrange bounds on the monic rescaling) reduces the claim to
/// an exact scan of 0..ceil(B). Throws DegenerateFamily if omega is identically zero.
AdmissibilityCertificate certify_admissible(const FamilySpec& spec);

struct BetaRow {
    int n = 0;
    /// beta_{n,0..m}
    std::vector<Rat> values;
};

/// beta_{n,j} = (-1)^j det(R_g(n-i))_{g in G, i = 0..m, i != j}.
BetaRow beta(const FamilySpec& spec, int n);

/// q_n = sum_{j=0}^{min(m,n)} beta_{n,j} L_{n-j}^alpha, of exact degree n with
/// leading coefficient (-1)^n omega(n)/n!. Throws DegenerateFamily when omega(n) = 0.
Poly q_poly(const FamilySpec& spec, int n);

/// Lazily extended q_0, q_1, ... for one spec. Not synchronized: use one per thread.
class QSequence {
public:
    explicit QSequence(FamilySpec spec);

    const FamilySpec& spec() const { return spec_; }
    /// q_n, building and memoizing everything up to n. References stay valid.
    const Poly& operator[](int n);
    /// (-1)^n omega(n)/n!; throws DegenerateFamily if zero.
    Rat leading(int n);

private:
    FamilySpec spec_;
    LaguerreCache laguerre_;
    std::deque<Poly> q_;  // stable references while growing
};

enum class ReductionBasis {
    /// No monomial x^h with h in G, h < g, in R_g.
    monomial,
    /// No binom(x+h, h) with h in G, h < g, in the binomial expansion of R_g.
    binomial,
};

/// Equivalent spec with R_g replaced by R_g + sum_{h<g} zeta_{g,h} R_h so that
/// the chosen coordinates vanish. Leaves every q_n and beta_{n,j} unchanged.
FamilySpec reduce_representation(const FamilySpec& spec, ReductionBasis basis = ReductionBasis::monomial);

/// Krall-Laguerre seeds: alpha >= m, G = {alpha, ..., alpha+m-1},
///     R_{g_h} = binom(x+alpha+h-1, alpha+h-1) + (h-1)! sum_{l=0}^{h-1} (-1)^l a_{h-l-1}/(alpha-l)_l binom(x+l, l).
/// Throws InvalidPreset if alpha < m, a.size() != m or a_0 = 0.
FamilySpec krall_preset(int alpha, int m, const std::vector<Rat>& a);

/// Degenerate seeds for 1 <= alpha <= m-1: same shape as krall_preset, with the
/// inner sum cut at l = h+alpha-m-1. Only a~_{m-alpha}, ..., a~_{m-1} enter, and
/// a_tilde holds exactly those alpha values in that order. Throws InvalidPreset.
FamilySpec degenerate_preset(int alpha, int m, const std::vector<Rat>& a_tilde);

/// Result of matching a spec against the preset shapes.
struct KrallForm {
    enum class Kind { krall, degenerate };
    Kind kind;
    int alpha;
    int m;
    /// a (krall) or a~_{m-alpha..m-1} (degenerate), in the preset argument order.
    std::vector<Rat> params;
};

/// Decides whether the spec is, up to the invariance R_g -> R_g + lower R's and
/// rescaling, one of the two preset shapes. Requires a positive integer alpha
/// and G = {alpha, ..., alpha+m-1}; returns nullopt otherwise.
std::optional<KrallForm> match_krall_form(const FamilySpec& spec);

/// For a degenerate spec (integer alpha < m), divides q_{n+m-alpha} by x^{m-alpha}
/// and identifies the quotient sequence with a Krall preset of parameters
/// (alpha' = m, m' = alpha): returns the krall_preset spec whose q_n are
/// proportional to the quotients for every n <= n_check, or nullopt if the
/// quotients are not polynomials or match no such preset.
std::optional<FamilySpec> krall_quotient_family(const FamilySpec& degenerate, int n_check);

}  // namespace bispec

#endif

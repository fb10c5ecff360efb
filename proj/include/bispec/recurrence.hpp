#ifndef BISPEC_RECURRENCE_HPP
#define BISPEC_RECURRENCE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bispec/family.hpp"
#include "bispec/poly.hpp"
#include "bispec/rational.hpp"

namespace bispec {

/// Sparse coefficients: index -> nonzero value.
using SparseVector = std::map<int, Rat>;

/// c_k with p = sum_k c_k q_k, by back-substitution from the top degree.
/// Throws DegenerateFamily if some q_k with k <= deg p drops degree.
SparseVector expand_in_q(QSequence& q, const Poly& p);
SparseVector expand_in_q(const FamilySpec& spec, const Poly& p);

struct RecurrenceRow {
    int n = 0;
    /// j -> gamma_{n,j}, with Q q_n = sum_j gamma_{n,j} q_{n+j}.
    SparseVector gamma;

    Rat at(int j) const;
};

struct RecurrenceTable {
    Poly q_mult;
    int n_min = 0;
    int n_max = -1;
    std::vector<RecurrenceRow> rows;

    const RecurrenceRow& row(int n) const { return rows.at(static_cast<std::size_t>(n - n_min)); }
    /// Smallest s with gamma_{n,j} = 0 for every |j| > s over all rows.
    int observed_band() const;
};

RecurrenceTable recurrence_table(QSequence& q, const Poly& q_mult, int n_min, int n_max);
RecurrenceTable recurrence_table(const FamilySpec& spec, const Poly& q_mult, int n_min, int n_max);

/// True iff every row has gamma_{n,j} = 0 for |j| > s, gamma_{n,s} != 0, and
/// gamma_{n,-s} != 0 whenever n >= lower_from (default s).
bool verify_band(const RecurrenceTable& table, int s, std::optional<int> lower_from = std::nullopt);

/// First n at which gamma_{n,-s} is expected to be nonzero: s, or s + max(0, m-alpha)
/// when alpha is an integer in 1..max G. Below that the derivative in the
/// integer-alpha form annihilates q_{n-s}, and the lower coefficient may vanish.
int lower_extreme_start(const FamilySpec& spec, int s);

/// Reconstructs sum_j gamma_{n,j} q_{n+j} - Q q_n for every row; true iff all vanish.
bool verify_table_exact(QSequence& q, const RecurrenceTable& table);

struct ThreeTermResult {
    int n_max = 0;
    bool admissible = true;
    bool band_ok = false;
    bool favard_ok = false;
    /// Human-readable reason on failure.
    std::string reason;
    /// x q_n = a_n q_{n+1} + b_n q_n + c_n q_{n-1}; filled for every computed row.
    std::vector<Rat> a, b, c;

    bool pass() const { return admissible && band_ok && favard_ok; }
};

/// Expands x q_n for n = 0..n_max. Passes iff the band is [-1, 1] and
/// c_n != 0 for 1 <= n <= n_max. A family whose q_n drops degree fails.
ThreeTermResult three_term_test(const FamilySpec& spec, int n_max);

struct ObstructionResult {
    enum class Status { obstructed, inconclusive, not_applicable };
    Status status = Status::inconclusive;
    /// Lowest power of Q.
    int u = 0;
    std::optional<int> witness;
    int n_check = 0;
    /// n in [m, n_check] for which <Q q_n, 1> != 0 under the witness form.
    std::vector<int> nonzero_n;
    /// Every such n needs a coefficient of Q q_n below index m, i.e. a band >= n-m+1.
    bool cross_check_ok = false;
    /// Largest lower band forced by the table over n <= n_check.
    int forced_band = 0;
};

/// For alpha not an integer <= max G and Q != 0 with lowest power u, looks for
/// g in G with g-u >= 0 and g-u not in G. When one exists, no recurrence of
/// finite band exists; the claim is cross-checked against the table up to n_check.
ObstructionResult obstruction_test(const FamilySpec& spec, const Poly& q_mult, int n_check);

struct AlgebraProbeResult {
    int degree_cap = 0;
    int band = 0;
    int n_max = 0;
    /// Reduced-echelon basis, pivots ascending in degree, each monic at its free degree.
    std::vector<Poly> basis;
};

int default_probe_nmax(const FamilySpec& spec, int degree_cap);

/// Polynomials Q of degree <= d with gamma_{n,j}(Q) = 0 for -n <= j < -B, n <= N.
/// band defaults to d and n_max to default_probe_nmax.
AlgebraProbeResult algebra_probe(const FamilySpec& spec, int degree_cap, std::optional<int> band = std::nullopt,
                                 std::optional<int> n_max = std::nullopt);

/// Re-checks every basis element with rows up to n_max: gamma_{n,j} = 0 for j < -band.
bool probe_holds_up_to(const FamilySpec& spec, const AlgebraProbeResult& probe, int n_max);

/// max{m, max G - alpha + 1, alpha}; throws std::domain_error unless alpha is an integer in 1..max G.
int rho(const FamilySpec& spec);

struct RhoRecurrence {
    int rho = 0;
    int band = 0;
    RecurrenceTable table;
    bool band_ok = false;
};

/// Table for Q = x^rho p, n = 0..n_max, checked against band deg p + rho.
RhoRecurrence rho_recurrence(const FamilySpec& spec, const Poly& p, int n_max);

}  // namespace bispec

#endif

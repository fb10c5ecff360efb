#include "bispec/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

#include "bispec/errors.hpp"
#include "bispec/forms.hpp"
#include "bispec/linalg.hpp"

namespace bispec {

SparseVector expand_in_q(QSequence& q, const Poly& p) {
    SparseVector c;
    Poly rest = p;
    while (!rest.is_zero()) {
        const int k = rest.degree();
        const Poly& qk = q[k];
        const Rat ck = rest.leading() / qk.leading();
        rest.add_scaled(qk, -ck);
        c.emplace(k, ck);
    }
    return c;
}

SparseVector expand_in_q(const FamilySpec& spec, const Poly& p) {
    QSequence q(spec);
    return expand_in_q(q, p);
}

Rat RecurrenceRow::at(int j) const {
    auto it = gamma.find(j);
    return it == gamma.end() ? Rat() : it->second;
}

int RecurrenceTable::observed_band() const {
    int s = 0;
    for (const auto& r : rows)
        for (const auto& [j, v] : r.gamma) s = std::max(s, std::abs(j));
    return s;
}

RecurrenceTable recurrence_table(QSequence& q, const Poly& q_mult, int n_min, int n_max) {
    if (n_min < 0 || n_max < n_min) throw std::invalid_argument("recurrence_table: bad n range");
    RecurrenceTable t;
    t.q_mult = q_mult;
    t.n_min = n_min;
    t.n_max = n_max;
    for (int n = n_min; n <= n_max; ++n) {
        RecurrenceRow row;
        row.n = n;
        for (auto& [k, v] : expand_in_q(q, q_mult * q[n])) row.gamma.emplace(k - n, std::move(v));
        t.rows.push_back(std::move(row));
    }
    return t;
}

RecurrenceTable recurrence_table(const FamilySpec& spec, const Poly& q_mult, int n_min, int n_max) {
    QSequence q(spec);
    return recurrence_table(q, q_mult, n_min, n_max);
}

bool verify_band(const RecurrenceTable& table, int s, std::optional<int> lower_from) {
    if (s < 0) return false;
    const int from = lower_from.value_or(s);
    for (const auto& r : table.rows) {
        for (const auto& [j, v] : r.gamma)
            if (std::abs(j) > s) return false;
        if (r.at(s).is_zero()) return false;
        if (r.n >= from && r.at(-s).is_zero()) return false;
    }
    return true;
}

int lower_extreme_start(const FamilySpec& spec, int s) {
    if (!spec.alpha_is_small_integer()) return s;
    return s + std::max(0, spec.m() - static_cast<int>(*spec.alpha().to_long()));
}

bool verify_table_exact(QSequence& q, const RecurrenceTable& table) {
    for (const auto& r : table.rows) {
        Poly diff = -(table.q_mult * q[r.n]);
        for (const auto& [j, v] : r.gamma) diff.add_scaled(q[r.n + j], v);
        if (!diff.is_zero()) return false;
    }
    return true;
}

ThreeTermResult three_term_test(const FamilySpec& spec, int n_max) {
    ThreeTermResult res;
    res.n_max = n_max;
    QSequence q(spec);
    RecurrenceTable t;
    try {
        t = recurrence_table(q, Poly::x(), 0, n_max);
    } catch (const DegenerateFamily& e) {
        res.admissible = false;
        res.reason = e.what();
        return res;
    }
    res.band_ok = true;
    res.favard_ok = true;
    for (const auto& r : t.rows) {
        for (const auto& [j, v] : r.gamma) {
            if (j < -1 && res.band_ok) {
                res.band_ok = false;
                res.reason = "x q_" + std::to_string(r.n) + " has a nonzero coefficient on q_" + std::to_string(r.n + j);
            }
        }
        res.a.push_back(r.at(1));
        res.b.push_back(r.at(0));
        res.c.push_back(r.at(-1));
        if (r.n >= 1 && r.at(-1).is_zero() && res.favard_ok) {
            res.favard_ok = false;
            if (res.band_ok) res.reason = "c_" + std::to_string(r.n) + " = 0";
        }
    }
    return res;
}

ObstructionResult obstruction_test(const FamilySpec& spec, const Poly& q_mult, int n_check) {
    if (q_mult.is_zero()) throw std::invalid_argument("obstruction_test: Q must be nonzero");
    ObstructionResult res;
    res.u = q_mult.valuation();
    res.n_check = n_check;
    if (spec.alpha().is_integer() && spec.alpha() <= Rat(spec.max_g())) {
        res.status = ObstructionResult::Status::not_applicable;
        return res;
    }
    const auto& g = spec.g_set();
    std::size_t witness_index = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const int d = g[k] - res.u;
        if (d >= 0 && !std::binary_search(g.begin(), g.end(), d)) {
            res.witness = g[k];
            witness_index = k;
            break;
        }
    }
    if (!res.witness) return res;
    res.status = ObstructionResult::Status::obstructed;

    // Any kappa gives <q_k, 1> = 0 for k >= m, so a band r would force
    // <Q q_n, 1> = 0 for n >= m + r. Row 0 = e_witness makes it nonzero.
    const int m = spec.m();
    KappaMatrix kappa;
    kappa.rows.assign(static_cast<std::size_t>(m), std::vector<Rat>(g.size()));
    kappa.rows[0][witness_index] = Rat(1);
    const BilinearForm form = BilinearForm::generic(spec, std::move(kappa));

    QSequence q(spec);
    const Poly one = Poly::constant(Rat(1));
    res.cross_check_ok = true;
    for (int n = m; n <= n_check; ++n) {
        const Poly prod = q_mult * q[n];
        if (form(prod, one).is_zero()) continue;
        res.nonzero_n.push_back(n);
        const SparseVector c = expand_in_q(q, prod);
        if (c.empty() || c.begin()->first >= m) {
            res.cross_check_ok = false;
            continue;
        }
        res.forced_band = std::max(res.forced_band, n - c.begin()->first);
    }
    if (res.nonzero_n.empty()) res.cross_check_ok = false;
    return res;
}

int default_probe_nmax(const FamilySpec& spec, int degree_cap) { return 2 * degree_cap + spec.max_g() + 10; }

AlgebraProbeResult algebra_probe(const FamilySpec& spec, int degree_cap, std::optional<int> band,
                                 std::optional<int> n_max) {
    if (degree_cap < 0) throw std::invalid_argument("algebra_probe: negative degree cap");
    AlgebraProbeResult res;
    res.degree_cap = degree_cap;
    res.band = band.value_or(degree_cap);
    res.n_max = n_max.value_or(default_probe_nmax(spec, degree_cap));
    if (res.band < 0) throw std::invalid_argument("algebra_probe: negative band");

    QSequence q(spec);
    const std::size_t cols = static_cast<std::size_t>(degree_cap) + 1;
    RatMatrix sys(0, cols);
    for (int n = 0; n <= res.n_max; ++n) {
        if (n <= res.band) continue;  // no j in [-n, -B)
        // column k: expansion of x^k q_n
        std::vector<SparseVector> col;
        for (int k = 0; k <= degree_cap; ++k) col.push_back(expand_in_q(q, Poly::monomial(Rat(1), k) * q[n]));
        for (int j = -n; j < -res.band; ++j) {
            RatVector row(cols);
            bool any = false;
            for (std::size_t k = 0; k < cols; ++k) {
                auto it = col[k].find(n + j);
                if (it != col[k].end()) {
                    row[k] = it->second;
                    any = true;
                }
            }
            if (any) sys.append_row(row);
        }
    }
    for (auto& v : nullspace(sys)) res.basis.emplace_back(std::move(v));
    return res;
}

bool probe_holds_up_to(const FamilySpec& spec, const AlgebraProbeResult& probe, int n_max) {
    QSequence q(spec);
    for (const auto& b : probe.basis) {
        const RecurrenceTable t = recurrence_table(q, b, 0, n_max);
        for (const auto& r : t.rows)
            for (const auto& [j, v] : r.gamma)
                if (j < -probe.band) return false;
    }
    return true;
}

int rho(const FamilySpec& spec) {
    if (!spec.alpha_is_small_integer())
        throw std::domain_error("rho: alpha = " + spec.alpha().str() + " is not an integer in 1.." +
                                std::to_string(spec.max_g()));
    const int alpha = static_cast<int>(*spec.alpha().to_long());
    return std::max({spec.m(), spec.max_g() - alpha + 1, alpha});
}

RhoRecurrence rho_recurrence(const FamilySpec& spec, const Poly& p, int n_max) {
    if (p.is_zero()) throw std::invalid_argument("rho_recurrence: p must be nonzero");
    RhoRecurrence res;
    res.rho = rho(spec);
    res.band = p.degree() + res.rho;
    res.table = recurrence_table(spec, Poly::monomial(Rat(1), res.rho) * p, 0, n_max);
    res.band_ok = verify_band(res.table, res.band, lower_extreme_start(spec, res.band));
    return res;
}

}  // namespace bispec

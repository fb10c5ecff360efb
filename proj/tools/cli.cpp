#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "bispec/errors.hpp"
#include "bispec/family.hpp"
#include "bispec/forms.hpp"
#include "bispec/io.hpp"
#include "bispec/parse.hpp"
#include "bispec/recurrence.hpp"

namespace bispec {

namespace {

struct Options {
    std::string config;
    std::string q_mult;
    std::string format = "json";
    std::string out;
    int nmax = 0;
    int deg = 0;
    int band = 0;
    CLI::Option* nmax_opt = nullptr;
    CLI::Option* band_opt = nullptr;
};

struct Outcome {
    Report report;
    bool pass = true;
};

class UsageError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "UsageError"; }
};

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

int nmax_or(const Options& o, int fallback) {
    if (!o.nmax_opt || o.nmax_opt->count() == 0) return fallback;
    if (o.nmax < 0) throw UsageError("--nmax must be nonnegative");
    return o.nmax;
}

Json header(const char* command, const FamilyDocument& fam) {
    Json j{{"command", command}, {"family", family_to_json(fam.spec)}};
    return j;
}

Json rats(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(rat_json(r));
    return a;
}

Outcome cmd_check(const Options&, const FamilyDocument& fam) {
    const auto cert = certify_admissible(fam.spec);
    Outcome o;
    o.pass = cert.pass();
    o.report.title = "Casoratian admissibility certificate";
    Json j = header("check", fam);
    j["omega"] = render_poly(cert.omega);
    j["root_bound"] = rat_json(cert.root_bound);
    j["integer_scan_bound"] = cert.integer_scan_bound;
    j["failure"] = cert.failure ? Json{{"n", cert.failure->n}, {"value", rat_json(cert.failure->value)}} : Json(nullptr);
    j["verdict"] = verdict(o.pass);
    o.report.json = std::move(j);
    o.report.table.header = {"field", "value"};
    o.report.table.rows = {{std::string("omega"), cert.omega},
                           {std::string("root bound"), cert.root_bound},
                           {std::string("integer scan bound"), cert.integer_scan_bound}};
    if (cert.failure) o.report.table.rows.push_back({std::string("vanishes at n"), cert.failure->n});
    o.report.table.rows.push_back({std::string("verdict"), std::string(verdict(o.pass))});
    return o;
}

Outcome cmd_qpoly(const Options& opt, const FamilyDocument& fam) {
    const int n_max = nmax_or(opt, 5);
    QSequence q(fam.spec);
    Outcome o;
    o.report.title = "Polynomials q_n";
    Json j = header("qpoly", fam);
    j["n_max"] = n_max;
    Json rows = Json::array();
    o.report.table.header = {"n", "q_n"};
    for (int n = 0; n <= n_max; ++n) {
        const Poly& p = q[n];
        rows.push_back({{"n", n}, {"poly", render_poly(p)}, {"beta", rats(beta(fam.spec, n).values)}});
        o.report.table.rows.push_back({static_cast<long>(n), p});
    }
    j["q"] = std::move(rows);
    j["verdict"] = "pass";
    o.report.json = std::move(j);
    return o;
}

Outcome cmd_ortho(const Options& opt, const FamilyDocument& fam) {
    const int n_max = nmax_or(opt, 10);
    const BilinearForm form = BilinearForm::canonical(fam.spec);
    const OrthoReport rep = ortho_check(form, n_max);
    Outcome o;
    o.pass = rep.pass();
    o.report.title = "Orthogonality of q_n";
    Json j = header("ortho", fam);
    j["variant"] = form.variant() == FormVariant::generic ? "generic" : "xi";
    Json kappa = Json::array();
    for (const auto& row : form.kappa().rows) kappa.push_back(rats(row));
    j["kappa"] = std::move(kappa);
    j["n_max"] = n_max;
    Json entries = Json::array();
    o.report.table.header = {"n", "i", "value"};
    for (const auto& e : rep.entries) {
        entries.push_back({{"n", e.n}, {"i", e.i}, {"value", rat_json(e.value)}});
        o.report.table.rows.push_back({static_cast<long>(e.n), static_cast<long>(e.i), e.value});
    }
    j["entries"] = std::move(entries);
    j["first_violation"] = rep.first_violation
                               ? Json{{"n", rep.first_violation->n}, {"i", rep.first_violation->i},
                                      {"value", rat_json(rep.first_violation->value)}}
                               : Json(nullptr);
    j["verdict"] = verdict(o.pass);
    o.report.json = std::move(j);
    return o;
}

Poly q_option(const Options& opt) {
    if (opt.q_mult.empty()) throw UsageError("--Q is required");
    const Poly p = parse_poly(opt.q_mult);
    if (p.is_zero()) throw UsageError("--Q must be a nonzero polynomial");
    return p;
}

Outcome cmd_recur(const Options& opt, const FamilyDocument& fam) {
    const Poly qm = q_option(opt);
    const int n_max = nmax_or(opt, 20);
    const int band = opt.band_opt->count() ? opt.band : qm.degree();
    const RecurrenceTable t = recurrence_table(fam.spec, qm, 0, n_max);
    Outcome o;
    o.pass = verify_band(t, band, lower_extreme_start(fam.spec, band));
    o.report.title = "Recurrence coefficients for Q = " + render_poly(qm);
    Json j = header("recur", fam);
    j["Q"] = render_poly(qm);
    j["n_max"] = n_max;
    j["band"] = band;
    j["lower_extreme_from"] = lower_extreme_start(fam.spec, band);
    j["observed_band"] = t.observed_band();
    Json entries = Json::array();
    o.report.table.header = {"n", "j", "gamma"};
    for (const auto& r : t.rows)
        for (const auto& [jj, v] : r.gamma) {
            entries.push_back({{"n", r.n}, {"j", jj}, {"gamma", rat_json(v)}});
            o.report.table.rows.push_back({static_cast<long>(r.n), static_cast<long>(jj), v});
        }
    j["entries"] = std::move(entries);
    j["verdict"] = verdict(o.pass);
    o.report.json = std::move(j);
    return o;
}

Outcome cmd_three_term(const Options& opt, const FamilyDocument& fam) {
    const int n_max = nmax_or(opt, 20);
    const ThreeTermResult r = three_term_test(fam.spec, n_max);
    Outcome o;
    o.pass = r.pass();
    o.report.title = "Three-term recurrence test";
    Json j = header("three-term", fam);
    j["n_max"] = n_max;
    j["admissible"] = r.admissible;
    j["band_ok"] = r.band_ok;
    j["favard_ok"] = r.favard_ok;
    j["reason"] = r.reason;
    Json seq = Json::array();
    o.report.table.header = {"n", "a_n", "b_n", "c_n"};
    for (std::size_t n = 0; n < r.a.size(); ++n) {
        seq.push_back({{"n", n}, {"a", rat_json(r.a[n])}, {"b", rat_json(r.b[n])}, {"c", rat_json(r.c[n])}});
        o.report.table.rows.push_back({static_cast<long>(n), r.a[n], r.b[n], r.c[n]});
    }
    j["sequences"] = std::move(seq);
    j["verdict"] = verdict(o.pass);
    o.report.json = std::move(j);
    return o;
}

Outcome cmd_probe(const Options& opt, const FamilyDocument& fam) {
    if (opt.deg < 0) throw UsageError("--deg must be nonnegative");
    std::optional<int> band;
    if (opt.band_opt->count()) {
        if (opt.band < 0) throw UsageError("--band must be nonnegative");
        band = opt.band;
    }
    std::optional<int> n_max;
    if (opt.nmax_opt->count()) n_max = nmax_or(opt, 0);
    const AlgebraProbeResult p = algebra_probe(fam.spec, opt.deg, band, n_max);
    const int recheck = p.n_max + 10;
    Outcome o;
    o.pass = probe_holds_up_to(fam.spec, p, recheck);
    o.report.title = "Recurrence algebra probe";
    Json j = header("probe", fam);
    j["degree_cap"] = p.degree_cap;
    j["band"] = p.band;
    j["n_max"] = p.n_max;
    Json basis = Json::array();
    o.report.table.header = {"index", "Q"};
    for (std::size_t k = 0; k < p.basis.size(); ++k) {
        basis.push_back(render_poly(p.basis[k]));
        o.report.table.rows.push_back({static_cast<long>(k), p.basis[k]});
    }
    j["basis"] = std::move(basis);
    j["dimension"] = p.basis.size();
    j["rechecked_n_max"] = recheck;
    j["certified"] = "up to n <= " + std::to_string(p.n_max) + ", band " + std::to_string(p.band);
    j["verdict"] = verdict(o.pass);
    o.report.json = std::move(j);
    return o;
}

Outcome cmd_preset(const Options&, const FamilyDocument& fam) {
    const auto form = match_krall_form(fam.spec);
    Outcome o;
    o.pass = form.has_value();
    o.report.title = "Preset expansion and shape match";
    Json j = header("preset", fam);
    o.report.table.header = {"field", "value"};
    for (std::size_t k = 0; k < fam.spec.g_set().size(); ++k)
        o.report.table.rows.push_back({"R_" + std::to_string(fam.spec.g_set()[k]), fam.spec.r_polys()[k]});
    if (form) {
        const bool krall = form->kind == KrallForm::Kind::krall;
        j["match"] = {{"kind", krall ? "krall" : "degenerate"},
                      {"alpha", form->alpha},
                      {"m", form->m},
                      {"a", rats(form->params)}};
        o.report.table.rows.push_back({std::string("shape"), std::string(krall ? "krall" : "degenerate")});
        for (std::size_t k = 0; k < form->params.size(); ++k) {
            const int idx = static_cast<int>(k) + (krall ? 0 : form->m - form->alpha);
            o.report.table.rows.push_back({"a_" + std::to_string(idx), form->params[k]});
        }
        if (!krall) {
            const auto quotient = krall_quotient_family(fam.spec, 12);
            j["quotient_family"] = quotient ? family_to_json(*quotient) : Json(nullptr);
        }
    } else {
        j["match"] = nullptr;
        o.report.table.rows.push_back({std::string("shape"), std::string("none")});
    }
    j["verdict"] = verdict(o.pass);
    o.report.json = std::move(j);
    return o;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message,
                 const ParseError* parse = nullptr) {
    Json e{{"kind", kind}, {"message", message}};
    if (parse) {
        e["offset"] = parse->offset();
        e["expected"] = parse->expected();
    }
    err << Json{{"error", std::move(e)}}.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for bispectral Laguerre type polynomial families", "bispec"};
    app.require_subcommand(1);
    Options opt;

    using Handler = std::function<Outcome(const Options&, const FamilyDocument&)>;
    std::map<CLI::App*, Handler> handlers;
    auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opt.config, "Family JSON file")->required();
        sub->add_option("--format", opt.format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
        sub->add_option("--out", opt.out, "Write the report here instead of stdout");
        handlers.emplace(sub, std::move(h));
        return sub;
    };

    add("check", "Certify that the Casoratian has no nonnegative integer zero", cmd_check);
    CLI::App* qpoly = add("qpoly", "List q_0..q_nmax", cmd_qpoly);
    CLI::App* ortho = add("ortho", "Check triangular orthogonality up to nmax", cmd_ortho);
    CLI::App* recur = add("recur", "Expand Q q_n in the q basis and check the band", cmd_recur);
    CLI::App* three = add("three-term", "Test for a three-term recurrence", cmd_three_term);
    CLI::App* probe = add("probe", "Find all Q of degree <= deg with a recurrence of band <= band", cmd_probe);
    add("preset", "Expand a preset, or match a family against the preset shapes", cmd_preset);

    std::map<CLI::App*, CLI::Option*> nmax_opts;
    for (CLI::App* sub : {qpoly, ortho, recur, three, probe})
        nmax_opts[sub] = sub->add_option("--nmax", opt.nmax, "Largest n");
    recur->add_option("--Q", opt.q_mult, "Multiplier polynomial, e.g. \"x^4+16*x^3\"")->required();
    CLI::Option* recur_band = recur->add_option("--band", opt.band, "Expected band (default deg Q)");
    probe->add_option("--deg", opt.deg, "Degree cap d")->required();
    CLI::Option* probe_band = probe->add_option("--band", opt.band, "Band B (default d)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        write_error(err, "UsageError", e.what());
        return 1;
    }

    CLI::App* chosen = app.get_subcommands().front();
    auto nm = nmax_opts.find(chosen);
    opt.nmax_opt = nm == nmax_opts.end() ? nullptr : nm->second;
    opt.band_opt = chosen == recur ? recur_band : chosen == probe ? probe_band : nullptr;

    try {
        const FamilyDocument fam = load_family(opt.config);
        const Outcome o = handlers.at(chosen)(opt, fam);
        const OutputFormat fmt = *parse_format(opt.format);
        if (opt.out.empty()) {
            write_report(out, o.report, fmt);
        } else {
            std::ofstream f(opt.out);
            if (!f) throw UsageError("cannot write '" + opt.out + "'");
            write_report(f, o.report, fmt);
        }
        return o.pass ? 0 : 2;
    } catch (const ParseError& e) {
        write_error(err, e.kind(), e.what(), &e);
        return 1;
    } catch (const UsageError& e) {
        write_error(err, e.kind(), e.what());
        return 1;
    } catch (const InvalidSpec& e) {
        write_error(err, e.kind(), e.what());
        return 1;
    } catch (const InvalidPreset& e) {
        write_error(err, e.kind(), e.what());
        return 1;
    } catch (const Error& e) {
        // Degenerate or inadmissible input: a mathematical verdict, not a usage problem.
        write_error(err, e.kind(), e.what());
        return 2;
    } catch (const std::exception& e) {
        write_error(err, "InternalError", e.what());
        return 1;
    }
}

}  // namespace bispec

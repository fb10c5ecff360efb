#include "bispec/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "bispec/errors.hpp"
#include "bispec/parse.hpp"

namespace bispec {

Rat rat_from_json(const Json& v, const std::string& field) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) {
        try {
            return Rat::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            throw InvalidSpec("field '" + field + "': " + e.what());
        }
    }
    throw InvalidSpec("field '" + field + "' must be a rational string such as \"3/2\" or an integer");
}

namespace {

int int_field(const Json& doc, const char* name, const char* where) {
    if (!doc.contains(name)) throw InvalidPreset(std::string(where) + ": missing field '" + name + "'");
    const Json& v = doc.at(name);
    if (!v.is_number_integer()) throw InvalidPreset(std::string(where) + ": field '" + name + "' must be an integer");
    return v.get<int>();
}

PresetDescriptor preset_from_json(const Json& doc) {
    PresetDescriptor d;
    const Json& kind = doc.at("preset");
    if (kind == "krall")
        d.kind = PresetDescriptor::Kind::krall;
    else if (kind == "degenerate")
        d.kind = PresetDescriptor::Kind::degenerate;
    else
        throw InvalidPreset("preset must be \"krall\" or \"degenerate\", got " + kind.dump());
    d.alpha = int_field(doc, "alpha", "preset");
    d.m = int_field(doc, "m", "preset");
    if (!doc.contains("a") || !doc.at("a").is_array()) throw InvalidPreset("preset: field 'a' must be an array");
    for (const auto& v : doc.at("a")) d.a.push_back(rat_from_json(v, "a"));
    return d;
}

}  // namespace

FamilySpec build_preset(const PresetDescriptor& d) {
    return d.kind == PresetDescriptor::Kind::krall ? krall_preset(d.alpha, d.m, d.a)
                                                   : degenerate_preset(d.alpha, d.m, d.a);
}

FamilyDocument family_from_json(const Json& doc) {
    if (!doc.is_object()) throw InvalidSpec("family document must be a JSON object");
    if (doc.contains("preset")) {
        PresetDescriptor d = preset_from_json(doc);
        FamilySpec spec = build_preset(d);
        return {std::move(spec), std::move(d)};
    }
    for (const char* f : {"alpha", "G", "R"})
        if (!doc.contains(f)) throw InvalidSpec(std::string("family: missing field '") + f + "'");
    const Rat alpha = rat_from_json(doc.at("alpha"), "alpha");
    const Json& g = doc.at("G");
    const Json& r = doc.at("R");
    if (!g.is_array()) throw InvalidSpec("family: field 'G' must be an array of positive integers");
    if (!r.is_object()) throw InvalidSpec("family: field 'R' must map each element of G to a polynomial string");
    std::vector<int> gs;
    std::vector<Poly> rs;
    for (const auto& gv : g) {
        if (!gv.is_number_integer()) throw InvalidSpec("family: G entries must be integers");
        const int gi = gv.get<int>();
        const std::string key = std::to_string(gi);
        if (!r.contains(key)) throw InvalidSpec("family: R has no entry for g = " + key);
        const Json& p = r.at(key);
        if (!p.is_string()) throw InvalidSpec("family: R[\"" + key + "\"] must be a polynomial string");
        gs.push_back(gi);
        rs.push_back(parse_poly(p.get<std::string>()));
    }
    if (r.size() != gs.size()) throw InvalidSpec("family: R has entries for values not in G");
    return {FamilySpec::make(alpha, std::move(gs), std::move(rs)), std::nullopt};
}

FamilyDocument load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open config '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidSpec("config '" + path + "' is not valid JSON: " + e.what());
    }
    return family_from_json(doc);
}

Json family_to_json(const FamilySpec& spec) {
    Json r = Json::object();
    for (std::size_t k = 0; k < spec.g_set().size(); ++k)
        r[std::to_string(spec.g_set()[k])] = render_poly(spec.r_polys()[k]);
    return Json{{"alpha", rat_json(spec.alpha())}, {"G", spec.g_set()}, {"R", std::move(r)}};
}

std::string latex_rat(const Rat& r) {
    if (r.is_integer()) return r.str();
    const std::string body = "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
    return r.sign() < 0 ? "-\\frac{" + (-r).numerator().get_str() + "}{" + r.denominator().get_str() + "}" : body;
}

std::string latex_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat c = p.coeff(k);
        if (c.is_zero()) continue;
        if (c.sign() < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        const Rat mag = c.abs();
        if (k == 0) {
            out += latex_rat(mag);
            continue;
        }
        if (mag != Rat(1)) out += latex_rat(mag);
        out += "x";
        if (k > 1) out += "^{" + std::to_string(k) + "}";
    }
    return out;
}

std::optional<OutputFormat> parse_format(const std::string& name) {
    static const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"latex", OutputFormat::latex}};
    auto it = formats.find(name);
    if (it == formats.end()) return std::nullopt;
    return it->second;
}

void write_json(std::ostream& os, const Report& r) { os << r.json.dump(2) << '\n'; }

namespace {

std::string plain(const Cell& c) {
    struct {
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(long v) const { return std::to_string(v); }
        std::string operator()(const Rat& v) const { return v.str(); }
        std::string operator()(const Poly& v) const { return render_poly(v); }
    } visit;
    return std::visit(visit, c);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string latex_text(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '\\': out += "\\textbackslash{}"; break;
            case '&': case '%': case '$': case '#': case '_': case '{': case '}':
                out += '\\';
                out += ch;
                break;
            case '^': out += "\\textasciicircum{}"; break;
            case '~': out += "\\textasciitilde{}"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string latex_cell(const Cell& c) {
    struct {
        std::string operator()(const std::string& s) const { return latex_text(s); }
        std::string operator()(long v) const { return "$" + std::to_string(v) + "$"; }
        std::string operator()(const Rat& v) const { return "$" + latex_rat(v) + "$"; }
        std::string operator()(const Poly& v) const { return "$" + latex_poly(v) + "$"; }
    } visit;
    return std::visit(visit, c);
}

}  // namespace

void write_csv(std::ostream& os, const Report& r) {
    for (std::size_t i = 0; i < r.table.header.size(); ++i) os << (i ? "," : "") << csv_field(r.table.header[i]);
    os << '\n';
    for (const auto& row : r.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(plain(row[i]));
        os << '\n';
    }
}

void write_latex(std::ostream& os, const Report& r) {
    os << "\\documentclass{article}\n"
          "\\usepackage{longtable}\n"
          "\\usepackage[margin=2cm]{geometry}\n"
          "\\begin{document}\n"
          "\\section*{"
       << latex_text(r.title) << "}\n";
    os << "\\begin{longtable}{" << std::string(r.table.header.size(), 'l') << "}\n";
    for (std::size_t i = 0; i < r.table.header.size(); ++i)
        os << (i ? " & " : "") << "\\textbf{" << latex_text(r.table.header[i]) << "}";
    os << " \\\\\n\\hline\n\\endhead\n";
    for (const auto& row : r.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " & " : "") << latex_cell(row[i]);
        os << " \\\\\n";
    }
    os << "\\end{longtable}\n\\end{document}\n";
}

void write_report(std::ostream& os, const Report& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: write_json(os, r); break;
        case OutputFormat::csv: write_csv(os, r); break;
        case OutputFormat::latex: write_latex(os, r); break;
    }
}

}  // namespace bispec

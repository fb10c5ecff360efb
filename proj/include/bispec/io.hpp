#ifndef BISPEC_IO_HPP
#define BISPEC_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bispec/family.hpp"
#include "bispec/poly.hpp"
#include "bispec/rational.hpp"

namespace bispec {

using Json = nlohmann::ordered_json;

struct PresetDescriptor {
    enum class Kind { krall, degenerate };
    Kind kind = Kind::krall;
    int alpha = 0;
    int m = 0;
    std::vector<Rat> a;
};

/// A loaded family document: the spec, plus the descriptor when it came from a preset.
struct FamilyDocument {
    FamilySpec spec;
    std::optional<PresetDescriptor> preset;
};

/// Accepts either
///     {"alpha": "p/q", "G": [g, ...], "R": {"g": "<poly>", ...}}
/// or
///     {"preset": "krall" | "degenerate", "alpha": int, "m": int, "a": ["p/q", ...]}.
/// Rationals may be given as JSON strings or integers. Throws InvalidSpec,
/// InvalidPreset or ParseError.
FamilyDocument family_from_json(const Json& doc);
FamilyDocument load_family(const std::string& path);

Json family_to_json(const FamilySpec& spec);
FamilySpec build_preset(const PresetDescriptor& d);

/// Rational as "p/q" or "p".
Rat rat_from_json(const Json& v, const std::string& field);
inline std::string rat_json(const Rat& r) { return r.str(); }

/// LaTeX math for a polynomial or a rational, without surrounding dollars.
std::string latex_poly(const Poly& p);
std::string latex_rat(const Rat& r);

/// One table cell; numbers and polynomials render as math in LaTeX.
using Cell = std::variant<std::string, long, Rat, Poly>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

/// A command result: the JSON document is authoritative, the table is its
/// tabular projection for CSV and LaTeX.
struct Report {
    std::string title;
    Json json;
    Table table;
};

enum class OutputFormat { json, csv, latex };

std::optional<OutputFormat> parse_format(const std::string& name);

void write_json(std::ostream& os, const Report& r);
/// RFC 4180 quoting; header line first.
void write_csv(std::ostream& os, const Report& r);
/// Standalone article with the title and a longtable of the rows.
void write_latex(std::ostream& os, const Report& r);
void write_report(std::ostream& os, const Report& r, OutputFormat f);

}  // namespace bispec

#endif

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "symgen/genera.hpp"
#include "symgen/graded_spaces.hpp"
#include "symgen/laurent.hpp"
#include "symgen/power_series.hpp"

namespace symgen {

/// Parse a polynomial expression over `vars`.
///
///   expression ::= ['+'|'-'] term (('+'|'-') term)*
///   term       ::= factor ('*' factor)*
///   factor     ::= rational | variable ['^' signed-integer] | '(' expression ')'
///
/// Rationals are written `3` or `3/4`. Whitespace is ignored. Errors carry the offending
/// column and are thrown as input_error.
LaurentPoly parse_poly(std::string_view text, const VariableSet &vars);

// GradedDims as a list of {"p", "q", "k", "dim"} records.
GradedDims graded_dims_from_json(const nlohmann::json &j);
nlohmann::json graded_dims_to_json(const GradedDims &v);
nlohmann::json graded_dims_to_json(const VirtualGradedDims &v);

struct ProfileFile {
    std::vector<GenusProfile> profiles;
    int order = default_order;
};

/// {"profiles": [{"name", "kind", "poly" | "chi" | ("sigma", "chi"), "compact_support"}], "order": N}
ProfileFile profile_file_from_json(const nlohmann::json &j);
ProfileFile load_profile_file(const std::string &path);
nlohmann::json profile_to_json(const GenusProfile &p);

// One record per series: name, kind, vars, order, coefficients (as expression strings).
nlohmann::json series_to_json(const std::string &name, std::string_view kind, const PolySeries &s);
// Inverse of series_to_json; returns the coefficients.
PolySeries series_from_json(const nlohmann::json &j);

// Aligned two-column text table, one row per power of t.
std::string series_to_text(const std::string &name, std::string_view kind, const PolySeries &s);
// (n, monomial, coefficient) triples, without a header line.
std::string series_to_csv_rows(const std::string &name, const PolySeries &s);

} // namespace symgen

#ifndef TDI_IO_HPP
#define TDI_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "tdi/harness.hpp"
#include "tdi/multiindex.hpp"
#include "tdi/polynomial.hpp"

namespace tdi {

/// {"d": 2, "generators": [[2,1],[0,"inf"]]}; the string "inf" encodes the
/// unbounded coordinate.
LowerSet lowerset_from_json(const nlohmann::json& j);
LowerSet parse_lowerset(const std::string& text);
nlohmann::json lowerset_to_json(const LowerSet& omega);
std::string format_lowerset(const LowerSet& omega);

/// "3", "-1/2"; whitespace around the fraction is ignored.
Rational parse_rational_text(const std::string& text);
std::string format_rational(const Rational& value);

/// Comma-separated coordinates, optionally parenthesized: "1,-1/2" or
/// "(1,-1/2)". A nonzero expected_dimension is enforced.
Point parse_point_text(const std::string& text, std::size_t expected_dimension = 0);
MultiIndex parse_multiindex_text(const std::string& text, std::size_t expected_dimension = 0);

/// Closure-harness scenario file.
struct Scenario {
    LowerSet omega;
    std::vector<Polynomial> sequence;
    Polynomial limit;
    std::vector<Point> grid;
    Rational tolerance;
};

Scenario scenario_from_json(const nlohmann::json& j);
Scenario parse_scenario(const std::string& text);

nlohmann::json verdict_to_json(const Verdict& verdict);

} // namespace tdi

#endif

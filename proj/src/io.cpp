#include "tdi/io.hpp"

#include <cctype>

#include "tdi/errors.hpp"

namespace tdi {

namespace {

std::uint64_t require_nat(const nlohmann::json& j, const char* what, std::uint64_t max) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParseError(std::string(what) + " must be a nonnegative integer");
    }
    const std::uint64_t value = j.get<std::uint64_t>();
    if (value > max) throw ParseError(std::string(what) + " out of range");
    return value;
}

} // namespace

LowerSet lowerset_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("lower set must be an object");
    if (!j.contains("d")) throw ParseError("lower set is missing \"d\"");
    if (!j.contains("generators")) throw ParseError("lower set is missing \"generators\"");
    const std::size_t d = static_cast<std::size_t>(require_nat(j.at("d"), "\"d\"", 64));
    if (d == 0) throw ParseError("\"d\" must be at least 1");
    if (!j.at("generators").is_array()) throw ParseError("\"generators\" must be an array");

    std::vector<ExtendedMultiIndex> generators;
    for (const nlohmann::json& row : j.at("generators")) {
        if (!row.is_array() || row.size() != d) {
            throw ParseError("each generator must be an array of " + std::to_string(d) + " entries");
        }
        std::vector<ExtNat> entries;
        entries.reserve(d);
        for (const nlohmann::json& cell : row) {
            if (cell.is_string()) {
                if (cell.get<std::string>() != "inf") {
                    throw ParseError("generator entries must be naturals or \"inf\"");
                }
                entries.push_back(ExtNat::infinity());
            } else {
                entries.push_back(
                    ExtNat(static_cast<std::uint32_t>(require_nat(cell, "generator entry", 1000000))));
            }
        }
        generators.push_back(ExtendedMultiIndex(std::move(entries)));
    }
    return LowerSet(d, std::move(generators));
}

LowerSet parse_lowerset(const std::string& text) {
    return lowerset_from_json(nlohmann::json::parse(text));
}

nlohmann::json lowerset_to_json(const LowerSet& omega) {
    nlohmann::json j;
    j["d"] = omega.dimension();
    nlohmann::json generators = nlohmann::json::array();
    for (const ExtendedMultiIndex& g : omega.generators()) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t i = 0; i < g.dimension(); ++i) {
            if (g[i].is_infinite()) {
                row.push_back("inf");
            } else {
                row.push_back(g[i].finite_value());
            }
        }
        generators.push_back(std::move(row));
    }
    j["generators"] = std::move(generators);
    return j;
}

std::string format_lowerset(const LowerSet& omega) { return lowerset_to_json(omega).dump(); }

Rational parse_rational_text(const std::string& text) {
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    const auto read_digits = [&]() -> std::string {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("expected digits", i + 1);
        }
        std::string out;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
        return out;
    };

    skip_ws();
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
        skip_ws();
    }
    const std::string numerator = read_digits();
    std::string denominator = "1";
    skip_ws();
    if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        const std::size_t start = i + 1;
        denominator = read_digits();
        if (Integer(denominator) == 0) throw ParseError("zero denominator", start);
        skip_ws();
    }
    if (i != text.size()) throw ParseError("unexpected character", i + 1);
    Rational value = make_rational(Integer(numerator), Integer(denominator));
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) { return rational_to_string(value); }

namespace {

std::vector<std::string> split_tuple(const std::string& text, std::size_t expected) {
    std::string body = text;
    std::size_t lead = 0;
    while (lead < body.size() && std::isspace(static_cast<unsigned char>(body[lead]))) ++lead;
    std::size_t tail = body.size();
    while (tail > lead && std::isspace(static_cast<unsigned char>(body[tail - 1]))) --tail;
    body = body.substr(lead, tail - lead);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = body.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(body.substr(start));
            break;
        }
        parts.push_back(body.substr(start, comma - start));
        start = comma + 1;
    }
    if (expected != 0 && parts.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " components, got " +
                         std::to_string(parts.size()));
    }
    return parts;
}

} // namespace

Point parse_point_text(const std::string& text, std::size_t expected_dimension) {
    std::vector<Rational> coordinates;
    for (const std::string& part : split_tuple(text, expected_dimension)) {
        coordinates.push_back(parse_rational_text(part));
    }
    return Point(std::move(coordinates));
}

MultiIndex parse_multiindex_text(const std::string& text, std::size_t expected_dimension) {
    std::vector<std::uint32_t> entries;
    for (const std::string& part : split_tuple(text, expected_dimension)) {
        const Rational value = parse_rational_text(part);
        if (value < 0 || value.get_den() != 1) {
            throw ParseError("multi-index entries must be naturals");
        }
        if (value.get_num() > 1000000) throw ParseError("multi-index entry out of range");
        entries.push_back(static_cast<std::uint32_t>(value.get_num().get_ui()));
    }
    return MultiIndex(std::move(entries));
}

namespace {

Rational rational_from_json(const nlohmann::json& j, const char* what) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational_text(j.get<std::string>());
    throw ParseError(std::string(what) + " must be an integer or a rational string");
}

} // namespace

Scenario scenario_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("scenario must be an object");
    for (const char* field : {"omega", "sequence", "limit", "grid", "tolerance"}) {
        if (!j.contains(field)) {
            throw ParseError("scenario is missing \"" + std::string(field) + "\"");
        }
    }
    LowerSet omega = lowerset_from_json(j.at("omega"));
    const std::size_t d = omega.dimension();

    if (!j.at("sequence").is_array()) throw ParseError("\"sequence\" must be an array");
    std::vector<Polynomial> sequence;
    for (const nlohmann::json& cell : j.at("sequence")) {
        if (!cell.is_string()) throw ParseError("sequence elements must be polynomial strings");
        sequence.push_back(parse_polynomial(cell.get<std::string>(), d));
    }

    if (!j.at("limit").is_string()) throw ParseError("\"limit\" must be a polynomial string");
    Polynomial limit = parse_polynomial(j.at("limit").get<std::string>(), d);

    if (!j.at("grid").is_array()) throw ParseError("\"grid\" must be an array");
    std::vector<Point> grid;
    for (const nlohmann::json& row : j.at("grid")) {
        if (!row.is_array() || row.size() != d) {
            throw ParseError("each grid point must be an array of " + std::to_string(d) + " entries");
        }
        std::vector<Rational> coordinates;
        coordinates.reserve(d);
        for (const nlohmann::json& cell : row) {
            coordinates.push_back(rational_from_json(cell, "grid entry"));
        }
        grid.push_back(Point(std::move(coordinates)));
    }

    Rational tolerance = rational_from_json(j.at("tolerance"), "\"tolerance\"");
    return Scenario{std::move(omega), std::move(sequence), std::move(limit), std::move(grid),
                    std::move(tolerance)};
}

Scenario parse_scenario(const std::string& text) {
    return scenario_from_json(nlohmann::json::parse(text));
}

nlohmann::json verdict_to_json(const Verdict& verdict) {
    nlohmann::json j;
    j["member"] = verdict.member;
    if (verdict.witness) {
        nlohmann::json witness = nlohmann::json::array();
        for (std::size_t i = 0; i < verdict.witness->dimension(); ++i) {
            witness.push_back((*verdict.witness)[i]);
        }
        j["witness"] = std::move(witness);
    }
    if (verdict.enveloping) j["enveloping"] = lowerset_to_json(*verdict.enveloping);
    nlohmann::json residuals = nlohmann::json::array();
    for (const Rational& r : verdict.max_residuals) residuals.push_back(rational_to_string(r));
    j["notes"] = {{"max_residuals", std::move(residuals)},
                  {"final_within_tolerance", verdict.final_within_tolerance}};
    return j;
}

} // namespace tdi

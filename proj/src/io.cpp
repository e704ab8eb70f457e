#include "arrlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace arrlab {

namespace {

using Json = nlohmann::ordered_json;

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

Json expect_object(const std::string& text) {
    try {
        Json j = Json::parse(text);
        if (!j.is_object()) fail("arrangement file: top level must be an object");
        return j;
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("arrangement file: " + std::string(e.what()) + " at line " +
                             std::to_string(line) + ", column " + std::to_string(column),
                         line, column);
    }
}

} // namespace

ArrangementInput parse_arrangement_text(const std::string& text) {
    Json j = expect_object(text);
    ArrangementInput input;
    input.name = j.value("name", std::string());
    if (!j.contains("mode") || !j["mode"].is_string()) fail("arrangement file: missing 'mode'");
    const std::string mode = j["mode"];

    if (mode == "coordinates") {
        input.mode = ArrangementInput::Mode::Coordinates;
        if (j.contains("degree") || j.contains("points"))
            fail("arrangement file: coordinate mode must not carry incidence fields");
        if (!j.contains("cyclotomic_order") || !j["cyclotomic_order"].is_number_integer())
            fail("arrangement file: coordinate mode needs integer 'cyclotomic_order'");
        input.cyclotomic_order = j["cyclotomic_order"];
        if (input.cyclotomic_order < 1) fail("arrangement file: cyclotomic_order must be >= 1");
        if (!j.contains("lines") || !j["lines"].is_array())
            fail("arrangement file: coordinate mode needs 'lines'");
        const int phi = euler_phi(input.cyclotomic_order);
        for (const auto& entry : j["lines"]) {
            if (!entry.is_array() || entry.size() != 3)
                fail("arrangement file: each line is a triple of coefficients");
            std::array<std::vector<Rational>, 3> triple;
            for (int c = 0; c < 3; ++c) {
                const auto& coeff = entry[c];
                if (!coeff.is_array() || coeff.empty() ||
                    static_cast<int>(coeff.size()) > phi)
                    fail("arrangement file: coefficient must list 1.." + std::to_string(phi) +
                         " rational strings (powers of zeta)");
                for (const auto& s : coeff) {
                    if (!s.is_string()) fail("arrangement file: rational entries must be strings");
                    triple[c].push_back(parse_rational(s.get<std::string>()));
                }
            }
            input.lines.push_back(std::move(triple));
        }
        if (input.lines.size() < 2) fail("arrangement file: need at least 2 lines");
    } else if (mode == "incidence") {
        input.mode = ArrangementInput::Mode::IncidenceLists;
        if (j.contains("lines") || j.contains("cyclotomic_order"))
            fail("arrangement file: incidence mode must not carry coordinate fields");
        if (!j.contains("degree") || !j["degree"].is_number_integer())
            fail("arrangement file: incidence mode needs integer 'degree'");
        input.degree = j["degree"];
        if (input.degree < 1) fail("arrangement file: degree must be >= 1");
        if (!j.contains("points") || !j["points"].is_array())
            fail("arrangement file: incidence mode needs 'points'");
        for (const auto& entry : j["points"]) {
            if (!entry.is_array()) fail("arrangement file: each point is a list of line indices");
            std::vector<int> lines;
            for (const auto& idx : entry) {
                if (!idx.is_number_integer())
                    fail("arrangement file: line indices must be integers");
                lines.push_back(idx.get<int>());
            }
            input.points.push_back(std::move(lines));
        }
    } else {
        fail("arrangement file: mode must be 'coordinates' or 'incidence'");
    }
    return input;
}

ArrangementInput parse_arrangement_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_arrangement_text(buffer.str());
}

std::string emit_arrangement(const ArrangementInput& input) {
    Json j;
    j["name"] = input.name;
    if (input.mode == ArrangementInput::Mode::Coordinates) {
        j["mode"] = "coordinates";
        j["cyclotomic_order"] = input.cyclotomic_order;
        const int phi = euler_phi(input.cyclotomic_order);
        Json lines = Json::array();
        for (const auto& triple : input.lines) {
            Json entry = Json::array();
            for (int c = 0; c < 3; ++c) {
                Json coeff = Json::array();
                for (int i = 0; i < phi; ++i)
                    coeff.push_back(i < static_cast<int>(triple[c].size())
                                        ? rational_string(triple[c][i])
                                        : "0");
                entry.push_back(std::move(coeff));
            }
            lines.push_back(std::move(entry));
        }
        j["lines"] = std::move(lines);
    } else {
        j["mode"] = "incidence";
        j["degree"] = input.degree;
        Json points = Json::array();
        for (const auto& p : input.points) points.push_back(p);
        j["points"] = std::move(points);
    }
    return j.dump(2) + "\n";
}

ArrangementInput family_to_input(const Family& family) {
    ArrangementInput input;
    input.name = family.name;
    if (!family.lines.empty()) {
        input.mode = ArrangementInput::Mode::Coordinates;
        input.cyclotomic_order = family.cyclotomic_order;
        for (const auto& line : family.lines) {
            std::array<std::vector<Rational>, 3> triple;
            for (int c = 0; c < 3; ++c) triple[c] = line.coeffs[c].coeffs();
            input.lines.push_back(std::move(triple));
        }
    } else {
        input.mode = ArrangementInput::Mode::IncidenceLists;
        input.degree = family.incidence.degree;
        for (const auto& p : family.incidence.points) input.points.push_back(p.lines);
    }
    return input;
}

LoadedArrangement realize(const ArrangementInput& input) {
    LoadedArrangement out;
    out.cyclotomic_order = input.cyclotomic_order;
    if (input.mode == ArrangementInput::Mode::Coordinates) {
        const int order = input.cyclotomic_order;
        const int phi = euler_phi(order);
        for (std::size_t li = 0; li < input.lines.size(); ++li) {
            std::array<CycRat, 3> coeffs;
            for (int c = 0; c < 3; ++c) {
                std::vector<Rational> poly = input.lines[li][c];
                if (static_cast<int>(poly.size()) > phi)
                    throw ParseError("line " + std::to_string(li) +
                                     ": coefficient has more than phi(n) entries");
                coeffs[c] = CycRat::from_polynomial(order, std::move(poly));
            }
            out.lines.push_back(make_line(coeffs[0], coeffs[1], coeffs[2]));
        }
        out.incidence = compute_incidence(out.lines, input.name);
    } else {
        out.incidence.degree = input.degree;
        out.incidence.name = input.name;
        for (const auto& p : input.points) {
            PointRecord rec;
            rec.lines = p;
            std::sort(rec.lines.begin(), rec.lines.end());
            out.incidence.points.push_back(std::move(rec));
        }
        std::sort(out.incidence.points.begin(), out.incidence.points.end(),
                  [](const PointRecord& a, const PointRecord& b) { return a.lines < b.lines; });
        require_valid(out.incidence);
    }
    return out;
}

LoadedArrangement load_arrangement(const std::string& path) {
    return realize(parse_arrangement_file(path));
}

} // namespace arrlab

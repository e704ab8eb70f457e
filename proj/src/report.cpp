#include "arrlab/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace arrlab {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> flag_names(const QuickFlags& q) {
    std::vector<std::string> out;
    if (q.high_multiplicity) out.push_back("high_multiplicity");
    if (q.low_efficiency) out.push_back("low_efficiency");
    if (q.line_cover) out.push_back("line_cover");
    if (q.greedy_disjoint) out.push_back("greedy_disjoint");
    return out;
}

AnalysisReport analysis_for_m(const Incidence& inc, int m, const AnalyzeOptions& options,
                              const EsvOptions& esv_options) {
    AnalysisReport a;
    a.m = m;
    a.divides = inc.degree % m == 0;
    if (m >= 3) {
        const MGraph g = build_mgraph(inc, m);
        const MGraphSummary s = classify(g);
        MGraphReport mg;
        mg.vertices = static_cast<long long>(g.vertices.size());
        mg.edges = static_cast<long long>(g.edges.size());
        mg.efficiency = s.efficiency;
        mg.complexity = s.complexity;
        mg.reduced = s.reduced;
        mg.unsaturated = s.unsaturated;
        mg.connected = s.connected;
        a.mgraph = mg;
    }
    if (options.aomoto) {
        EigenspaceDimensions dims = eigenspace_dimension(inc, m, esv_options);
        a.status = dims.verdict.status;
        a.lower_bound = dims.verdict.lower_bound;
        a.h1 = dims.h1;
        a.h2 = dims.h2;
        if (dims.verdict.status == EsvStatus::VanishesNonDivisor) {
            a.h1 = 0;
            a.h2 = 0;
        }
        a.quick_flags = flag_names(dims.verdict.quick);
        if (dims.verdict.witness) {
            a.condition = dims.verdict.witness->condition == Condition::A ? "a" : "b";
            if (options.include_witness) a.witness = dims.verdict.witness->lines;
        }
    } else {
        EsvVerdict v = analyze_divisor(inc, m, esv_options);
        a.status = v.status;
        a.lower_bound = v.lower_bound;
        a.quick_flags = flag_names(v.quick);
        if (v.witness) {
            a.condition = v.witness->condition == Condition::A ? "a" : "b";
            if (options.include_witness) a.witness = v.witness->lines;
        }
    }
    return a;
}

} // namespace

std::string status_string(EsvStatus status) {
    switch (status) {
        case EsvStatus::VanishesNonDivisor: return "vanishes_m_not_dividing_d";
        case EsvStatus::Calculable: return "calculable";
        case EsvStatus::NotCalculable: return "not_calculable";
        case EsvStatus::UnknownBudget: return "unknown_budget";
    }
    throw Error("internal: unknown status");
}

namespace {

EsvStatus status_from_string(const std::string& s) {
    if (s == "vanishes_m_not_dividing_d") return EsvStatus::VanishesNonDivisor;
    if (s == "calculable") return EsvStatus::Calculable;
    if (s == "not_calculable") return EsvStatus::NotCalculable;
    if (s == "unknown_budget") return EsvStatus::UnknownBudget;
    throw ParseError("report: unknown status '" + s + "'");
}

} // namespace

Report analyze_arrangement(const Incidence& inc, const AnalyzeOptions& options) {
    Report r;
    r.name = inc.name;
    r.degree = inc.degree;
    for (const auto& [mult, count] : stratum_counts(inc)) r.stratum_counts.emplace_back(mult, count);
    r.double_points = double_point_count(inc);
    r.euler_characteristic = euler_characteristic_complement(inc);
    r.lambda_convention = "lambda = exp(-2*pi*i*k/d) with k = d/m";

    EsvOptions esv_options;
    esv_options.lower_bound_budget = options.lower_bound_budget;
    if (options.time_budget_seconds)
        esv_options.deadline = std::chrono::steady_clock::now() +
                               std::chrono::microseconds(static_cast<long long>(
                                   *options.time_budget_seconds * 1e6));

    if (options.m) {
        r.analyses.push_back(analysis_for_m(inc, *options.m, options, esv_options));
    } else {
        for (int m = 2; m <= inc.degree; ++m)
            if (inc.degree % m == 0)
                r.analyses.push_back(analysis_for_m(inc, m, options, esv_options));
    }
    return r;
}

std::string report_to_json(const Report& r) {
    Json j;
    j["name"] = r.name;
    j["degree"] = r.degree;
    Json strata = Json::object();
    for (const auto& [mult, count] : r.stratum_counts) strata[std::to_string(mult)] = count;
    j["stratum_counts"] = std::move(strata);
    j["double_points"] = r.double_points;
    j["euler_characteristic"] = r.euler_characteristic;
    j["lambda_convention"] = r.lambda_convention;
    Json analyses = Json::array();
    for (const auto& a : r.analyses) {
        Json ja;
        ja["m"] = a.m;
        ja["divides"] = a.divides;
        if (a.mgraph) {
            Json mg;
            mg["vertices"] = a.mgraph->vertices;
            mg["edges"] = a.mgraph->edges;
            mg["efficiency"] = rational_string(a.mgraph->efficiency);
            mg["complexity"] = a.mgraph->complexity;
            mg["reduced"] = a.mgraph->reduced;
            mg["unsaturated"] = a.mgraph->unsaturated;
            mg["connected"] = a.mgraph->connected;
            ja["mgraph"] = std::move(mg);
        }
        ja["status"] = status_string(a.status);
        if (a.condition) ja["condition"] = *a.condition;
        if (a.witness) ja["witness"] = *a.witness;
        ja["quick_flags"] = a.quick_flags;
        if (a.lower_bound) ja["h1_lower_bound"] = *a.lower_bound;
        if (a.h1) ja["h1"] = *a.h1;
        if (a.h2) ja["h2"] = *a.h2;
        analyses.push_back(std::move(ja));
    }
    j["analyses"] = std::move(analyses);
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("report: " + std::string(e.what()));
    }
    Report r;
    r.name = j.at("name");
    r.degree = j.at("degree");
    for (const auto& [key, value] : j.at("stratum_counts").items())
        r.stratum_counts.emplace_back(std::stoi(key), value.get<long long>());
    std::sort(r.stratum_counts.begin(), r.stratum_counts.end());
    r.double_points = j.at("double_points");
    r.euler_characteristic = j.at("euler_characteristic");
    r.lambda_convention = j.at("lambda_convention");
    for (const auto& ja : j.at("analyses")) {
        AnalysisReport a;
        a.m = ja.at("m");
        a.divides = ja.at("divides");
        if (ja.contains("mgraph")) {
            const auto& mg = ja["mgraph"];
            MGraphReport m;
            m.vertices = mg.at("vertices");
            m.edges = mg.at("edges");
            m.efficiency = parse_rational(mg.at("efficiency").get<std::string>());
            m.complexity = mg.at("complexity");
            m.reduced = mg.at("reduced");
            m.unsaturated = mg.at("unsaturated");
            m.connected = mg.at("connected");
            a.mgraph = m;
        }
        a.status = status_from_string(ja.at("status").get<std::string>());
        if (ja.contains("condition")) a.condition = ja["condition"].get<std::string>();
        if (ja.contains("witness")) a.witness = ja["witness"].get<std::vector<int>>();
        a.quick_flags = ja.at("quick_flags").get<std::vector<std::string>>();
        if (ja.contains("h1_lower_bound")) a.lower_bound = ja["h1_lower_bound"].get<long long>();
        if (ja.contains("h1")) a.h1 = ja["h1"].get<long long>();
        if (ja.contains("h2")) a.h2 = ja["h2"].get<long long>();
        r.analyses.push_back(std::move(a));
    }
    return r;
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "arrangement: " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
    out << "degree: " << r.degree << "\n";
    out << "points:";
    for (const auto& [mult, count] : r.stratum_counts)
        out << " " << count << " of multiplicity " << mult << ",";
    out << " " << r.double_points << " double\n";
    out << "euler characteristic of the complement: " << r.euler_characteristic << "\n";
    out << "eigenvalue convention: " << r.lambda_convention << "\n";
    for (const auto& a : r.analyses) {
        out << "m = " << a.m << ":";
        if (!a.divides) {
            out << " does not divide " << r.degree << "; eigenspaces vanish\n";
            continue;
        }
        out << "\n";
        if (a.mgraph) {
            out << "  m-graph: " << a.mgraph->vertices << " vertices, " << a.mgraph->edges
                << " edges, efficiency " << rational_string(a.mgraph->efficiency)
                << ", complexity " << a.mgraph->complexity << " ("
                << (a.mgraph->reduced ? "reduced" : "weighted") << ", "
                << (a.mgraph->unsaturated ? "unsaturated" : "saturated") << ", "
                << (a.mgraph->connected ? "connected" : "disconnected") << ")\n";
        }
        out << "  esv: " << status_string(a.status);
        if (a.condition) out << " via condition (" << *a.condition << ")";
        if (!a.quick_flags.empty()) {
            out << " [";
            for (std::size_t i = 0; i < a.quick_flags.size(); ++i)
                out << (i ? " " : "") << a.quick_flags[i];
            out << "]";
        }
        out << "\n";
        if (a.witness) {
            out << "  witness:";
            for (int line : *a.witness) out << " " << line;
            out << "\n";
        }
        if (a.lower_bound) out << "  h1 >= " << *a.lower_bound << " (subset sweep)\n";
        if (a.h1) out << "  h1 = " << *a.h1 << "\n";
        if (a.h2) out << "  h2 = " << *a.h2 << "\n";
    }
    return out.str();
}

} // namespace arrlab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrlab/aomoto.hpp"
#include "arrlab/io.hpp"
#include "arrlab/mgraph.hpp"

namespace arrlab {

struct AnalyzeOptions {
    std::optional<int> m;     // analyze one m (possibly a non-divisor)
    bool all_divisors = true; // ignored when m is set
    bool aomoto = false;      // compute eigenspace dimensions
    bool include_witness = true;
    long long lower_bound_budget = 0;
    std::optional<double> time_budget_seconds;
};

struct MGraphReport {
    long long vertices = 0;
    long long edges = 0;
    Rational efficiency;
    int complexity = 0;
    bool reduced = true;
    bool unsaturated = true;
    bool connected = true;

    friend bool operator==(const MGraphReport&, const MGraphReport&) = default;
};

struct AnalysisReport {
    int m = 0;
    bool divides = false;
    std::optional<MGraphReport> mgraph; // present for m >= 3
    EsvStatus status = EsvStatus::NotCalculable;
    std::optional<std::string> condition; // "a" | "b" when calculable
    std::optional<std::vector<int>> witness;
    std::vector<std::string> quick_flags;
    std::optional<long long> lower_bound;
    std::optional<long long> h1;
    std::optional<long long> h2;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct Report {
    std::string name;
    int degree = 0;
    std::vector<std::pair<int, long long>> stratum_counts; // multiplicity >= 3
    long long double_points = 0;
    long long euler_characteristic = 0;
    std::string lambda_convention;
    std::vector<AnalysisReport> analyses;

    friend bool operator==(const Report&, const Report&) = default;
};

Report analyze_arrangement(const Incidence& inc, const AnalyzeOptions& options = {});

// Byte-deterministic for a fixed report; parse(emit(r)) == r.
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

std::string report_to_text(const Report& report);

std::string status_string(EsvStatus status);

} // namespace arrlab

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrlab/aomoto.hpp"
#include "arrlab/esv.hpp"
#include "arrlab/families.hpp"
#include "arrlab/io.hpp"
#include "arrlab/mgraph.hpp"
#include "arrlab/report.hpp"

namespace {

constexpr unsigned long long kDefaultCeiling = 5'000'000ULL;

unsigned long long search_ceiling() {
    if (const char* env = std::getenv("ARRLAB_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw arrlab::UsageError("ARRLAB_BUDGET must be a non-negative integer");
        }
    }
    return kDefaultCeiling;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw arrlab::Error("cannot write '" + path + "'");
    out << content;
}

int run_analyze(const std::string& path, arrlab::AnalyzeOptions options, const std::string& format,
                const std::string& dot_path) {
    const arrlab::LoadedArrangement loaded = arrlab::load_arrangement(path);
    if (!dot_path.empty()) {
        if (!options.m)
            throw arrlab::UsageError("--dot needs an explicit --m");
        const arrlab::MGraph g = arrlab::build_mgraph(loaded.incidence, *options.m);
        write_file(dot_path, arrlab::export_dot(g));
    }
    const arrlab::Report report = arrlab::analyze_arrangement(loaded.incidence, options);
    if (format == "json")
        std::cout << arrlab::report_to_json(report);
    else
        std::cout << arrlab::report_to_text(report);
    for (const auto& a : report.analyses)
        if (a.status == arrlab::EsvStatus::UnknownBudget) return 3;
    return 0;
}

int run_family(const std::string& name, const std::vector<long long>& params,
               const std::string& emit_path) {
    const arrlab::Family family = arrlab::builtin_family(name, params);
    const std::string text = arrlab::emit_arrangement(arrlab::family_to_input(family));
    if (emit_path.empty())
        std::cout << text;
    else
        write_file(emit_path, text);
    return 0;
}

int run_oracle(const std::string& path, int m, const std::string& condition_name) {
    const arrlab::LoadedArrangement loaded = arrlab::load_arrangement(path);
    const arrlab::Condition condition =
        condition_name == "a" ? arrlab::Condition::A : arrlab::Condition::B;
    const arrlab::OracleResult result =
        arrlab::oracle_search(loaded.incidence, m, condition, search_ceiling());
    std::cout << "condition (" << condition_name << "), m = " << m << ": ";
    if (result.exists) {
        std::cout << "witness";
        for (int line : *result.witness) std::cout << " " << line;
    } else {
        std::cout << "no witness";
    }
    std::cout << " (checked " << result.checked << " subsets)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of projective line arrangements: strata, m-graphs, "
                 "eigenspace calculability, Aomoto complex dimensions"};
    app.require_subcommand(1);

    // analyze
    std::string analyze_path, format = "text", dot_path;
    arrlab::AnalyzeOptions options;
    options.include_witness = false;
    int m_flag = 0;
    bool all_divisors = false, witness_flag = false, aomoto_flag = false, lower_bound = false;
    long long lower_bound_budget = 100000;
    double time_budget = 0.0;
    auto* analyze = app.add_subcommand("analyze", "analyze an arrangement file");
    analyze->add_option("file", analyze_path, "arrangement file")->required();
    auto* m_opt = analyze->add_option("--m", m_flag, "analyze this m only");
    analyze->add_flag("--all-divisors", all_divisors, "analyze every divisor m > 1 (default)")
        ->excludes(m_opt);
    analyze->add_flag("--aomoto", aomoto_flag, "compute eigenspace dimensions");
    analyze->add_flag("--witness", witness_flag, "include witnesses in the report");
    analyze->add_option("--dot", dot_path, "write the m-graph (needs --m) as DOT text");
    analyze->add_flag("--lower-bound", lower_bound,
                      "sweep subsets for an eigenspace lower bound when not calculable");
    analyze->add_option("--lower-bound-budget", lower_bound_budget,
                        "subsets to sweep for the lower bound (default 100000, implies "
                        "--lower-bound)");
    analyze->add_option("--time-budget", time_budget, "wall-clock budget in seconds (0 = none)");
    analyze->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // family
    std::string family_name, emit_path;
    std::vector<long long> family_params;
    auto* family = app.add_subcommand("family", "emit a built-in arrangement file");
    family->add_option("name", family_name,
                       "gaa3 | grid | hessian | fermat_ceva | ex32_f1 | ex32_f2 | sec24_block")
        ->required();
    family->add_option("params", family_params, "family parameters");
    family->add_option("--emit", emit_path, "output path (stdout when omitted)");

    // oracle
    std::string oracle_path, oracle_condition = "b";
    int oracle_m = 0;
    auto* oracle = app.add_subcommand("oracle", "exhaustive witness enumeration (ground truth)");
    oracle->add_option("file", oracle_path, "arrangement file")->required();
    oracle->add_option("--m", oracle_m, "eigenvalue order")->required();
    oracle->add_option("--condition", oracle_condition, "a | b")
        ->check(CLI::IsMember({"a", "b"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            if (*m_opt) options.m = m_flag;
            options.aomoto = aomoto_flag;
            options.include_witness = witness_flag;
            const bool sweep = lower_bound || analyze->count("--lower-bound-budget") > 0;
            options.lower_bound_budget = sweep ? lower_bound_budget : 0;
            if (time_budget > 0) options.time_budget_seconds = time_budget;
            return run_analyze(analyze_path, options, format, dot_path);
        }
        if (family->parsed()) return run_family(family_name, family_params, emit_path);
        if (oracle->parsed()) return run_oracle(oracle_path, oracle_m, oracle_condition);
    } catch (const arrlab::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const arrlab::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const arrlab::DegenerateInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const arrlab::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "arrlab/arrangement.hpp"

namespace arrlab {

// The two resonance conditions of the calculability criterion, stated for a
// subset J of d/m lines. At every point P of multiplicity >= 3 whose
// multiplicity is divisible by m:
//   A:  m * |J_P| <= |I_P|      B:  m * |J_P| >= |I_P|
enum class Condition { A, B };

struct Witness {
    std::vector<int> lines; // sorted, |lines| = d/m
    Condition condition = Condition::B;
};

enum class Sign { Plus, Minus };

/// Rational weights attached to the lines: for the plus sign 1 - 1/m on J
/// and -1/m elsewhere; the minus sign negates both. Always sums to zero.
struct WeightVector {
    std::vector<Rational> alphas;
    int m = 0;
    std::vector<int> subset; // J
    Sign sign = Sign::Plus;
};

// Inequality route. Cross-checks the stratum-form route internally.
bool check_condition_a(const Incidence& inc, int m, const std::vector<int>& J);
bool check_condition_b(const Incidence& inc, int m, const std::vector<int>& J);

// Stratum-form route, implemented independently of the inequality route;
// used to re-validate every witness any search returns.
bool check_condition_a_strata(const Incidence& inc, int m, const std::vector<int>& J);
bool check_condition_b_strata(const Incidence& inc, int m, const std::vector<int>& J);

bool check_condition(const Incidence& inc, int m, const std::vector<int>& J, Condition c);

struct SearchLimits {
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Lexicographically least witness for the condition, or nullopt once the
// search space is exhausted. Exact branch-and-bound on line inclusion in
// index order. Throws BudgetError on deadline expiry.
std::optional<Witness> find_witness(const Incidence& inc, int m, Condition condition,
                                    const SearchLimits& limits = {});

// Quick sufficient tests. Each returned witness has been re-validated
// through both condition routes.

// Fires when some point has multiplicity >= d/m not divisible by m: the
// lowest-indexed d/m lines through it satisfy condition A.
std::optional<Witness> witness_high_multiplicity(const Incidence& inc, int m);

// Fires when sum_k |L^[km]| * k <= d/m (m-efficiency at most 1): greedy
// per-point line picks padded to size d/m satisfy condition B.
std::optional<Witness> witness_low_efficiency(const Incidence& inc, int m);

struct CoverOutcome {
    bool applicable = false; // complexity bound satisfied
    std::optional<Witness> witness;
};

// Constructive condition-B witness for arrangements whose m-graph has
// complexity at most ceil(m/2): covers the divisible stratum by r lines
// with m*r <= d (reducing first when the graph is not reduced) and pads.
CoverOutcome witness_line_cover(const Incidence& inc, int m);

// The raw cover used above, on an m-reduced arrangement: lines covering
// every point of multiplicity exactly m, with m * (number of lines) <= d.
// Requires complexity(inc, m) <= ceil(m/2).
std::vector<int> cover_lines(const Incidence& inc, int m);

// Greedy attempt at a subset meeting every relevant point at most once
// (which implies condition A).
std::optional<Witness> witness_greedy_disjoint(const Incidence& inc, int m);

WeightVector weight_vector(const Incidence& inc, int m, const std::vector<int>& J, Sign sign);

// True when alpha_P is not a positive integer at every point of
// multiplicity >= 3. Equivalent to condition A for plus-sign weights and to
// condition B for minus-sign weights.
bool weights_admissible(const Incidence& inc, const WeightVector& w);

enum class EsvStatus {
    VanishesNonDivisor, // m does not divide d: the eigenspace vanishes
    Calculable,
    NotCalculable,
    UnknownBudget, // search budget exhausted before a certificate either way
};

struct QuickFlags {
    bool high_multiplicity = false;
    bool low_efficiency = false;
    bool line_cover = false;
    bool greedy_disjoint = false;
};

struct EsvVerdict {
    int m = 0;
    EsvStatus status = EsvStatus::NotCalculable;
    std::optional<Witness> witness;
    QuickFlags quick;
    // Best Aomoto h^1 seen over the (budgeted) subset sweep when not
    // calculable; a lower bound for the true eigenspace dimension.
    std::optional<long long> lower_bound;
};

struct EsvOptions {
    long long lower_bound_budget = 0; // subsets to sweep; 0 disables
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Full pipeline for one m: vanishing test, quick paths in a fixed order,
// then the exact searches for condition B and condition A.
EsvVerdict analyze_divisor(const Incidence& inc, int m, const EsvOptions& options = {});

// One verdict per divisor m > 1 of the degree, ascending.
std::vector<EsvVerdict> esv_report(const Incidence& inc, const EsvOptions& options = {});

// Exhaustive enumeration oracle (testing + the CLI oracle command).
struct OracleResult {
    bool exists = false;
    std::optional<std::vector<int>> witness; // lexicographically least
    unsigned long long checked = 0;
};

// Refuses (BudgetError) when C(d, d/m) exceeds the ceiling.
OracleResult oracle_search(const Incidence& inc, int m, Condition condition,
                           unsigned long long ceiling);

// C(n, k), saturating at 2^63-1.
unsigned long long subset_count(int n, int k);

} // namespace arrlab

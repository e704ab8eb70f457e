#include "arrlab/esv.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "arrlab/aomoto.hpp"
#include "arrlab/mgraph.hpp"

namespace arrlab {

namespace {

void require_subset(const Incidence& inc, int m, const std::vector<int>& J) {
    if (m < 2) throw UsageError("conditions are defined for m >= 2");
    if (inc.degree % m != 0 || static_cast<int>(J.size()) != inc.degree / m)
        throw UsageError("subset size must be d/m = " + std::to_string(inc.degree) + "/" +
                         std::to_string(m));
    std::set<int> seen;
    for (int i : J) {
        if (i < 0 || i >= inc.degree || !seen.insert(i).second)
            throw UsageError("subset contains an out-of-range or repeated line index");
    }
}

// Points that enter the conditions: multiplicity >= 3 and divisible by m.
std::vector<int> relevant_points(const Incidence& inc, int m) {
    std::vector<int> out;
    for (std::size_t i = 0; i < inc.points.size(); ++i)
        if (multiplicity(inc.points[i]) % m == 0) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<char> subset_mask(const Incidence& inc, const std::vector<int>& J) {
    std::vector<char> mask(inc.degree, 0);
    for (int i : J) mask[i] = 1;
    return mask;
}

int count_in(const std::vector<int>& lines, const std::vector<char>& mask) {
    int c = 0;
    for (int line : lines) c += mask[line];
    return c;
}

bool condition_a_inequalities(const Incidence& inc, int m, const std::vector<char>& mask) {
    for (const auto& p : inc.points) {
        const int mult = multiplicity(p);
        if (mult % m != 0) continue;
        if (m * count_in(p.lines, mask) > mult) return false;
    }
    return true;
}

bool condition_b_inequalities(const Incidence& inc, int m, const std::vector<char>& mask) {
    for (const auto& p : inc.points) {
        const int mult = multiplicity(p);
        if (mult % m != 0) continue;
        if (m * count_in(p.lines, mask) < mult) return false;
    }
    return true;
}

Witness validated_witness(const Incidence& inc, int m, std::vector<int> J, Condition c) {
    std::sort(J.begin(), J.end());
    if (!check_condition(inc, m, J, c))
        throw Error("internal: constructed subset failed re-validation");
    return Witness{std::move(J), c};
}

} // namespace

bool check_condition_a(const Incidence& inc, int m, const std::vector<int>& J) {
    require_subset(inc, m, J);
    const bool by_inequality = condition_a_inequalities(inc, m, subset_mask(inc, J));
    if (by_inequality != check_condition_a_strata(inc, m, J))
        throw Error("internal: condition A routes disagree");
    return by_inequality;
}

bool check_condition_b(const Incidence& inc, int m, const std::vector<int>& J) {
    require_subset(inc, m, J);
    const bool by_inequality = condition_b_inequalities(inc, m, subset_mask(inc, J));
    if (by_inequality != check_condition_b_strata(inc, m, J))
        throw Error("internal: condition B routes disagree");
    return by_inequality;
}

// Stratum form of condition A: for every k >= 2, a relevant point lying on
// exactly k lines of J has multiplicity at least k*m.
bool check_condition_a_strata(const Incidence& inc, int m, const std::vector<int>& J) {
    require_subset(inc, m, J);
    const auto mask = subset_mask(inc, J);
    for (int k = 2; k <= static_cast<int>(J.size()); ++k) {
        for (int pid : relevant_points(inc, m)) {
            const auto& p = inc.points[pid];
            if (count_in(p.lines, mask) == k && multiplicity(p) < k * m) return false;
        }
    }
    return true;
}

// Stratum form of condition B: for every k >= 1, every relevant point of
// multiplicity exactly k*m lies on at least k lines of J.
bool check_condition_b_strata(const Incidence& inc, int m, const std::vector<int>& J) {
    require_subset(inc, m, J);
    const auto mask = subset_mask(inc, J);
    const int max_k = inc.degree / m;
    for (int k = 1; k <= max_k; ++k) {
        for (int pid : relevant_points(inc, m)) {
            const auto& p = inc.points[pid];
            if (multiplicity(p) == k * m && count_in(p.lines, mask) < k) return false;
        }
    }
    return true;
}

bool check_condition(const Incidence& inc, int m, const std::vector<int>& J, Condition c) {
    return c == Condition::A ? check_condition_a(inc, m, J) : check_condition_b(inc, m, J);
}

// ---------------------------------------------------------------------------
// Exact branch-and-bound search
// ---------------------------------------------------------------------------

namespace {

struct Searcher {
    const Incidence& inc;
    int m;
    Condition condition;
    int want; // d/m
    std::optional<std::chrono::steady_clock::time_point> deadline;

    std::vector<int> relevant;           // relevant point ids
    std::vector<std::vector<int>> at;    // line -> positions in `relevant`
    std::vector<int> capacity;           // per relevant point: |I_P| / m
    std::vector<int> taken;              // per relevant point: |J_P| so far
    std::vector<int> closing;            // per point, count of incident lines with index >= i
    std::vector<std::vector<int>> lines_of; // relevant point -> its lines
    int max_coverage = 1;                // most relevant points on one line
    std::vector<int> chosen;
    unsigned long long nodes = 0;

    Searcher(const Incidence& inc_, int m_, Condition c, const SearchLimits& limits)
        : inc(inc_), m(m_), condition(c), want(inc_.degree / m_), deadline(limits.deadline) {
        relevant = relevant_points(inc, m);
        at.resize(inc.degree);
        for (std::size_t r = 0; r < relevant.size(); ++r) {
            const auto& p = inc.points[relevant[r]];
            capacity.push_back(multiplicity(p) / m);
            lines_of.push_back(p.lines);
            for (int line : p.lines) at[line].push_back(static_cast<int>(r));
        }
        taken.assign(relevant.size(), 0);
        for (int line = 0; line < inc.degree; ++line)
            max_coverage = std::max(max_coverage, static_cast<int>(at[line].size()));
    }

    void tick() {
        if (deadline && ++nodes % 64 == 0 && std::chrono::steady_clock::now() > *deadline)
            throw BudgetError("witness search: wall-clock budget exhausted");
    }

    // Remaining demand for condition B: slots left must be able to cover it.
    bool feasible_b(int next_index, int slots_left) const {
        long long residual = 0;
        for (std::size_t r = 0; r < relevant.size(); ++r) {
            const int need = capacity[r] - taken[r];
            if (need <= 0) continue;
            // lines of this point still selectable
            int avail = 0;
            for (int line : lines_of[r])
                if (line >= next_index) ++avail;
            if (avail < need) return false;
            residual += need;
        }
        return residual <= static_cast<long long>(slots_left) * max_coverage;
    }

    bool dfs(int next_index, int slots_left) {
        tick();
        // Condition A capacities are maintained on every include; condition B
        // demands are certified by the feasibility bound, which at
        // slots_left == 0 reduces to "all demands met".
        if (condition == Condition::B && !feasible_b(next_index, slots_left)) return false;
        if (slots_left == 0) return true;
        if (inc.degree - next_index < slots_left) return false;

        // Include next_index first: lexicographically least witness wins.
        bool can_include = true;
        if (condition == Condition::A) {
            for (int r : at[next_index])
                if (taken[r] + 1 > capacity[r]) {
                    can_include = false;
                    break;
                }
        }
        if (can_include) {
            for (int r : at[next_index]) ++taken[r];
            chosen.push_back(next_index);
            if (dfs(next_index + 1, slots_left - 1)) return true;
            chosen.pop_back();
            for (int r : at[next_index]) --taken[r];
        }
        return dfs(next_index + 1, slots_left);
    }
};

} // namespace

std::optional<Witness> find_witness(const Incidence& inc, int m, Condition condition,
                                    const SearchLimits& limits) {
    if (m < 2) throw UsageError("find_witness: needs m >= 2");
    if (inc.degree % m != 0)
        throw UsageError("find_witness: m must divide the degree (the eigenspace vanishes "
                         "otherwise)");
    Searcher s(inc, m, condition, limits);
    if (!s.dfs(0, inc.degree / m)) return std::nullopt;
    return validated_witness(inc, m, s.chosen, condition);
}

// ---------------------------------------------------------------------------
// Quick sufficient tests
// ---------------------------------------------------------------------------

std::optional<Witness> witness_high_multiplicity(const Incidence& inc, int m) {
    if (m < 2 || inc.degree % m != 0) return std::nullopt;
    const int size = inc.degree / m;

    auto witness_through = [&](const std::vector<int>& lines_here) -> std::optional<Witness> {
        std::vector<int> J(lines_here.begin(), lines_here.begin() + size);
        if (!check_condition(inc, m, J, Condition::A)) return std::nullopt;
        return Witness{std::move(J), Condition::A};
    };

    for (const auto& p : inc.points) {
        const int mult = multiplicity(p);
        if (mult % m != 0 && mult >= size)
            if (auto w = witness_through(p.lines)) return w;
    }
    if (2 >= size && 2 % m != 0) {
        // Double points qualify when d/m <= 2; scan pairs in lex order.
        std::set<std::pair<int, int>> explicit_pairs;
        for (const auto& p : inc.points)
            for (std::size_t i = 0; i < p.lines.size(); ++i)
                for (std::size_t j = i + 1; j < p.lines.size(); ++j)
                    explicit_pairs.emplace(p.lines[i], p.lines[j]);
        for (int i = 0; i < inc.degree; ++i)
            for (int j = i + 1; j < inc.degree; ++j)
                if (!explicit_pairs.count({i, j}))
                    if (auto w = witness_through({i, j})) return w;
    }
    return std::nullopt;
}

std::optional<Witness> witness_low_efficiency(const Incidence& inc, int m) {
    if (m < 2 || inc.degree % m != 0) return std::nullopt;
    const int size = inc.degree / m;
    long long weight_sum = 0;
    for (const auto& p : inc.points)
        if (multiplicity(p) % m == 0) weight_sum += multiplicity(p) / m;
    if (weight_sum > size) return std::nullopt;

    std::set<int> J;
    for (const auto& p : inc.points) {
        if (multiplicity(p) % m != 0) continue;
        const int k = multiplicity(p) / m;
        for (int i = 0; i < k; ++i) J.insert(p.lines[i]);
    }
    for (int line = 0; line < inc.degree && static_cast<int>(J.size()) < size; ++line)
        J.insert(line);
    std::vector<int> lines(J.begin(), J.end());
    if (!check_condition(inc, m, lines, Condition::B)) return std::nullopt;
    return Witness{std::move(lines), Condition::B};
}

std::vector<int> cover_lines(const Incidence& inc, int m) {
    if (m < 3) throw UsageError("cover_lines: needs m >= 3");
    if (complexity(inc, m) > (m + 1) / 2)
        throw UsageError("cover_lines: complexity bound ceil(m/2) violated");
    for (int pid : stratum_div(inc, m))
        if (multiplicity(inc.points[pid]) != m)
            throw UsageError("cover_lines: arrangement is not m-reduced");

    // Walk over the original stratum, keeping sets of uncovered points and
    // remaining lines; each step removes the chosen line together with the
    // lines whose stratum points all lie on it.
    std::vector<int> points = stratum_div(inc, m);
    std::vector<char> covered(points.size(), 0);
    std::vector<char> line_remaining(inc.degree, 1);
    std::vector<std::vector<int>> on_line(inc.degree);
    for (std::size_t r = 0; r < points.size(); ++r)
        for (int line : inc.points[points[r]].lines) on_line[line].push_back(static_cast<int>(r));

    std::vector<int> cover;
    while (true) {
        int pick = -1;
        for (int line = 0; line < inc.degree && pick < 0; ++line) {
            if (!line_remaining[line]) continue;
            int uncovered_here = 0;
            for (int r : on_line[line]) uncovered_here += !covered[r];
            if (uncovered_here >= 2) pick = line;
        }
        if (pick < 0) break;
        cover.push_back(pick);
        std::set<int> now_on_pick; // stratum points covered by this step
        for (int r : on_line[pick])
            if (!covered[r]) {
                covered[r] = 1;
                now_on_pick.insert(r);
            }
        line_remaining[pick] = 0;
        // Remove the lines whose stratum points (uncovered before this
        // step) were all on the picked line, and at least one was.
        for (int line = 0; line < inc.degree; ++line) {
            if (!line_remaining[line]) continue;
            bool any_on_pick = false, contained = true;
            for (int r : on_line[line]) {
                if (now_on_pick.count(r)) {
                    any_on_pick = true;
                } else if (!covered[r]) {
                    contained = false;
                }
            }
            if (any_on_pick && contained) line_remaining[line] = 0;
        }
    }
    // No remaining line carries two uncovered points: one line each.
    for (std::size_t r = 0; r < points.size(); ++r) {
        if (covered[r]) continue;
        int pick = -1;
        for (int line : inc.points[points[r]].lines)
            if (line_remaining[line]) {
                pick = line;
                break;
            }
        if (pick < 0) throw Error("internal: cover ran out of lines");
        cover.push_back(pick);
        line_remaining[pick] = 0;
        covered[r] = 1;
    }
    std::sort(cover.begin(), cover.end());
    if (static_cast<long long>(m) * static_cast<long long>(cover.size()) > inc.degree)
        throw Error("internal: cover exceeds degree budget");
    return cover;
}

CoverOutcome witness_line_cover(const Incidence& inc, int m) {
    CoverOutcome out;
    if (m < 3) return out;
    if (complexity(inc, m) > (m + 1) / 2) return out;
    out.applicable = true;
    if (inc.degree % m != 0) return out;

    bool reduced = true;
    for (int pid : stratum_div(inc, m))
        if (multiplicity(inc.points[pid]) != m) reduced = false;

    std::set<int> J;
    if (reduced) {
        for (int line : cover_lines(inc, m)) J.insert(line);
    } else {
        MReduction red;
        try {
            red = m_reduce(inc, m);
        } catch (const ReductionError&) {
            out.applicable = false; // decomposition unavailable; the quick path abstains
            return out;
        }
        std::vector<int> back(red.reduced.degree);
        for (int i = 0; i < inc.degree; ++i)
            if (red.index_map[i] >= 0) back[red.index_map[i]] = i;
        for (int line : cover_lines(red.reduced, m)) J.insert(back[line]);
        // Top up every heavy point with k-1 of its split-off lines so the
        // original per-point demands are met.
        for (const auto& [pid, moved] : red.moved_at_point) {
            const int k = multiplicity(inc.points[pid]) / m;
            for (int i = 0; i < k - 1; ++i) J.insert(moved[i]);
        }
    }
    for (int line = 0; line < inc.degree && static_cast<int>(J.size()) < inc.degree / m; ++line)
        J.insert(line);
    std::vector<int> lines(J.begin(), J.end());
    if (static_cast<int>(lines.size()) != inc.degree / m)
        throw Error("internal: cover witness has the wrong size");
    out.witness = validated_witness(inc, m, std::move(lines), Condition::B);
    return out;
}

std::optional<Witness> witness_greedy_disjoint(const Incidence& inc, int m) {
    if (m < 2 || inc.degree % m != 0) return std::nullopt;
    const int size = inc.degree / m;
    const std::vector<int> relevant = relevant_points(inc, m);
    std::vector<std::vector<int>> at(inc.degree);
    for (std::size_t r = 0; r < relevant.size(); ++r)
        for (int line : inc.points[relevant[r]].lines) at[line].push_back(static_cast<int>(r));

    std::vector<char> hit(relevant.size(), 0);
    std::vector<int> J;
    for (int line = 0; line < inc.degree && static_cast<int>(J.size()) < size; ++line) {
        bool clash = false;
        for (int r : at[line])
            if (hit[r]) {
                clash = true;
                break;
            }
        if (clash) continue;
        for (int r : at[line]) hit[r] = 1;
        J.push_back(line);
    }
    if (static_cast<int>(J.size()) != size) return std::nullopt;
    if (!check_condition(inc, m, J, Condition::A)) return std::nullopt;
    return Witness{std::move(J), Condition::A};
}

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

WeightVector weight_vector(const Incidence& inc, int m, const std::vector<int>& J, Sign sign) {
    require_subset(inc, m, J);
    WeightVector w;
    w.m = m;
    w.subset = J;
    std::sort(w.subset.begin(), w.subset.end());
    w.sign = sign;
    const Rational in_j = sign == Sign::Plus ? Rational(m - 1, m) : Rational(-(m - 1), m);
    const Rational out_j = sign == Sign::Plus ? Rational(-1, m) : Rational(1, m);
    w.alphas.assign(inc.degree, out_j);
    for (int i : w.subset) w.alphas[i] = in_j;
    return w;
}

bool weights_admissible(const Incidence& inc, const WeightVector& w) {
    for (const auto& p : inc.points) {
        Rational alpha_p(0);
        for (int line : p.lines) alpha_p += w.alphas[line];
        if (denominator(alpha_p) == 1 && alpha_p > 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------------

EsvVerdict analyze_divisor(const Incidence& inc, int m, const EsvOptions& options) {
    if (m < 2) throw UsageError("analyze_divisor: needs m >= 2");
    EsvVerdict v;
    v.m = m;
    if (inc.degree <= 0 || inc.degree % m != 0) {
        v.status = EsvStatus::VanishesNonDivisor;
        return v;
    }

    if (auto w = witness_high_multiplicity(inc, m)) {
        v.status = EsvStatus::Calculable;
        v.witness = std::move(w);
        v.quick.high_multiplicity = true;
        return v;
    }
    if (auto w = witness_low_efficiency(inc, m)) {
        v.status = EsvStatus::Calculable;
        v.witness = std::move(w);
        v.quick.low_efficiency = true;
        return v;
    }
    if (m >= 3) {
        auto outcome = witness_line_cover(inc, m);
        if (outcome.applicable && outcome.witness) {
            v.status = EsvStatus::Calculable;
            v.witness = std::move(outcome.witness);
            v.quick.line_cover = true;
            return v;
        }
    }
    if (auto w = witness_greedy_disjoint(inc, m)) {
        v.status = EsvStatus::Calculable;
        v.witness = std::move(w);
        v.quick.greedy_disjoint = true;
        return v;
    }

    SearchLimits limits{options.deadline};
    try {
        if (auto w = find_witness(inc, m, Condition::B, limits)) {
            v.status = EsvStatus::Calculable;
            v.witness = std::move(w);
            return v;
        }
        if (auto w = find_witness(inc, m, Condition::A, limits)) {
            v.status = EsvStatus::Calculable;
            v.witness = std::move(w);
            return v;
        }
    } catch (const BudgetError&) {
        v.status = EsvStatus::UnknownBudget;
        return v;
    }

    v.status = EsvStatus::NotCalculable;
    if (options.lower_bound_budget > 0)
        v.lower_bound = max_h1_over_subsets(inc, m, options.lower_bound_budget);
    return v;
}

std::vector<EsvVerdict> esv_report(const Incidence& inc, const EsvOptions& options) {
    if (inc.degree < 1) throw UsageError("esv_report: empty arrangement");
    std::vector<EsvVerdict> out;
    for (int m = 2; m <= inc.degree; ++m)
        if (inc.degree % m == 0) out.push_back(analyze_divisor(inc, m, options));
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

unsigned long long subset_count(int n, int k) {
    if (k < 0 || k > n) return 0;
    const unsigned long long cap = std::numeric_limits<long long>::max();
    unsigned long long result = 1;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i) {
        // result *= (n - k + i) / i, exactly, with saturation
        unsigned long long numerator = static_cast<unsigned long long>(n - k + i);
        if (result > cap / numerator) return cap;
        result = result * numerator / static_cast<unsigned long long>(i);
    }
    return result;
}

OracleResult oracle_search(const Incidence& inc, int m, Condition condition,
                           unsigned long long ceiling) {
    if (m < 2 || inc.degree % m != 0)
        throw UsageError("oracle_search: m must divide the degree, m >= 2");
    const int size = inc.degree / m;
    const unsigned long long total = subset_count(inc.degree, size);
    if (total > ceiling)
        throw BudgetError("oracle_search: C(" + std::to_string(inc.degree) + "," +
                          std::to_string(size) + ") = " + std::to_string(total) +
                          " subsets exceed the ceiling of " + std::to_string(ceiling));

    OracleResult result;
    std::vector<int> J(size);
    for (int i = 0; i < size; ++i) J[i] = i;
    const auto check = condition == Condition::A ? condition_a_inequalities
                                                 : condition_b_inequalities;
    while (true) {
        ++result.checked;
        if (check(inc, m, subset_mask(inc, J))) {
            result.exists = true;
            result.witness = J;
            return result;
        }
        // next combination in lexicographic order
        int i = size - 1;
        while (i >= 0 && J[i] == inc.degree - size + i) --i;
        if (i < 0) break;
        ++J[i];
        for (int j = i + 1; j < size; ++j) J[j] = J[j - 1] + 1;
    }
    return result;
}

} // namespace arrlab

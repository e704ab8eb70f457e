#include "arrlab/arrangement.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace arrlab {

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

std::string join(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

} // namespace

std::vector<Violation> validate(const Incidence& inc) {
    std::vector<Violation> out;
    std::map<std::pair<int, int>, int> pair_owner;
    long long pair_sum = 0;
    for (std::size_t pid = 0; pid < inc.points.size(); ++pid) {
        const auto& lines = inc.points[pid].lines;
        bool index_ok = true;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (lines[i] < 0 || lines[i] >= inc.degree || (i > 0 && lines[i] <= lines[i - 1])) {
                out.push_back({"bad_index", "point " + std::to_string(pid) +
                                                ": line indices {" + join(lines) +
                                                "} are not a strictly increasing subset of [0," +
                                                std::to_string(inc.degree) + ")"});
                index_ok = false;
                break;
            }
        }
        if (lines.size() < 3)
            out.push_back({"low_multiplicity", "point " + std::to_string(pid) +
                                                   " has multiplicity " +
                                                   std::to_string(lines.size()) + " < 3"});
        if (!index_ok) continue;
        pair_sum += choose2(static_cast<long long>(lines.size()));
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                auto [it, fresh] =
                    pair_owner.emplace(std::make_pair(lines[i], lines[j]), static_cast<int>(pid));
                if (!fresh)
                    out.push_back({"pair_reused",
                                   "lines " + std::to_string(lines[i]) + " and " +
                                       std::to_string(lines[j]) + " co-occur at points " +
                                       std::to_string(it->second) + " and " + std::to_string(pid)});
            }
    }
    if (pair_sum > choose2(inc.degree))
        out.push_back({"pair_count_excess",
                       "sum of C(mult,2) over points is " + std::to_string(pair_sum) +
                           " > C(" + std::to_string(inc.degree) + ",2)"});
    return out;
}

void require_valid(const Incidence& inc) {
    auto violations = validate(inc);
    if (violations.empty()) return;
    std::ostringstream out;
    out << "invalid incidence structure";
    if (!inc.name.empty()) out << " '" << inc.name << "'";
    out << ":";
    for (const auto& v : violations) out << "\n  [" << v.code << "] " << v.message;
    throw DegenerateInputError(out.str());
}

std::vector<int> stratum(const Incidence& inc, int k) {
    if (k < 3) throw UsageError("stratum: explicit membership needs k >= 3");
    std::vector<int> out;
    for (std::size_t i = 0; i < inc.points.size(); ++i)
        if (multiplicity(inc.points[i]) == k) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> stratum_geq(const Incidence& inc, int k) {
    if (k < 3) throw UsageError("stratum_geq: explicit membership needs k >= 3");
    std::vector<int> out;
    for (std::size_t i = 0; i < inc.points.size(); ++i)
        if (multiplicity(inc.points[i]) >= k) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> stratum_div(const Incidence& inc, int m) {
    if (m < 3) throw UsageError("stratum_div: needs m >= 3");
    std::vector<int> out;
    for (std::size_t i = 0; i < inc.points.size(); ++i)
        if (multiplicity(inc.points[i]) % m == 0) out.push_back(static_cast<int>(i));
    return out;
}

long long double_point_count(const Incidence& inc) {
    long long pairs = choose2(inc.degree);
    for (const auto& p : inc.points) pairs -= choose2(multiplicity(p));
    return pairs;
}

std::map<int, long long> stratum_counts(const Incidence& inc) {
    std::map<int, long long> out;
    for (const auto& p : inc.points) ++out[multiplicity(p)];
    return out;
}

long long euler_characteristic_complement(const Incidence& inc) {
    long long chi = 3 - 2LL * inc.degree;
    for (const auto& p : inc.points) chi += multiplicity(p) - 1;
    chi += double_point_count(inc); // each implicit double contributes 1
    return chi;
}

MReduction m_reduce(const Incidence& inc, int m) {
    if (m < 3) throw UsageError("m_reduce: needs m >= 3");
    const std::vector<int> divisible = stratum_div(inc, m);

    // line -> divisible points containing it
    std::vector<std::vector<int>> div_points_on(inc.degree);
    for (int pid : divisible)
        for (int line : inc.points[pid].lines) div_points_on[line].push_back(pid);

    std::set<int> moved_set;
    std::vector<std::pair<int, std::vector<int>>> moved_at;
    for (int pid : divisible) {
        const int mult = multiplicity(inc.points[pid]);
        const int k = mult / m - 1;
        if (k <= 0) continue;
        std::vector<int> eligible; // lines meeting the divisible stratum only at this point
        for (int line : inc.points[pid].lines)
            if (div_points_on[line].size() == 1) eligible.push_back(line);
        if (static_cast<int>(eligible.size()) < k * m)
            throw ReductionError("m_reduce: point " + std::to_string(pid) + " of multiplicity " +
                                 std::to_string(mult) + " has only " +
                                 std::to_string(eligible.size()) + " private lines, needs " +
                                 std::to_string(k * m));
        eligible.resize(static_cast<std::size_t>(k) * m); // lowest indices first
        moved_at.emplace_back(pid, eligible);
        moved_set.insert(eligible.begin(), eligible.end());
    }

    MReduction result;
    result.moved.assign(moved_set.begin(), moved_set.end());
    result.index_map.assign(inc.degree, -1);
    int next = 0;
    for (int i = 0; i < inc.degree; ++i)
        if (!moved_set.count(i)) result.index_map[i] = next++;

    result.reduced.degree = next;
    result.reduced.name = inc.name.empty() ? "" : inc.name + "/reduced";
    for (const auto& rec : inc.points) {
        PointRecord kept;
        for (int line : rec.lines)
            if (result.index_map[line] >= 0) kept.lines.push_back(result.index_map[line]);
        if (kept.lines.size() < 3) continue;
        kept.source = rec.source;
        result.reduced.points.push_back(std::move(kept));
    }
    result.moved_at_point = std::move(moved_at);

    // The split may in principle drop an off-stratum point into a
    // multiplicity divisible by m; that leftover is not m-reduced and the
    // decomposition does not exist along this route.
    for (const auto& rec : result.reduced.points) {
        const int mult = multiplicity(rec);
        if (mult % m == 0 && mult != m)
            throw ReductionError(
                "m_reduce: leftover arrangement has a point of multiplicity " +
                std::to_string(mult) + ", not m-reduced");
    }
    return result;
}

Incidence disjoint_union(const Incidence& a, const Incidence& b) {
    Incidence out;
    out.degree = a.degree + b.degree;
    out.name = a.name.empty() && b.name.empty() ? "" : a.name + "+" + b.name;
    out.points = a.points;
    for (const auto& rec : b.points) {
        PointRecord shifted;
        shifted.lines.reserve(rec.lines.size());
        for (int line : rec.lines) shifted.lines.push_back(line + a.degree);
        out.points.push_back(std::move(shifted));
    }
    return out;
}

Incidence attach_star(const Incidence& base, int m, int point_id, int line_through, int k0,
                      int k_star) {
    if (m < 3) throw UsageError("attach_star: needs m >= 3");
    if (point_id < 0 || point_id >= static_cast<int>(base.points.size()))
        throw UsageError("attach_star: no point with id " + std::to_string(point_id));
    const PointRecord& p = base.points[point_id];
    if (multiplicity(p) % m != 0)
        throw ConstructionError("attach_star: point " + std::to_string(point_id) +
                                " has multiplicity " + std::to_string(multiplicity(p)) +
                                " not divisible by m = " + std::to_string(m));
    if (std::find(p.lines.begin(), p.lines.end(), line_through) == p.lines.end())
        throw UsageError("attach_star: line " + std::to_string(line_through) +
                         " does not pass through point " + std::to_string(point_id));
    if (k0 < 1) throw ConstructionError("attach_star: k0 >= 1 required");
    const int spokes = k0 * m - 1; // lines through q other than line_through
    if (k_star < spokes)
        throw ConstructionError("attach_star: k_star >= k0*m - 1 required (every line through the "
                                "new point carries one satellite); got k_star = " +
                                std::to_string(k_star) + " < " + std::to_string(spokes));

    Incidence out = base;
    out.name = base.name.empty() ? "star" : base.name + "+star";
    const int d0 = base.degree;
    out.degree = d0 + k_star * m;

    // Spoke lines through the new point q sit right after the old lines;
    // each carries one satellite whose remaining lines are private to it.
    // The first satellite absorbs the excess weight.
    PointRecord q;
    q.lines.push_back(line_through);
    for (int s = 0; s < spokes; ++s) q.lines.push_back(d0 + s);
    std::sort(q.lines.begin(), q.lines.end());
    out.points.push_back(std::move(q));

    int next_line = d0 + spokes;
    for (int s = 0; s < spokes; ++s) {
        const int weight = (s == 0) ? k_star - (spokes - 1) : 1;
        PointRecord satellite;
        satellite.lines.push_back(d0 + s);
        for (int t = 0; t < weight * m - 1; ++t) satellite.lines.push_back(next_line++);
        std::sort(satellite.lines.begin(), satellite.lines.end());
        out.points.push_back(std::move(satellite));
    }
    if (next_line != out.degree) throw Error("internal: attach_star line accounting");
    return out;
}

Incidence generate_generic_plus_nodes(int n, unsigned long long seed) {
    if (n < 3) throw UsageError("generate_generic_plus_nodes: needs n >= 3");
    const int d = n * (n + 1) / 2;

    // Label permutation from the seed (hand-rolled Fisher-Yates so the
    // result does not depend on the standard library implementation).
    std::vector<int> label(d);
    for (int i = 0; i < d; ++i) label[i] = i;
    std::mt19937_64 rng(seed);
    for (int i = d - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<unsigned long long>(i + 1));
        std::swap(label[i], label[j]);
    }

    Incidence out;
    out.degree = d;
    out.name = "generic_nodes(" + std::to_string(n) + ")";
    int node_line = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            PointRecord rec;
            rec.lines = {label[i], label[j], label[node_line++]};
            std::sort(rec.lines.begin(), rec.lines.end());
            out.points.push_back(std::move(rec));
        }
    std::sort(out.points.begin(), out.points.end(),
              [](const PointRecord& a, const PointRecord& b) { return a.lines < b.lines; });
    return out;
}

Incidence pencil(int k) {
    if (k < 3) throw UsageError("pencil: needs k >= 3 lines");
    Incidence out;
    out.degree = k;
    out.name = "pencil(" + std::to_string(k) + ")";
    PointRecord center;
    for (int i = 0; i < k; ++i) center.lines.push_back(i);
    out.points.push_back(std::move(center));
    return out;
}

} // namespace arrlab

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrlab/geometry.hpp"

namespace arrlab {

/// One singular point of multiplicity >= 3: the sorted set of indices of the
/// lines through it, plus the exact coordinates when the arrangement came
/// from a coordinate description.
struct PointRecord {
    std::vector<int> lines;
    std::optional<ProjPoint> source;

    friend bool operator==(const PointRecord& a, const PointRecord& b) {
        return a.lines == b.lines;
    }
};

/// Combinatorial arrangement of `degree` lines in the projective plane.
/// Only points of multiplicity >= 3 are listed; any pair of lines not
/// co-occurring in a record meets in an implicit double point. Immutable
/// after construction by convention.
struct Incidence {
    int degree = 0;
    std::vector<PointRecord> points;
    std::string name;
};

struct Violation {
    std::string code;    // bad_index | low_multiplicity | pair_reused | pair_count_excess
    std::string message; // names the offending point or pair
};

// Diagnostics, not exceptions: empty result means every invariant holds.
std::vector<Violation> validate(const Incidence& inc);

// Throws DegenerateInputError listing all violations (for ingestion paths).
void require_valid(const Incidence& inc);

// Multiplicity of a point record.
inline int multiplicity(const PointRecord& p) { return static_cast<int>(p.lines.size()); }

// Point ids (indices into inc.points) with multiplicity == k / >= k /
// divisible by m. Explicit membership starts at k = 3; double points are
// only ever counted, never materialized.
std::vector<int> stratum(const Incidence& inc, int k);
std::vector<int> stratum_geq(const Incidence& inc, int k);
std::vector<int> stratum_div(const Incidence& inc, int m);

long long double_point_count(const Incidence& inc);

// multiplicity (>= 3) -> number of points, ascending.
std::map<int, long long> stratum_counts(const Incidence& inc);

// Euler characteristic of the complement P^2 \ L:
// 3 - 2d + sum over all singular points (including implicit doubles) of
// (mult_P - 1).
long long euler_characteristic_complement(const Incidence& inc);

/// Result of the m-reduction: `reduced` is the m-reduced arrangement L',
/// `moved` the original indices of the split-off lines L'' (each meets the
/// divisible stratum in exactly one point), `index_map` sends an original
/// line index to its index in L' (-1 if moved). `moved_at_point` groups the
/// moved lines by the heavy point they belonged to.
struct MReduction {
    Incidence reduced;
    std::vector<int> moved;
    std::vector<int> index_map;
    std::vector<std::pair<int, std::vector<int>>> moved_at_point;
};

// Splits off, at every point of multiplicity (k+1)m with k >= 1, exactly km
// of its incident lines that contain no other point of the divisible
// stratum (lowest indices first). Throws ReductionError when some point has
// too few such lines or when the leftover arrangement fails to be m-reduced.
MReduction m_reduce(const Incidence& inc, int m);

// Concatenates two arrangements with reindexing; all cross pairs are
// implicit double points.
Incidence disjoint_union(const Incidence& a, const Incidence& b);

/// Attaches a star-shaped block to `base` at point `point_id`: a new point q
/// of multiplicity k0*m on line `line_through`, each further line through q
/// carrying exactly one new satellite point of multiplicity divisible by m.
/// `k_star` is the total weight of the satellites; the construction needs
/// k_star >= k0*m - 1 (one satellite per spoke). Adds k_star*m lines.
Incidence attach_star(const Incidence& base, int m, int point_id, int line_through, int k0,
                      int k_star);

// n "generic" lines plus one private line through each of their n(n-1)/2
// crossings, so every crossing becomes a triple point. Degree n(n+1)/2.
// The seed only permutes line labels; the result is deterministic.
Incidence generate_generic_plus_nodes(int n, unsigned long long seed);

// k >= 3 concurrent lines.
Incidence pencil(int k);

// Groups all pairwise intersections of distinct canonical lines by exact
// point equality and emits the incidence structure. Duplicate lines are
// degenerate input.
Incidence compute_incidence(const std::vector<ProjLine>& lines, std::string name = "");

} // namespace arrlab

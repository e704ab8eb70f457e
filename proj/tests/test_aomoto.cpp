#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "arrlab/aomoto.hpp"
#include "arrlab/families.hpp"

using namespace arrlab;

namespace {

WeightVector raw_weights(std::vector<Rational> alphas) {
    WeightVector w;
    w.alphas = std::move(alphas);
    return w;
}

// Plain Gaussian elimination over the rationals, independent of the
// fraction-free implementation in the library.
long long rank_oracle(std::vector<std::vector<Rational>> rows) {
    std::size_t cols = 0;
    for (const auto& r : rows) cols = std::max(cols, r.size());
    long long rank = 0;
    std::size_t row_at = 0;
    for (std::size_t col = 0; col < cols && row_at < rows.size(); ++col) {
        std::size_t pivot = row_at;
        while (pivot < rows.size() && (col >= rows[pivot].size() || rows[pivot][col] == 0))
            ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row_at], rows[pivot]);
        for (std::size_t r = row_at + 1; r < rows.size(); ++r) {
            if (col >= rows[r].size() || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / rows[row_at][col];
            for (std::size_t c = col; c < rows[r].size(); ++c)
                rows[r][c] -= factor * rows[row_at][c];
        }
        ++row_at;
        ++rank;
    }
    return rank;
}

std::vector<Rational> random_zero_sum(std::mt19937_64& rng, int d) {
    std::vector<Rational> alphas(d);
    Rational sum(0);
    for (int i = 0; i + 1 < d; ++i) {
        alphas[i] = Rational(static_cast<long long>(rng() % 9) - 4,
                             1 + static_cast<long long>(rng() % 3));
        sum += alphas[i];
    }
    alphas[d - 1] = -sum;
    return alphas;
}

// h^1 in the affine chart obtained by dropping the last line: generators
// e_0..e_{d-2}; pairs meeting on the last line become parallel and vanish;
// the remaining points keep their anchored relations.
long long affine_h1_oracle(const Incidence& inc, const std::vector<Rational>& alphas) {
    const int d = inc.degree;
    const int chart = d - 1;
    std::map<std::pair<int, int>, std::vector<int>> point_of_pair;
    for (const auto& p : inc.points)
        for (std::size_t i = 0; i < p.lines.size(); ++i)
            for (std::size_t j = i + 1; j < p.lines.size(); ++j)
                point_of_pair[{p.lines[i], p.lines[j]}] = p.lines;

    // basis: anchored pairs at points away from the chart line
    std::map<std::pair<int, int>, int> basis;
    auto anchored = [&](int j, int k) -> std::vector<std::pair<int, std::pair<int, int>>> {
        // expansion of e_j ^ e_k (j < k, both < chart) as +- basis pairs
        auto it = point_of_pair.find({j, k});
        std::vector<int> lines = it != point_of_pair.end() ? it->second : std::vector<int>{j, k};
        if (std::find(lines.begin(), lines.end(), chart) != lines.end()) return {}; // parallel
        const int anchor = lines.front();
        if (j == anchor) return {{+1, {j, k}}};
        return {{+1, {anchor, k}}, {-1, {anchor, j}}};
    };
    for (const auto& [pair, lines] : point_of_pair) {
        (void)pair;
        if (std::find(lines.begin(), lines.end(), chart) != lines.end()) continue;
        for (std::size_t i = 1; i < lines.size(); ++i)
            basis.emplace(std::make_pair(lines.front(), lines[i]), 0);
    }
    for (int i = 0; i < chart; ++i)
        for (int j = i + 1; j < chart; ++j)
            if (!point_of_pair.count({i, j})) basis.emplace(std::make_pair(i, j), 0);
    int index = 0;
    for (auto& [pair, idx] : basis) {
        (void)pair;
        idx = index++;
    }

    std::vector<std::vector<Rational>> rows(chart, std::vector<Rational>(basis.size(), 0));
    bool omega_zero = true;
    for (int i = 0; i < chart; ++i) {
        for (int j = 0; j < chart; ++j) {
            if (j == i || alphas[j] == 0) continue;
            omega_zero = false;
            const int lo = std::min(i, j), hi = std::max(i, j);
            const Rational coeff = j < i ? alphas[j] : -alphas[j];
            for (const auto& [sgn, pair] : anchored(lo, hi)) {
                auto it = basis.find(pair);
                REQUIRE(it != basis.end());
                rows[i][it->second] += Rational(sgn) * coeff;
            }
        }
    }
    REQUIRE(!omega_zero);
    return (chart - rank_oracle(std::move(rows))) - 1;
}

} // namespace

TEST_CASE("second exterior degree dimensions") {
    // three generic lines: three double points
    Incidence triangle;
    triangle.degree = 3;
    CHECK(build_os(triangle).dim_a2 == 3);
    // hessian: 9 * 3 + 12 * 1
    CHECK(build_os(builtin_family("hessian", {}).incidence).dim_a2 == 39);
    // gaa3(2): 4 * 2 + 3 * 1
    CHECK(build_os(builtin_family("gaa3", {2}).incidence).dim_a2 == 11);

    for (const auto& [name, params] :
         std::vector<std::pair<std::string, std::vector<long long>>>{
             {"gaa3", {3}}, {"grid", {5}}, {"fermat_ceva", {4}}, {"ex32_f1", {}}}) {
        const Incidence inc = builtin_family(name, params).incidence;
        long long expected = double_point_count(inc);
        for (const auto& p : inc.points) expected += multiplicity(p) - 1;
        CHECK(build_os(inc).dim_a2 == expected);
    }
}

TEST_CASE("squaring the differential gives zero") {
    std::mt19937_64 rng(31);
    const std::vector<Incidence> fixtures = {builtin_family("gaa3", {2}).incidence,
                                             builtin_family("ex32_f2", {}).incidence,
                                             pencil(4)};
    int cases = 0;
    for (const Incidence& inc : fixtures) {
        const OSAlgebra os = build_os(inc);
        for (int t = 0; t < 170; ++t) {
            const auto alphas = random_zero_sum(rng, inc.degree);
            bool zero = true;
            for (const auto& a : alphas) zero = zero && a == 0;
            if (zero) continue;
            const auto rows = aomoto_matrix(os, raw_weights(alphas));
            // omega ^ (omega ^ 1) = sum_i alpha_i * rows[i] must vanish
            for (long long c = 0; c < os.dim_a2; ++c) {
                Rational entry(0);
                for (int i = 0; i < inc.degree; ++i) entry += alphas[i] * rows[i][c];
                REQUIRE(entry == 0);
            }
            ++cases;
        }
    }
    CHECK(cases >= 500);
}

TEST_CASE("four generic lines, explicit differential") {
    Incidence inc;
    inc.degree = 4; // no triple points: six double points
    const OSAlgebra os = build_os(inc);
    CHECK(os.dim_a2 == 6);
    const std::vector<Rational> alphas = {1, -1, Rational(1, 2), Rational(-1, 2)};
    const auto rows = aomoto_matrix(os, raw_weights(alphas));
    CHECK(rows.size() == 4);
    CHECK(rank_oracle(rows) == 3);
    CHECK(aomoto_h1(inc, raw_weights(alphas)) == 0);
}

TEST_CASE("library rank agrees with the elimination oracle") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 60; ++t) {
        const int rows_n = 2 + static_cast<int>(rng() % 6);
        const int cols_n = 2 + static_cast<int>(rng() % 6);
        std::vector<std::vector<Rational>> m(rows_n, std::vector<Rational>(cols_n));
        for (auto& row : m)
            for (auto& x : row)
                x = Rational(static_cast<long long>(rng() % 7) - 3,
                             1 + static_cast<long long>(rng() % 3));
        CHECK(exact_rank(m) == rank_oracle(m));
    }
}

TEST_CASE("eigenspace dimensions on the paper fixtures") {
    SUBCASE("gaa3(2), the net-class subset, plus sign") {
        const Incidence inc = builtin_family("gaa3", {2}).incidence;
        const WeightVector w = weight_vector(inc, 3, {0, 1}, Sign::Plus);
        CHECK(aomoto_h1(inc, w) == 1);
    }
    SUBCASE("hessian with one net class") {
        const Incidence inc = builtin_family("hessian", {}).incidence;
        const WeightVector w = weight_vector(inc, 4, {0, 1, 2}, Sign::Plus);
        CHECK(aomoto_h1(inc, w) == 2);
    }
    SUBCASE("full pipeline: hessian per order") {
        const Incidence inc = builtin_family("hessian", {}).incidence;
        const EigenspaceDimensions m4 = eigenspace_dimension(inc, 4);
        CHECK(m4.verdict.status == EsvStatus::Calculable);
        CHECK(m4.h1 == 2);
        CHECK(m4.h2 == 20);
        for (int m : {3, 6, 12}) {
            const EigenspaceDimensions dims = eigenspace_dimension(inc, m);
            CHECK(dims.verdict.status == EsvStatus::Calculable);
            CHECK(dims.h1 == 0);
            CHECK(dims.h2 == 18);
        }
    }
    SUBCASE("full pipeline: gaa3(2) at m = 3") {
        const EigenspaceDimensions dims =
            eigenspace_dimension(builtin_family("gaa3", {2}).incidence, 3);
        CHECK(dims.verdict.status == EsvStatus::Calculable);
        CHECK(dims.h1 == 1);
        CHECK(dims.h2 == 3); // chi = 2
    }
    SUBCASE("full pipeline: gaa3(3) is bounded from below only") {
        EsvOptions options;
        options.lower_bound_budget = 100;
        const EigenspaceDimensions dims =
            eigenspace_dimension(builtin_family("gaa3", {3}).incidence, 3, options);
        CHECK(dims.verdict.status == EsvStatus::NotCalculable);
        CHECK_FALSE(dims.h1.has_value());
        REQUIRE(dims.verdict.lower_bound.has_value());
        CHECK(*dims.verdict.lower_bound == 1);
    }
}

TEST_CASE("subset sweep lower bound for gaa3(3)") {
    CHECK(max_h1_over_subsets(builtin_family("gaa3", {3}).incidence, 3, 84) == 1);
}

TEST_CASE("central model agrees with the affine-chart oracle") {
    std::mt19937_64 rng(41);
    const std::vector<Incidence> fixtures = {
        builtin_family("gaa3", {2}).incidence, builtin_family("ex32_f1", {}).incidence,
        pencil(4), generate_generic_plus_nodes(3, 0)};
    for (const Incidence& inc : fixtures) {
        for (int t = 0; t < 15; ++t) {
            const auto alphas = random_zero_sum(rng, inc.degree);
            bool aff_zero = true;
            for (int i = 0; i + 1 < inc.degree; ++i) aff_zero = aff_zero && alphas[i] == 0;
            if (aff_zero) continue;
            CHECK(aomoto_h1(inc, raw_weights(alphas)) == affine_h1_oracle(inc, alphas));
        }
    }
    // also with the structured weights of the two sign conventions
    const Incidence hess = builtin_family("hessian", {}).incidence;
    for (const std::vector<int>& J :
         std::vector<std::vector<int>>{{0, 1, 2}, {0, 4, 8}, {3, 8, 10}}) {
        const WeightVector plus = weight_vector(hess, 4, J, Sign::Plus);
        CHECK(aomoto_h1(hess, plus) == affine_h1_oracle(hess, plus.alphas));
    }
}

TEST_CASE("euler characteristic equals the alternating sum of chart dimensions") {
    // chi(U) = 1 - (d-1) + dim A^2 of the chart complement of the last line.
    for (const auto& [name, params] :
         std::vector<std::pair<std::string, std::vector<long long>>>{
             {"gaa3", {2}}, {"gaa3", {3}}, {"grid", {4}}, {"grid", {6}}, {"hessian", {}},
             {"fermat_ceva", {3}}, {"fermat_ceva", {4}}, {"ex32_f1", {}}, {"ex32_f2", {}},
             {"sec24_block", {}}}) {
        const Incidence inc = builtin_family(name, params).incidence;
        const int chart = inc.degree - 1;
        long long dim_a2_chart = 0;
        long long pairs_seen = 0;
        for (const auto& p : inc.points) {
            const bool on_chart =
                std::find(p.lines.begin(), p.lines.end(), chart) != p.lines.end();
            pairs_seen += 1LL * multiplicity(p) * (multiplicity(p) - 1) / 2;
            if (!on_chart) dim_a2_chart += multiplicity(p) - 1;
        }
        // doubles away from the chart line
        const long long doubles_total = 1LL * inc.degree * (inc.degree - 1) / 2 - pairs_seen;
        long long doubles_on_chart = chart;
        for (const auto& p : inc.points)
            if (std::find(p.lines.begin(), p.lines.end(), chart) != p.lines.end())
                doubles_on_chart -= multiplicity(p) - 1;
        dim_a2_chart += doubles_total - doubles_on_chart;
        CHECK(euler_characteristic_complement(inc) == 1 - chart + dim_a2_chart);
    }
}

TEST_CASE("plus and minus signs give the same cohomology dimension") {
    const Incidence hess = builtin_family("hessian", {}).incidence;
    for (const std::vector<int>& J :
         std::vector<std::vector<int>>{{0, 1, 2}, {3, 8, 10}, {4, 6, 11}, {5, 7, 9}}) {
        const long long plus = aomoto_h1(hess, weight_vector(hess, 4, J, Sign::Plus));
        const long long minus = aomoto_h1(hess, weight_vector(hess, 4, J, Sign::Minus));
        CHECK(plus == minus);
    }
    const Incidence g2 = builtin_family("gaa3", {2}).incidence;
    CHECK(aomoto_h1(g2, weight_vector(g2, 3, {0, 1}, Sign::Plus)) ==
          aomoto_h1(g2, weight_vector(g2, 3, {0, 1}, Sign::Minus)));
}

TEST_CASE("relabeling lines does not change h1") {
    const Incidence inc = builtin_family("gaa3", {2}).incidence;
    std::mt19937_64 rng(43);
    std::vector<int> perm(inc.degree);
    for (int i = 0; i < inc.degree; ++i) perm[i] = i;
    for (int i = inc.degree - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);

    Incidence relabeled;
    relabeled.degree = inc.degree;
    for (const auto& p : inc.points) {
        PointRecord rec;
        for (int line : p.lines) rec.lines.push_back(perm[line]);
        std::sort(rec.lines.begin(), rec.lines.end());
        relabeled.points.push_back(std::move(rec));
    }
    std::sort(relabeled.points.begin(), relabeled.points.end(),
              [](const PointRecord& a, const PointRecord& b) { return a.lines < b.lines; });

    const WeightVector w = weight_vector(inc, 3, {0, 1}, Sign::Plus);
    WeightVector moved = w;
    for (int i = 0; i < inc.degree; ++i) moved.alphas[perm[i]] = w.alphas[i];
    moved.subset = {perm[0], perm[1]};
    CHECK(aomoto_h1(inc, w) == aomoto_h1(relabeled, moved));
}

TEST_CASE("resonance membership") {
    SUBCASE("the 3-net of the first degree-9 arrangement") {
        const Incidence inc = builtin_family("ex32_f1", {}).incidence;
        // collect the subsets that meet every triple point exactly once
        std::vector<std::vector<int>> classes;
        std::vector<int> J = {0, 1, 2};
        while (true) {
            std::vector<char> mask(9, 0);
            for (int i : J) mask[i] = 1;
            bool net = true;
            for (const auto& p : inc.points) {
                int c = 0;
                for (int line : p.lines) c += mask[line];
                net = net && c == 1;
            }
            if (net) classes.push_back(J);
            int i = 2;
            while (i >= 0 && J[i] == 9 - 3 + i) --i;
            if (i < 0) break;
            ++J[i];
            for (int j = i + 1; j < 3; ++j) J[j] = J[j - 1] + 1;
        }
        REQUIRE(classes.size() == 3);
        std::set<int> all;
        for (const auto& c : classes) all.insert(c.begin(), c.end());
        REQUIRE(all.size() == 9); // a genuine partition

        const WeightVector w = weight_vector(inc, 3, classes[0], Sign::Plus);
        const auto coefficients =
            resonance_membership(inc, w, classes, std::vector<long long>(9, 1));
        REQUIRE(coefficients.has_value());
        CHECK(*coefficients == std::vector<Rational>{Rational(2, 3), Rational(-1, 3),
                                                     Rational(-1, 3)});
    }
    SUBCASE("a single class can only carry omega = 0") {
        const Incidence inc = builtin_family("gaa3", {2}).incidence;
        const WeightVector w = weight_vector(inc, 3, {0, 1}, Sign::Plus);
        std::vector<int> everything = {0, 1, 2, 3, 4, 5};
        CHECK_FALSE(resonance_membership(inc, w, {everything}, std::vector<long long>(6, 1))
                        .has_value());
    }
    SUBCASE("a partition transverse to the weights is rejected") {
        const Incidence inc = builtin_family("gaa3", {2}).incidence;
        const WeightVector w = weight_vector(inc, 3, {0, 1}, Sign::Plus);
        // {0,2,4} mixes subset and non-subset lines: coefficients cannot agree
        CHECK_FALSE(resonance_membership(inc, w, {{0, 2, 4}, {1, 3, 5}},
                                         std::vector<long long>(6, 1))
                        .has_value());
    }
    SUBCASE("malformed partitions") {
        const Incidence inc = builtin_family("gaa3", {2}).incidence;
        const WeightVector w = weight_vector(inc, 3, {0, 1}, Sign::Plus);
        CHECK_THROWS_AS(
            resonance_membership(inc, w, {{0, 1, 2}}, std::vector<long long>(6, 1)),
            UsageError);
        CHECK_THROWS_AS(resonance_membership(inc, w, {{0, 1, 2}, {2, 3, 4, 5}},
                                             std::vector<long long>(6, 1)),
                        UsageError);
        CHECK_THROWS_AS(resonance_membership(inc, w, {{0, 1, 2}, {3, 4, 5}},
                                             std::vector<long long>(6, 2)),
                        UsageError);
    }
}

TEST_CASE("truncated complex satisfies rank-nullity bookkeeping") {
    std::mt19937_64 rng(47);
    const Incidence inc = builtin_family("gaa3", {3}).incidence;
    const OSAlgebra os = build_os(inc);
    for (int t = 0; t < 20; ++t) {
        const auto alphas = random_zero_sum(rng, inc.degree);
        bool zero = true;
        for (const auto& a : alphas) zero = zero && a == 0;
        if (zero) continue;
        const auto rows = aomoto_matrix(os, raw_weights(alphas));
        const long long rank = rank_oracle(rows);
        const long long h0 = 0; // omega != 0
        const long long h1 = (inc.degree - rank) - 1;
        const long long h2_truncated = os.dim_a2 - rank;
        CHECK(h0 - h1 + h2_truncated == 1 - inc.degree + os.dim_a2);
        CHECK(aomoto_h1(os, raw_weights(alphas)) == h1);
    }
}

TEST_CASE("weight preconditions") {
    const Incidence inc = builtin_family("gaa3", {2}).incidence;
    CHECK_THROWS_AS(aomoto_h1(inc, raw_weights({1, 2, 3, 4, 5, 6})), UsageError);
    CHECK_THROWS_AS(aomoto_h1(inc, raw_weights({0, 0, 0, 0, 0, 0})), UsageError);
}

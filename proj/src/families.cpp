#include "arrlab/families.hpp"

#include <algorithm>

namespace arrlab {

namespace {

CycRat q(long long v, int order) { return CycRat(Rational(v), order); }

ProjLine line_q(long long a, long long b, long long c) {
    return make_line(q(a, 1), q(b, 1), q(c, 1));
}

Family coordinate_family(std::string name, int order, std::vector<ProjLine> lines) {
    Family f;
    f.name = std::move(name);
    f.cyclotomic_order = order;
    f.incidence = compute_incidence(lines, f.name);
    f.lines = std::move(lines);
    return f;
}

Family gaa3(long long a) {
    if (a < 2) throw UsageError("gaa3: needs a >= 2");
    const int n = static_cast<int>(a);
    std::vector<ProjLine> lines;
    const CycRat zero = q(0, n);
    for (int i = 0; i < n; ++i) lines.push_back(make_line(q(1, n), -zeta_power(n, i), zero));
    for (int i = 0; i < n; ++i) lines.push_back(make_line(q(1, n), zero, -zeta_power(n, i)));
    for (int i = 0; i < n; ++i) lines.push_back(make_line(zero, q(1, n), -zeta_power(n, i)));
    return coordinate_family("gaa3(" + std::to_string(a) + ")", n, std::move(lines));
}

Family grid(long long a) {
    if (a < 2) throw UsageError("grid: needs a >= 2");
    std::vector<ProjLine> lines;
    for (long long i = 0; i < a; ++i) lines.push_back(line_q(1, 0, -i));
    for (long long j = 0; j < a; ++j) lines.push_back(line_q(0, 1, -j));
    for (long long k = 0; k < a; ++k) lines.push_back(line_q(1, 1, -k));
    return coordinate_family("grid(" + std::to_string(a) + ")", 1, std::move(lines));
}

Family hessian() {
    std::vector<ProjLine> lines;
    const CycRat zero = q(0, 3);
    const CycRat one = q(1, 3);
    lines.push_back(make_line(one, zero, zero));
    lines.push_back(make_line(zero, one, zero));
    lines.push_back(make_line(zero, zero, one));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            lines.push_back(make_line(zeta_power(3, i), zeta_power(3, j), one));
    return coordinate_family("hessian", 3, std::move(lines));
}

Family fermat_ceva(long long m) {
    if (m < 3) throw UsageError("fermat_ceva: needs m >= 3");
    const int n = static_cast<int>(m);
    std::vector<ProjLine> lines;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            lines.push_back(make_line(zeta_power(n, i), zeta_power(n, j), q(1, n)));
    return coordinate_family("fermat_ceva(" + std::to_string(m) + ")", n, std::move(lines));
}

Family ex32(int which) {
    std::vector<ProjLine> lines;
    if (which == 1) {
        lines = {line_q(1, 0, 0),  line_q(0, 1, 0),   line_q(0, 0, 1),
                 line_q(0, 1, 2),  line_q(1, -1, 0),  line_q(1, -1, 1),
                 line_q(1, 1, -1), line_q(1, 1, 2),   line_q(1, -2, -1)};
    } else {
        lines = {line_q(1, 0, 0),  line_q(0, 1, 0),  line_q(0, 0, 1),
                 line_q(1, 1, 0),  line_q(0, 1, 1),  line_q(1, 0, 3),
                 line_q(1, 2, 1),  line_q(1, 2, 3),  line_q(2, 3, 3)};
    }
    return coordinate_family("ex32_f" + std::to_string(which), 1, std::move(lines));
}

// Degree-8 block with five triple points; its 3-graph has 7 edges and one
// line (index 0) through a single triple point only.
Family sec24_block() {
    Family f;
    f.name = "sec24_block";
    f.cyclotomic_order = 1;
    f.incidence.degree = 8;
    f.incidence.name = f.name;
    f.incidence.points = {
        PointRecord{{0, 1, 2}, std::nullopt}, PointRecord{{1, 3, 6}, std::nullopt},
        PointRecord{{2, 4, 7}, std::nullopt}, PointRecord{{3, 4, 5}, std::nullopt},
        PointRecord{{5, 6, 7}, std::nullopt}};
    return f;
}

} // namespace

Family builtin_family(const std::string& name, const std::vector<long long>& params) {
    auto want = [&](std::size_t n) {
        if (params.size() != n)
            throw UsageError("family '" + name + "' takes " + std::to_string(n) +
                             " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "gaa3") {
        want(1);
        return gaa3(params[0]);
    }
    if (name == "grid") {
        want(1);
        return grid(params[0]);
    }
    if (name == "hessian") {
        want(0);
        return hessian();
    }
    if (name == "fermat_ceva") {
        want(1);
        return fermat_ceva(params[0]);
    }
    if (name == "ex32_f1") {
        want(0);
        return ex32(1);
    }
    if (name == "ex32_f2") {
        want(0);
        return ex32(2);
    }
    if (name == "sec24_block") {
        want(0);
        return sec24_block();
    }
    throw UsageError("unknown family '" + name + "'");
}

} // namespace arrlab

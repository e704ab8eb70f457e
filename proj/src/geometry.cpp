#include "arrlab/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "arrlab/arrangement.hpp"

namespace arrlab {

namespace {

std::array<CycRat, 3> canonicalize(std::array<CycRat, 3> v, const char* what) {
    if (v[1].order() != v[0].order() || v[2].order() != v[0].order())
        throw UsageError(std::string(what) + ": mixed cyclotomic orders");
    int first = -1;
    for (int i = 0; i < 3; ++i) {
        if (!v[i].is_zero()) {
            first = i;
            break;
        }
    }
    if (first < 0) throw DegenerateInputError(std::string(what) + ": all three entries are zero");
    CycRat inv = v[first].inverse();
    for (int i = first; i < 3; ++i) v[i] = v[i] * inv;
    return v;
}

std::string triple_str(const std::array<CycRat, 3>& v, char open, char close) {
    std::ostringstream out;
    out << open << v[0].str() << " : " << v[1].str() << " : " << v[2].str() << close;
    return out.str();
}

} // namespace

ProjPoint make_point(CycRat x, CycRat y, CycRat z) {
    return ProjPoint{canonicalize({std::move(x), std::move(y), std::move(z)}, "point")};
}

ProjLine make_line(CycRat a, CycRat b, CycRat c) {
    return ProjLine{canonicalize({std::move(a), std::move(b), std::move(c)}, "line")};
}

std::string ProjPoint::str() const { return triple_str(coords, '(', ')'); }
std::string ProjLine::str() const { return triple_str(coeffs, '[', ']'); }

ProjPoint intersect(const ProjLine& l1, const ProjLine& l2) {
    if (l1 == l2) throw DegenerateInputError("intersect: identical lines " + l1.str());
    const auto& a = l1.coeffs;
    const auto& b = l2.coeffs;
    return make_point(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                      a[0] * b[1] - a[1] * b[0]);
}

bool incident(const ProjPoint& p, const ProjLine& l) {
    const CycRat sum = l.coeffs[0] * p.coords[0] + l.coeffs[1] * p.coords[1] +
                       l.coeffs[2] * p.coords[2];
    return sum.is_zero();
}

Incidence compute_incidence(const std::vector<ProjLine>& lines, std::string name) {
    const int d = static_cast<int>(lines.size());
    if (d < 2) throw UsageError("compute_incidence needs at least 2 lines");
    {
        std::map<ProjLine, int> seen;
        for (int i = 0; i < d; ++i) {
            auto [it, fresh] = seen.emplace(lines[i], i);
            if (!fresh)
                throw DegenerateInputError("duplicate line: indices " + std::to_string(it->second) +
                                           " and " + std::to_string(i) + " are both " +
                                           lines[i].str());
        }
    }

    // Group the C(d,2) pairwise intersections by canonical point.
    std::map<ProjPoint, std::set<int>> at_point;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            ProjPoint p = intersect(lines[i], lines[j]);
            auto& bucket = at_point[p];
            bucket.insert(i);
            bucket.insert(j);
        }

    Incidence inc;
    inc.degree = d;
    inc.name = std::move(name);
    for (const auto& [point, incident_lines] : at_point) {
        if (incident_lines.size() < 3) continue; // double points stay implicit
        PointRecord rec;
        rec.lines.assign(incident_lines.begin(), incident_lines.end());
        rec.source = point;
        inc.points.push_back(std::move(rec));
    }
    std::sort(inc.points.begin(), inc.points.end(),
              [](const PointRecord& a, const PointRecord& b) { return a.lines < b.lines; });
    return inc;
}

} // namespace arrlab

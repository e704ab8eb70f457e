#pragma once

#include <array>
#include <string>

#include "arrlab/cyclo.hpp"

namespace arrlab {

/// A point of the projective plane over Q(zeta_n), scale-normalized so the
/// first non-zero coordinate equals 1. Equality is coordinate equality.
struct ProjPoint {
    std::array<CycRat, 3> coords;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords == b.coords; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords < b.coords; }
    std::string str() const;
};

/// The line {ax + by + cz = 0}, same normalization as ProjPoint.
struct ProjLine {
    std::array<CycRat, 3> coeffs;

    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }
    friend bool operator<(const ProjLine& a, const ProjLine& b) { return a.coeffs < b.coeffs; }
    std::string str() const;
};

// Canonicalizing constructors; reject the all-zero triple and mixed orders.
ProjPoint make_point(CycRat x, CycRat y, CycRat z);
ProjLine make_line(CycRat a, CycRat b, CycRat c);

// The unique common point of two distinct lines (cross product of the
// coefficient triples, canonicalized). Identical lines are degenerate input.
ProjPoint intersect(const ProjLine& l1, const ProjLine& l2);

// Exact incidence test: a*x + b*y + c*z == 0.
bool incident(const ProjPoint& p, const ProjLine& l);

} // namespace arrlab

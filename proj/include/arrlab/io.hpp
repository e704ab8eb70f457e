#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/families.hpp"

namespace arrlab {

/// Parsed arrangement file. Coordinate mode stores each line as three
/// coefficients, each coefficient a list of rational strings indexed by
/// powers of zeta_n; incidence mode stores the degree plus the line-index
/// sets of the points of multiplicity >= 3. Exactly one mode per file.
struct ArrangementInput {
    enum class Mode { Coordinates, IncidenceLists };

    std::string name;
    Mode mode = Mode::Coordinates;
    int cyclotomic_order = 1;                              // coordinates mode
    std::vector<std::array<std::vector<Rational>, 3>> lines; // coordinates mode
    int degree = 0;                                        // incidence mode
    std::vector<std::vector<int>> points;                  // incidence mode
};

ArrangementInput parse_arrangement_text(const std::string& text);
ArrangementInput parse_arrangement_file(const std::string& path);

// Canonical, byte-deterministic serialization (full-length coefficient
// vectors, two-space indentation, trailing newline).
std::string emit_arrangement(const ArrangementInput& input);

ArrangementInput family_to_input(const Family& family);

/// A realized arrangement: the incidence structure, plus the exact lines
/// when the input carried coordinates.
struct LoadedArrangement {
    Incidence incidence;
    std::vector<ProjLine> lines; // empty in incidence mode
    int cyclotomic_order = 1;
};

// Coordinates: parse into lines over Q(zeta_n) and run compute_incidence.
// Incidence lists: build the structure and validate it.
LoadedArrangement realize(const ArrangementInput& input);

LoadedArrangement load_arrangement(const std::string& path);

} // namespace arrlab

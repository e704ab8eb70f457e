#pragma once

#include <string>
#include <vector>

#include "arrlab/arrangement.hpp"

namespace arrlab {

/// A built-in arrangement. Coordinate-backed families carry the defining
/// lines over Q(zeta_order); purely combinatorial ones only the incidence.
struct Family {
    std::string name;
    int cyclotomic_order = 1;
    std::vector<ProjLine> lines; // empty for combinatorial families
    Incidence incidence;
};

// Known families:
//   gaa3 a        (a >= 2)  lines of (x^a - y^a)(x^a - z^a)(y^a - z^a)
//   grid a        (a >= 2)  x - iz, y - jz, x + y - kz for 0 <= i,j,k < a
//   hessian                 xyz times the twelve lines of the Hessian pencil
//   fermat_ceva m (m >= 3)  zeta^i x + zeta^j y + z for all i, j mod m
//   ex32_f1, ex32_f2        the two degree-9 arrangements with nine triple points
//   sec24_block             the degree-8 block with five triple points (incidence only)
Family builtin_family(const std::string& name, const std::vector<long long>& params);

} // namespace arrlab

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arrlab/esv.hpp"

namespace arrlab {

/// Degrees <= 2 of the Orlik-Solomon algebra of the central cone over the
/// arrangement. A^1 is spanned by e_1..e_d; A^2 has one block per singular
/// point P (implicit doubles included) with basis the anchored pairs
/// (a_P, j), a_P = min I_P, j in I_P \ {a_P}. Any concurrent pair {j,k}
/// rewrites as e_a^e_k - e_a^e_j.
struct OSAlgebra {
    struct Flat {
        std::vector<int> lines; // sorted; anchor is lines.front()
        long long base = 0;     // index of (anchor, lines[1]) in the A^2 basis
    };

    int degree = 0;
    std::vector<Flat> flats; // explicit points first, then doubles, lex order
    long long dim_a2 = 0;
    std::map<std::pair<int, int>, int> flat_of_pair;

    // Index of the basis vector e_anchor ^ e_line within the flat.
    long long basis_index(const Flat& flat, int line) const;
};

OSAlgebra build_os(const Incidence& inc);

// Exact rank by fraction-free elimination; rows may have any length <= cols.
long long exact_rank(std::vector<std::vector<Rational>> rows);

// The differential omega^ : A^1 -> A^2 in the anchored basis, one row per
// generator e_i (so the matrix is degree x dim_a2).
std::vector<std::vector<Rational>> aomoto_matrix(const OSAlgebra& os, const WeightVector& w);

// dim H^1 of the projective Aomoto complex: with sum(alpha) = 0 the central
// complex splits, so this equals dim ker(omega^ : A^1 -> A^2) - 1.
// Requires omega != 0.
long long aomoto_h1(const OSAlgebra& os, const WeightVector& w);
long long aomoto_h1(const Incidence& inc, const WeightVector& w);

// Max Aomoto h^1 over subsets J of size d/m in lexicographic order, at most
// `budget` of them. A lower bound for the eigenspace dimension even when no
// subset satisfies the calculability conditions.
long long max_h1_over_subsets(const Incidence& inc, int m, long long budget);

struct EigenspaceDimensions {
    EsvVerdict verdict;
    std::optional<long long> h1; // exact when calculable
    std::optional<long long> h2; // chi(U) + h1, eigenvalue != 1
};

// Runs the divisor analysis and, when calculable, evaluates the Aomoto
// complex with the weight sign tied to the witness condition (plus for A,
// minus for B).
EigenspaceDimensions eigenspace_dimension(const Incidence& inc, int m,
                                          const EsvOptions& options = {});

// Decides whether omega lies in the span of the partition one-forms
// eta_j = sum_{i in I_j} mult_i e_i with sum of coefficients zero; returns
// the exact coefficients when it does. `mults` must have gcd 1.
std::optional<std::vector<Rational>> resonance_membership(
    const Incidence& inc, const WeightVector& w, const std::vector<std::vector<int>>& partition,
    const std::vector<long long>& mults);

} // namespace arrlab

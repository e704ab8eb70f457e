#include "arrlab/aomoto.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace arrlab {

long long OSAlgebra::basis_index(const Flat& flat, int line) const {
    auto it = std::lower_bound(flat.lines.begin(), flat.lines.end(), line);
    const long long pos = it - flat.lines.begin(); // anchor sits at position 0
    return flat.base + pos - 1;
}

OSAlgebra build_os(const Incidence& inc) {
    OSAlgebra os;
    os.degree = inc.degree;

    for (const auto& p : inc.points) os.flats.push_back({p.lines, 0});
    std::set<std::pair<int, int>> covered;
    for (const auto& p : inc.points)
        for (std::size_t i = 0; i < p.lines.size(); ++i)
            for (std::size_t j = i + 1; j < p.lines.size(); ++j)
                covered.emplace(p.lines[i], p.lines[j]);
    for (int i = 0; i < inc.degree; ++i)
        for (int j = i + 1; j < inc.degree; ++j)
            if (!covered.count({i, j})) os.flats.push_back({{i, j}, 0});

    long long base = 0;
    for (std::size_t f = 0; f < os.flats.size(); ++f) {
        os.flats[f].base = base;
        base += static_cast<long long>(os.flats[f].lines.size()) - 1;
        const auto& lines = os.flats[f].lines;
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j)
                os.flat_of_pair[{lines[i], lines[j]}] = static_cast<int>(f);
    }
    os.dim_a2 = base;
    return os;
}

namespace {

// Adds coeff * (e_j ^ e_k), j < k, to a column in the anchored basis.
void add_pair(const OSAlgebra& os, std::vector<Rational>& column, int j, int k,
              const Rational& coeff) {
    const auto it = os.flat_of_pair.find({j, k});
    if (it == os.flat_of_pair.end()) throw Error("internal: pair without a flat");
    const OSAlgebra::Flat& flat = os.flats[it->second];
    const int anchor = flat.lines.front();
    if (j == anchor) {
        column[os.basis_index(flat, k)] += coeff;
    } else {
        // e_j ^ e_k = e_a ^ e_k - e_a ^ e_j at a common point with anchor a
        column[os.basis_index(flat, k)] += coeff;
        column[os.basis_index(flat, j)] -= coeff;
    }
}

} // namespace

long long exact_rank(std::vector<std::vector<Rational>> rows) {
    // Clear denominators row-wise, then run fraction-free elimination on
    // integers (Bareiss pivot products stay divisibility-exact).
    std::size_t cols = 0;
    for (const auto& r : rows) cols = std::max(cols, r.size());
    std::vector<std::vector<BigInt>> m;
    m.reserve(rows.size());
    for (auto& r : rows) {
        BigInt lcm = 1;
        for (const auto& x : r)
            if (x != 0) lcm = boost::multiprecision::lcm(lcm, denominator(x));
        std::vector<BigInt> row(cols, 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < r.size(); ++i) {
            row[i] = numerator(r[i]) * (lcm / denominator(r[i]));
            nonzero = nonzero || row[i] != 0;
        }
        if (nonzero) m.push_back(std::move(row));
    }

    long long rank = 0;
    BigInt previous_pivot = 1;
    std::size_t row_at = 0;
    for (std::size_t col = 0; col < cols && row_at < m.size(); ++col) {
        std::size_t pivot = row_at;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row_at], m[pivot]);
        for (std::size_t r = row_at + 1; r < m.size(); ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[row_at][col] * m[r][c] - m[r][col] * m[row_at][c]) / previous_pivot;
            m[r][col] = 0;
        }
        previous_pivot = m[row_at][col];
        ++row_at;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> aomoto_matrix(const OSAlgebra& os, const WeightVector& w) {
    if (static_cast<int>(w.alphas.size()) != os.degree)
        throw UsageError("aomoto: weight length differs from the degree");
    std::vector<std::vector<Rational>> rows(os.degree,
                                            std::vector<Rational>(os.dim_a2, Rational(0)));
    for (int i = 0; i < os.degree; ++i) {
        for (int j = 0; j < os.degree; ++j) {
            if (j == i || w.alphas[j] == 0) continue;
            // omega ^ e_i picks up alpha_j * e_j ^ e_i
            if (j < i)
                add_pair(os, rows[i], j, i, w.alphas[j]);
            else
                add_pair(os, rows[i], i, j, -w.alphas[j]);
        }
    }
    return rows;
}

long long aomoto_h1(const OSAlgebra& os, const WeightVector& w) {
    Rational total(0);
    bool all_zero = true;
    for (const auto& a : w.alphas) {
        total += a;
        all_zero = all_zero && a == 0;
    }
    if (total != 0) throw UsageError("aomoto_h1: weights must sum to zero");
    if (all_zero) throw UsageError("aomoto_h1: omega must be non-zero");

    const long long kernel = os.degree - exact_rank(aomoto_matrix(os, w));
    return kernel - 1; // the image of A^0, spanned by omega itself
}

long long aomoto_h1(const Incidence& inc, const WeightVector& w) {
    return aomoto_h1(build_os(inc), w);
}

namespace {

// Row-echelon rank over Z/p. Ranks can only drop modulo p, so the derived
// kernel dimension upper-bounds the rational one; used as a cheap filter
// before the exact elimination.
constexpr long long kFilterPrime = 2147483647; // 2^31 - 1

long long modular_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    for (auto& row : m)
        for (auto& x : row) x = ((x % kFilterPrime) + kFilterPrime) % kFilterPrime;
    long long rank = 0;
    std::size_t row_at = 0;
    for (std::size_t col = 0; col < cols && row_at < m.size(); ++col) {
        std::size_t pivot = row_at;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row_at], m[pivot]);
        // modular inverse by exponentiation
        long long inv = 1, base = m[row_at][col], e = kFilterPrime - 2;
        while (e) {
            if (e & 1) inv = static_cast<long long>(static_cast<__int128>(inv) * base % kFilterPrime);
            base = static_cast<long long>(static_cast<__int128>(base) * base % kFilterPrime);
            e >>= 1;
        }
        for (std::size_t r = row_at + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            const long long factor =
                static_cast<long long>(static_cast<__int128>(m[r][col]) * inv % kFilterPrime);
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] = (m[r][c] -
                           static_cast<long long>(static_cast<__int128>(factor) * m[row_at][c] %
                                                  kFilterPrime) +
                           kFilterPrime) %
                          kFilterPrime;
            }
        }
        ++row_at;
        ++rank;
    }
    return rank;
}

} // namespace

long long max_h1_over_subsets(const Incidence& inc, int m, long long budget) {
    if (m < 2 || inc.degree % m != 0)
        throw UsageError("max_h1_over_subsets: m must divide the degree");
    const int d = inc.degree;
    const int size = d / m;
    const OSAlgebra os = build_os(inc);

    // Expansion of e_j ^ e_i for every pair, in the anchored basis, as
    // (basis index, sign) pairs; reused across the whole sweep.
    std::vector<std::vector<std::pair<long long, int>>> expansion(
        static_cast<std::size_t>(d) * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            if (i == j) continue;
            std::vector<Rational> column(os.dim_a2, Rational(0));
            if (j < i)
                add_pair(os, column, j, i, Rational(1));
            else
                add_pair(os, column, i, j, Rational(-1));
            for (long long c = 0; c < os.dim_a2; ++c)
                if (column[c] != 0)
                    expansion[static_cast<std::size_t>(j) * d + i].emplace_back(
                        c, column[c] > 0 ? 1 : -1);
        }

    long long best = 0;
    std::vector<int> J(size);
    std::iota(J.begin(), J.end(), 0);
    std::vector<char> mask(d, 0);
    std::vector<std::vector<long long>> rows(d, std::vector<long long>(os.dim_a2));
    long long used = 0;
    while (used < budget) {
        ++used;
        // Integer weights m*alpha: m-1 on the subset, -1 elsewhere. Plus and
        // minus weights are negatives of each other and share the kernel,
        // so one evaluation covers both signs.
        std::fill(mask.begin(), mask.end(), 0);
        for (int i : J) mask[i] = 1;
        for (auto& row : rows) std::fill(row.begin(), row.end(), 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                const long long alpha_j = mask[j] ? m - 1 : -1;
                for (const auto& [c, sign] : expansion[static_cast<std::size_t>(j) * d + i])
                    rows[i][c] += alpha_j * sign;
            }
        const long long h1_bound = (d - modular_rank(rows)) - 1;
        if (h1_bound > best)
            best = std::max(best, aomoto_h1(os, weight_vector(inc, m, J, Sign::Plus)));

        int i = size - 1;
        while (i >= 0 && J[i] == d - size + i) --i;
        if (i < 0) break;
        ++J[i];
        for (int j = i + 1; j < size; ++j) J[j] = J[j - 1] + 1;
    }
    return best;
}

EigenspaceDimensions eigenspace_dimension(const Incidence& inc, int m, const EsvOptions& options) {
    EigenspaceDimensions out;
    out.verdict = analyze_divisor(inc, m, options);
    if (out.verdict.status != EsvStatus::Calculable) return out;
    const Witness& w = *out.verdict.witness;
    const Sign sign = w.condition == Condition::A ? Sign::Plus : Sign::Minus;
    const WeightVector weights = weight_vector(inc, m, w.lines, sign);
    if (!weights_admissible(inc, weights))
        throw Error("internal: witness weights fail the admissibility test");
    out.h1 = aomoto_h1(inc, weights);
    out.h2 = euler_characteristic_complement(inc) + *out.h1;
    return out;
}

std::optional<std::vector<Rational>> resonance_membership(
    const Incidence& inc, const WeightVector& w, const std::vector<std::vector<int>>& partition,
    const std::vector<long long>& mults) {
    if (static_cast<int>(w.alphas.size()) != inc.degree)
        throw UsageError("resonance_membership: weight length differs from the degree");
    if (static_cast<int>(mults.size()) != inc.degree)
        throw UsageError("resonance_membership: one multiplicity per line required");
    std::vector<int> owner(inc.degree, -1);
    for (std::size_t j = 0; j < partition.size(); ++j)
        for (int i : partition[j]) {
            if (i < 0 || i >= inc.degree || owner[i] != -1)
                throw UsageError("resonance_membership: malformed partition");
            owner[i] = static_cast<int>(j);
        }
    for (int i = 0; i < inc.degree; ++i)
        if (owner[i] < 0) throw UsageError("resonance_membership: partition does not cover line " +
                                           std::to_string(i));
    for (const auto& part : partition)
        if (part.empty()) throw UsageError("resonance_membership: malformed partition (empty class)");
    long long gcd_all = 0;
    for (long long v : mults) {
        if (v <= 0) throw UsageError("resonance_membership: multiplicities must be positive");
        gcd_all = std::gcd(gcd_all, v);
    }
    if (gcd_all != 1) throw UsageError("resonance_membership: multiplicities must have gcd 1");

    // omega = sum_j c_j eta_j forces c_{owner(i)} = alpha_i / mult_i.
    std::vector<std::optional<Rational>> c(partition.size());
    for (int i = 0; i < inc.degree; ++i) {
        Rational value = w.alphas[i] / Rational(mults[i]);
        if (!c[owner[i]]) {
            c[owner[i]] = value;
        } else if (*c[owner[i]] != value) {
            return std::nullopt;
        }
    }
    Rational sum(0);
    std::vector<Rational> out;
    for (const auto& v : c) {
        if (!v) return std::nullopt; // empty class cannot carry a coefficient
        sum += *v;
        out.push_back(*v);
    }
    if (sum != 0) return std::nullopt;
    return out;
}

} // namespace arrlab

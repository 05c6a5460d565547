#include "oacodes/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "oacodes/gf.hpp"
#include "oacodes/threads.hpp"

namespace oacodes {

namespace {

constexpr int64_t kMaxEntries = int64_t{1} << 27;

int64_t ipow(int64_t base, int exp) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (int64_t{1} << 56) / base) throw std::invalid_argument("array too large to materialize");
        r *= base;
    }
    return r;
}

}  // namespace

int algebraic_strength(const GeneratorColumns& G) {
    const int n = G.n();
    const int k = G.k;
    int t = 0;
    while (t < std::min(n, k)) {
        const int probe = t + 1;
        std::vector<int> comb(probe);
        std::iota(comb.begin(), comb.end(), 0);
        bool all_independent = true;
        while (all_independent) {
            FieldMatrix M(G.s, k, probe);
            for (int j = 0; j < probe; ++j)
                for (int i = 0; i < k; ++i) M.at(i, j) = G.columns[comb[j]][i];
            if (rank(M) < probe) all_independent = false;
            int i = probe - 1;
            while (i >= 0 && comb[i] == n - probe + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < probe; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!all_independent) break;
        t = probe;
    }
    return t;
}

OrthogonalArray linear_oa(const GeneratorColumns& G) {
    if (G.k < 1 || G.n() < 1) throw std::invalid_argument("generator needs k >= 1 and at least one column");
    if (G.any_fold()) throw std::invalid_argument("linear_oa expects unfolded generator columns");
    for (const auto& col : G.columns) {
        if (static_cast<int>(col.size()) != G.k) throw std::invalid_argument("generator column length must equal k");
        for (int v : col)
            if (v < 0 || v >= G.s) throw std::invalid_argument("generator entry out of field range");
    }
    const GaloisField& F = cached_field(G.s);
    const int n = G.n();
    const int k = G.k;
    const int64_t runs = ipow(G.s, k);
    if (runs * n > kMaxEntries) throw std::invalid_argument("array too large to materialize");

    OrthogonalArray A(runs, n, std::vector<int>(n, G.s));
    parallel_chunks(runs, [&](int64_t b, int64_t e) {
        std::vector<int> msg(k);
        for (int64_t r = b; r < e; ++r) {
            int64_t v = r;
            for (int i = k - 1; i >= 0; --i) {
                msg[i] = static_cast<int>(v % G.s);
                v /= G.s;
            }
            for (int j = 0; j < n; ++j) {
                int dot = 0;
                const std::vector<int>& col = G.columns[j];
                for (int i = 0; i < k; ++i) dot = F.add(dot, F.mul(msg[i], col[i]));
                A.set(r, j, dot);
            }
        }
    });
    A.hint = G;
    A.hint->folds.assign(n, Fold::none);
    A.verified_strength = algebraic_strength(G);
    A.provenance = "linear(s=" + std::to_string(G.s) + ",k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
    return A;
}

GeneratorColumns ic_saturated_columns(int s, int m) {
    if (m < 2) throw std::invalid_argument("IC construction needs m >= 2");
    cached_field(s);  // rejects non prime powers
    GeneratorColumns G;
    G.s = s;
    G.k = m;
    for (int i = 0; i < m; ++i) {
        std::vector<int> unit(m, 0);
        unit[i] = 1;
        G.columns.push_back(std::move(unit));
    }
    // pivot index ascending, then free coefficients (c_1..c_{u-1})
    // lexicographically, skipping the all-zero tuple already covered by
    // the unit vectors
    for (int u = 2; u <= m; ++u) {
        const int64_t tuples = ipow(s, u - 1);
        for (int64_t v = 1; v < tuples; ++v) {
            std::vector<int> col(m, 0);
            int64_t rest = v;
            for (int i = u - 2; i >= 0; --i) {
                col[i] = static_cast<int>(rest % s);
                rest /= s;
            }
            col[u - 1] = 1;
            G.columns.push_back(std::move(col));
        }
    }
    G.folds.assign(G.columns.size(), Fold::none);
    return G;
}

GeneratorColumns vandermonde_columns(int s, int k, int n) {
    if (k < 2) throw std::invalid_argument("moment-curve construction needs k >= 2");
    if (n < k) throw std::invalid_argument("need n >= k");
    if (n > s + 1)
        throw Unconstructible("no strength-" + std::to_string(k) + " array with " + std::to_string(n) + " columns over " +
                              std::to_string(s) + " levels: moment-curve bound is n <= s+1");
    const GaloisField& F = cached_field(s);
    GeneratorColumns G;
    G.s = s;
    G.k = k;
    const int curve_cols = (n == s + 1) ? n - 1 : n;
    for (int j = 0; j < curve_cols; ++j) {
        std::vector<int> col(k);
        for (int i = 0; i < k; ++i) col[i] = F.pow(j, i);
        G.columns.push_back(std::move(col));
    }
    if (n == s + 1) {
        std::vector<int> col(k, 0);
        col[k - 1] = 1;
        G.columns.push_back(std::move(col));
    }
    G.folds.assign(n, Fold::none);
    return G;
}

OrthogonalArray repetition_oa(int s, int n) {
    if (s < 2 || n < 1) throw std::invalid_argument("repetition array needs s >= 2 and n >= 1");
    OrthogonalArray A(s, n, std::vector<int>(n, s));
    for (int i = 0; i < s; ++i)
        for (int c = 0; c < n; ++c) A.set(i, c, i);
    if (!check_strength(A, 1)) throw std::logic_error("repetition array failed strength-1 check");
    A.verified_strength = 1;
    A.provenance = "repetition(s=" + std::to_string(s) + ",n=" + std::to_string(n) + ")";
    return A;
}

OrthogonalArray kronecker_product(const OrthogonalArray& A, const OrthogonalArray& B) {
    if (A.cols != B.cols)
        throw ShapeMismatch("factors must have equal column counts, got " + std::to_string(A.cols) + " and " +
                            std::to_string(B.cols));
    if (!A.pure_level() || !B.pure_level()) throw std::invalid_argument("factors must be single-level arrays");
    const int s1 = A.levels[0];
    const int s2 = B.levels[0];
    const int n = A.cols;
    if (A.runs * B.runs * n > kMaxEntries) throw std::invalid_argument("array too large to materialize");

    OrthogonalArray P(A.runs * B.runs, n, std::vector<int>(n, s1 * s2));
    for (int64_t i = 0; i < A.runs; ++i)
        for (int64_t j = 0; j < B.runs; ++j)
            for (int c = 0; c < n; ++c) P.set(i * B.runs + j, c, A.at(i, c) * s2 + B.at(j, c));

    if (A.verified_strength && B.verified_strength) {
        const int t = std::min(*A.verified_strength, *B.verified_strength);
        if (!check_strength(P, t)) throw std::logic_error("product lost the factors' strength");
        P.verified_strength = t;
    }
    P.provenance = "kronecker(" + (A.provenance.empty() ? "?" : A.provenance) + " x " +
                   (B.provenance.empty() ? "?" : B.provenance) + ")";
    return P;
}

OrthogonalArray expansive_replace(const OrthogonalArray& A, int col, const OrthogonalArray& B) {
    if (col < 0 || col >= A.cols) throw std::invalid_argument("column index out of range");
    const int d1 = A.levels[col];
    if (B.runs != d1)
        throw RowCountMismatch("replacement array must have " + std::to_string(d1) + " rows, got " +
                               std::to_string(B.runs));

    const int out_cols = A.cols - 1 + B.cols;
    std::vector<int> levels;
    levels.reserve(out_cols);
    for (int c = 0; c < col; ++c) levels.push_back(A.levels[c]);
    for (int c = 0; c < B.cols; ++c) levels.push_back(B.levels[c]);
    for (int c = col + 1; c < A.cols; ++c) levels.push_back(A.levels[c]);

    OrthogonalArray R(A.runs, out_cols, levels);
    for (int64_t r = 0; r < A.runs; ++r) {
        int out = 0;
        for (int c = 0; c < col; ++c) R.set(r, out++, A.at(r, c));
        const int level = A.at(r, col);
        for (int c = 0; c < B.cols; ++c) R.set(r, out++, B.at(level, c));
        for (int c = col + 1; c < A.cols; ++c) R.set(r, out++, A.at(r, c));
    }

    if (A.verified_strength && B.verified_strength) {
        const int t = std::min(*A.verified_strength, *B.verified_strength);
        if (!check_strength(R, t)) throw std::logic_error("expansive replacement lost strength");
        R.verified_strength = t;
    }
    R.provenance = "replace(col=" + std::to_string(col) + ")";
    return R;
}

OrthogonalArray fold_mod2(const OrthogonalArray& A, int col) {
    if (col < 0 || col >= A.cols) throw std::invalid_argument("column index out of range");
    if (A.levels[col] % 2 != 0)
        throw OddLevels("column " + std::to_string(col) + " has " + std::to_string(A.levels[col]) +
                        " levels; the mod-2 fold needs an even count");

    OrthogonalArray F = A;
    F.levels[col] = 2;
    for (int64_t r = 0; r < F.runs; ++r) F.set(r, col, A.at(r, col) % 2);
    if (F.hint) {
        if (F.hint->folds.empty()) F.hint->folds.assign(F.hint->n(), Fold::none);
        F.hint->folds[col] = Fold::mod2;
    }
    F.provenance = (A.provenance.empty() ? "?" : A.provenance) + " folded@" + std::to_string(col);

    const int t = A.verified_strength ? *A.verified_strength : max_strength(A);
    F.verified_strength.reset();
    if (!check_strength(F, t)) throw std::logic_error("fold broke the array's strength");
    F.verified_strength = t;

    if (A.hint || A.runs * (A.runs - 1) / 2 <= kDefaultPairBudget) {
        const int before = min_distance(A);
        const int after = min_distance(F);
        if (after != before && after != before - 1)
            throw std::logic_error("fold changed md from " + std::to_string(before) + " to " + std::to_string(after));
    }
    return F;
}

}  // namespace oacodes

#include "oacodes/quantum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "oacodes/construct.hpp"
#include "oacodes/gf.hpp"

namespace oacodes {

std::string QuantumCertificate::verdict_name() const {
    switch (verdict) {
        case QuantumVerdict::QMDS:
            return "QMDS";
        case QuantumVerdict::NQMDS:
            return "NQMDS";
        case QuantumVerdict::neither:
            return "neither";
    }
    return "neither";
}

nlohmann::json QuantumCertificate::to_json() const {
    return nlohmann::json{
        {"schema", "oa-codes/1"},
        {"type", "quantum_certificate"},
        {"n", n},
        {"K", dimension},
        {"d", distance},
        {"alphabet", alphabet},
        {"singleton_bound", singleton_bound},
        {"verdict", verdict_name()},
        {"evidence",
         {
             {"array_runs", array_runs},
             {"array_md", array_md},
             {"partition_strength", partition_strength},
             {"distance_basis", distance_basis},
             {"blocks", blocks},
         }},
    };
}

int64_t quantum_singleton_bound(const std::vector<int>& levels, int n, int d_code) {
    if (static_cast<int>(levels.size()) != n) throw std::invalid_argument("level list length must equal n");
    if (d_code < 1) throw std::invalid_argument("distance must be at least 1");
    const int margin = n - 2 * (d_code - 1);
    if (margin < 0)
        throw InvalidDistance("no bound for n = " + std::to_string(n) + " < 2(d-1) = " + std::to_string(2 * (d_code - 1)));
    if (margin == 0) return 1;

    std::vector<int> sorted = levels;
    std::sort(sorted.begin(), sorted.end());
    int64_t bound = 1;
    for (int i = 0; i < margin; ++i) {
        if (bound > (int64_t{1} << 62) / sorted[i]) throw std::overflow_error("Singleton bound overflows");
        bound *= sorted[i];
    }

    if (std::all_of(levels.begin(), levels.end(), [&](int s) { return s == levels[0]; })) {
        int64_t pure = 1;
        for (int i = 0; i < margin; ++i) pure *= levels[0];  // s^(n-2d+2)
        if (pure != bound) throw std::logic_error("mixed and single-alphabet bound forms disagree");
    }
    return bound;
}

namespace {

QuantumVerdict verdict_for(int64_t K, int64_t bound, int n, int d_code) {
    if (K == bound) return QuantumVerdict::QMDS;
    if (n >= 2 * (d_code - 1) + 1 && K == bound - 1) return QuantumVerdict::NQMDS;
    return QuantumVerdict::neither;
}

}  // namespace

QuantumCertificate certify_qecc(const OrthogonalArray& A, const OrthogonalPartition& P, int64_t pair_budget) {
    if (!verify_partition(A, P))
        throw PartitionInvalid("blocks do not form an orthogonal partition of strength " +
                               std::to_string(P.block_strength));
    int h = 0;
    try {
        h = min_distance(A, pair_budget);
    } catch (const BudgetExceeded& e) {
        throw DistanceUnavailable(e.what());
    }

    const int k0 = P.block_strength;
    const int d = std::min(k0, h - 1);
    const int64_t K = static_cast<int64_t>(P.blocks.size());

    if (d >= 1) {
        for (const auto& block : P.blocks) {
            const bool whole = static_cast<int64_t>(block.size()) == A.runs;
            const bool ok = whole ? is_irredundant(A, d) : is_irredundant(subarray(A, block), d);
            if (!ok) throw std::logic_error("partition block fails irredundancy at strength " + std::to_string(d));
        }
    }

    QuantumCertificate cert;
    cert.n = A.cols;
    cert.dimension = K;
    cert.distance = d + 1;
    cert.alphabet = A.levels;
    cert.singleton_bound = quantum_singleton_bound(A.levels, A.cols, d + 1);
    cert.verdict = verdict_for(K, cert.singleton_bound, A.cols, d + 1);
    cert.array_md = h;
    cert.partition_strength = k0;
    cert.distance_basis = d;
    cert.blocks = K;
    cert.array_runs = A.runs;
    if (K > cert.singleton_bound) throw std::logic_error("certificate violates the Singleton bound");
    return cert;
}

namespace {

// prime power factorization s = q_1 q_2 ... with the q_i ascending
std::vector<int> prime_power_factors(int s) {
    std::vector<int> out;
    int rest = s;
    for (int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int q = 1;
        while (rest % p == 0) {
            rest /= p;
            q *= p;
        }
        out.push_back(q);
    }
    if (rest > 1) out.push_back(rest);
    std::sort(out.begin(), out.end());
    return out;
}

OrthogonalArray premise_array(int s, int k) {
    const int n = 2 * k + 1;
    if (k == 1) return repetition_oa(s, n);

    const std::vector<int> factors = prime_power_factors(s);
    for (int q : factors) {
        if (n > q + 1) {
            if (s == 6 && k == 2)
                throw Unconstructible("((5,1,3)) over 6^4 2^1 is excluded: no strength-2 array with 5 six-level "
                                      "columns is reachable (s = 6 is the stated exception at k = 2)");
            if (s == 10 && k == 2)
                throw Unconstructible("s = 10, k = 2 relies on an externally sourced OA(100,5,10^4 2^1,2); "
                                      "import the array file and run certify instead");
            throw Unconstructible("prime power factor " + std::to_string(q) + " of s = " + std::to_string(s) +
                                  " is too small: the moment-curve route needs 2k+1 <= q+1");
        }
    }

    OrthogonalArray acc = linear_oa(vandermonde_columns(factors[0], k, n));
    for (size_t i = 1; i < factors.size(); ++i)
        acc = kronecker_product(acc, linear_oa(vandermonde_columns(factors[i], k, n)));
    return acc;
}

}  // namespace

std::pair<OrthogonalArray, QuantumCertificate> build_nqmds(int s, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (s < 2) throw std::invalid_argument("s must be at least 2");
    if (s % 2 != 0) throw Unconstructible("s = " + std::to_string(s) + " is odd; the fold needs an even level count");

    OrthogonalArray base = premise_array(s, k);
    OrthogonalArray folded = fold_mod2(base, base.cols - 1);

    if (!folded.verified_strength || *folded.verified_strength < k)
        throw std::logic_error("folded array lost strength " + std::to_string(k));
    const int h = min_distance(folded);
    if (h != k + 1 && h != k + 2)
        throw std::logic_error("folded array has md " + std::to_string(h) + ", expected k+1 or k+2");

    QuantumCertificate cert = certify_qecc(folded, trivial_partition(folded, k));
    if (cert.verdict != QuantumVerdict::NQMDS || cert.singleton_bound != 2 || cert.distance != k + 1)
        throw std::logic_error("construction did not certify as ((2k+1,1,k+1)) NQMDS");
    return {std::move(folded), std::move(cert)};
}

BasisState uniform_state(const OrthogonalArray& A, int k) {
    const bool strong = (A.verified_strength && *A.verified_strength >= k) || check_strength(A, k);
    if (!strong) throw InsufficientStrength("array does not have strength " + std::to_string(k));
    if (!is_irredundant(A, k)) throw NotIrredundant("array is not irredundant at strength " + std::to_string(k));

    BasisState psi;
    psi.dims = A.levels;
    psi.kets.assign(A.runs, std::vector<int32_t>(A.cols));
    for (int64_t r = 0; r < A.runs; ++r)
        for (int c = 0; c < A.cols; ++c) psi.kets[r][c] = static_cast<int32_t>(A.at(r, c));
    return psi;
}

bool reduction_check(const BasisState& psi, int k) {
    const int n = static_cast<int>(psi.dims.size());
    if (k < 1 || k > n) throw std::invalid_argument("party count k must be in [1, n]");
    const int64_t N = static_cast<int64_t>(psi.kets.size());
    if (N < 1) throw std::invalid_argument("state has no kets");

    // enumerate k-subsets; cap every subset's dimension product first
    std::vector<int> sel(k);
    std::iota(sel.begin(), sel.end(), 0);
    while (true) {
        int64_t D = 1;
        for (int c : sel) D *= psi.dims[c];
        if (D > 4096)
            throw DimensionCap("reduction on a subset of dimension " + std::to_string(D) + " exceeds the 4096 cap");
        int i = k - 1;
        while (i >= 0 && sel[i] == n - k + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }

    std::iota(sel.begin(), sel.end(), 0);
    while (true) {
        int64_t D = 1;
        for (int c : sel) D *= psi.dims[c];

        std::vector<bool> in_sel(n, false);
        for (int c : sel) in_sel[c] = true;
        std::vector<int> comp;
        for (int c = 0; c < n; ++c)
            if (!in_sel[c]) comp.push_back(c);

        // group kets by their complement projection
        std::unordered_map<uint64_t, std::vector<int64_t>> groups;
        bool small_keys = true;
        {
            uint64_t prod = 1;
            for (int c : comp) {
                if (prod > (uint64_t{1} << 62) / static_cast<uint64_t>(psi.dims[c])) {
                    small_keys = false;
                    break;
                }
                prod *= static_cast<uint64_t>(psi.dims[c]);
            }
        }
        std::map<std::vector<int32_t>, std::vector<int64_t>> wide_groups;
        for (int64_t r = 0; r < N; ++r) {
            if (small_keys) {
                uint64_t key = 0;
                for (int c : comp) key = key * psi.dims[c] + static_cast<uint64_t>(psi.kets[r][c]);
                groups[key].push_back(r);
            } else {
                std::vector<int32_t> key;
                key.reserve(comp.size());
                for (int c : comp) key.push_back(psi.kets[r][c]);
                wide_groups[std::move(key)].push_back(r);
            }
        }

        // rho entry (x, y) = |{(i, j) in a common group : rows restricted
        // to sel give x, y}| / N; must equal I / D exactly
        std::vector<int64_t> diag(D, 0);
        auto scan_group = [&](const std::vector<int64_t>& g) {
            for (int64_t i : g) {
                int64_t xi = 0;
                for (int c : sel) xi = xi * psi.dims[c] + psi.kets[i][c];
                for (int64_t j : g) {
                    int64_t yj = 0;
                    for (int c : sel) yj = yj * psi.dims[c] + psi.kets[j][c];
                    if (xi != yj) return false;  // off-diagonal mass
                    ++diag[xi];
                }
            }
            return true;
        };
        if (small_keys) {
            for (const auto& [key, g] : groups)
                if (!scan_group(g)) return false;
        } else {
            for (const auto& [key, g] : wide_groups)
                if (!scan_group(g)) return false;
        }
        for (int64_t x = 0; x < D; ++x)
            if (diag[x] * D != N) return false;

        int i = k - 1;
        while (i >= 0 && sel[i] == n - k + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
    return true;
}

}  // namespace oacodes

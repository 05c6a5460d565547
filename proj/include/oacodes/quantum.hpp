#ifndef OACODES_QUANTUM_HPP
#define OACODES_QUANTUM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "oacodes/array.hpp"

namespace oacodes {

enum class QuantumVerdict {
    QMDS,
    NQMDS,
    neither,
};

/// ((n, K, d)) parameters over a mixed alphabet, the Singleton bound
/// value, the verdict against it, and the evidence the verdict rests on.
struct QuantumCertificate {
    int n = 0;
    int64_t dimension = 0;  // K
    int distance = 0;       // the code distance; one above the distance basis min(k0, md-1)
    std::vector<int> alphabet;
    int64_t singleton_bound = 0;  // K_max
    QuantumVerdict verdict = QuantumVerdict::neither;

    // evidence: re-verifiable from the array file alone
    int array_md = 0;            // h
    int partition_strength = 0;  // k0
    int distance_basis = 0;      // min(k0, h-1)
    int64_t blocks = 0;
    int64_t array_runs = 0;

    std::string verdict_name() const;
    nlohmann::json to_json() const;
};

/// Superposition support: N pairwise-distinct kets with per-coordinate
/// dimensions; amplitudes are uniform.
struct BasisState {
    std::vector<std::vector<int32_t>> kets;
    std::vector<int> dims;
};

/// min over |C| = n - 2(d-1) coordinate subsets of the product of their
/// alphabet sizes; 1 when n = 2(d-1). Throws InvalidDistance when
/// n < 2(d-1).
int64_t quantum_singleton_bound(const std::vector<int>& levels, int n, int d_code);

/// Certifies the ((n, K, d+1)) code carried by an array with an
/// orthogonal partition of strength k0, where d = min(k0, md - 1).
/// Every block is checked irredundant at strength d.
QuantumCertificate certify_qecc(const OrthogonalArray& A, const OrthogonalPartition& P,
                                int64_t pair_budget = kDefaultPairBudget);

/// Builds the folded array behind an ((2k+1, 1, k+1)) code over
/// s^(2k) 2^1 for even s, and certifies it. Throws Unconstructible when
/// the premise array is out of reach (odd s, s = 6 at k = 2, a prime
/// power factor too small, or the externally sourced s = 10 case).
std::pair<OrthogonalArray, QuantumCertificate> build_nqmds(int s, int k);

/// The N-ket state over an array that is irredundant and of strength k.
BasisState uniform_state(const OrthogonalArray& A, int k);

/// Exact check that every k-coordinate reduced density matrix equals
/// identity / (prod of the k dimensions). Integer cross-multiplication
/// keeps the rational comparison exact. Subset dimension products are
/// capped at 4096.
bool reduction_check(const BasisState& psi, int k);

}  // namespace oacodes

#endif

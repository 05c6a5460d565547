#ifndef OACODES_ARRAY_HPP
#define OACODES_ARRAY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oacodes/errors.hpp"
#include "oacodes/generator_columns.hpp"

namespace oacodes {

inline constexpr int64_t kDefaultPairBudget = 50'000'000;

/// N x n array with per-column level counts. The universal artifact
/// currency: constructions produce it, every verifier consumes it.
struct OrthogonalArray {
    int64_t runs = 0;  // N
    int cols = 0;      // n
    std::vector<int> levels;
    std::vector<int32_t> data;  // row-major, entry (r, c) in [0, levels[c])
    std::string provenance;
    std::optional<GeneratorColumns> hint;  // set when the array arose from a linear construction
    std::optional<int> verified_strength;  // highest strength actually verified so far

    OrthogonalArray() = default;
    OrthogonalArray(int64_t runs, int cols, std::vector<int> levels);

    int at(int64_t r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    void set(int64_t r, int c, int v) { data[static_cast<size_t>(r) * cols + c] = v; }

    /// Throws ParseError if an entry is out of range or a level < 2.
    void validate() const;

    bool pure_level() const;  // all columns share one level count
};

/// Row-index blocks claimed to split the parent array into equal-size
/// sub-arrays of strength >= block_strength.
struct OrthogonalPartition {
    std::vector<std::vector<int64_t>> blocks;
    int block_strength = 0;  // k0
};

OrthogonalArray subarray(const OrthogonalArray& A, const std::vector<int64_t>& rows);

/// True iff every t-column projection is a balanced full factorial.
/// t = 0 is vacuously true.
bool check_strength(const OrthogonalArray& A, int t);

/// Lexicographically first t-subset of columns whose projection is not
/// balanced, or empty when the array has strength t.
std::vector<int> find_strength_violation(const OrthogonalArray& A, int t);

/// Largest t with check_strength(A, t); 0 if not even strength 1.
int max_strength(const OrthogonalArray& A);

/// Exact minimum Hamming distance over distinct row pairs. Uses
/// codeword-weight enumeration when a linear hint is present, otherwise
/// a pairwise scan. Throws BudgetExceeded if the scan would exceed
/// pair_budget row pairs.
int min_distance(const OrthogonalArray& A, int64_t pair_budget = kDefaultPairBudget);

/// Minimum adjusted weight over the s^k - 1 nonzero messages. For the
/// array generated by G this equals md: a folded coordinate contributes
/// the minimum over base symbols of the fold-image disagreement
/// indicator, an unfolded one contributes [<x, c_j> != 0].
int linear_min_weight(const GeneratorColumns& G);

bool has_duplicate_rows(const OrthogonalArray& A);

enum class IrRoute {
    automatic,  // distance route when a hint is present, else projection
    projection,
    distance,
};

/// True iff all N rows stay pairwise distinct on every (n-k)-column
/// projection; equivalently md(A) >= k+1.
bool is_irredundant(const OrthogonalArray& A, int k, IrRoute route = IrRoute::automatic);

/// Blocks must partition the rows into equal parts and each block must
/// reach strength block_strength.
bool verify_partition(const OrthogonalArray& A, const OrthogonalPartition& P);

OrthogonalPartition trivial_partition(const OrthogonalArray& A, int block_strength);

// --- OA text format ---
// line 1: "oa v1"; line 2: "N n"; line 3: n level sizes; then N rows.
void write_oa(std::ostream& out, const OrthogonalArray& A);
OrthogonalArray read_oa(std::istream& in);
void write_oa_file(const std::string& path, const OrthogonalArray& A);
OrthogonalArray read_oa_file(const std::string& path);

// --- partition text format ---
// line 1: "partition v1"; line 2: "K k0"; then K lines of row indices.
void write_partition(std::ostream& out, const OrthogonalPartition& P);
OrthogonalPartition read_partition(std::istream& in);
void write_partition_file(const std::string& path, const OrthogonalPartition& P);
OrthogonalPartition read_partition_file(const std::string& path);

}  // namespace oacodes

#endif

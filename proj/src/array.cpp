#include "oacodes/array.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "oacodes/gf.hpp"
#include "oacodes/threads.hpp"

namespace oacodes {

OrthogonalArray::OrthogonalArray(int64_t runs, int cols, std::vector<int> lv)
    : runs(runs), cols(cols), levels(std::move(lv)), data(static_cast<size_t>(runs) * cols, 0) {
    if (runs < 1 || cols < 1) throw ParseError("array must have at least one run and one column");
    if (static_cast<int>(levels.size()) != cols) throw ParseError("level list length must equal column count");
}

void OrthogonalArray::validate() const {
    for (int c = 0; c < cols; ++c)
        if (levels[c] < 2) throw ParseError("column " + std::to_string(c) + " has fewer than 2 levels");
    for (int64_t r = 0; r < runs; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int v = at(r, c);
            if (v < 0 || v >= levels[c])
                throw ParseError("entry out of range at row " + std::to_string(r) + ", column " + std::to_string(c));
        }
    }
}

bool OrthogonalArray::pure_level() const {
    for (int c = 1; c < cols; ++c)
        if (levels[c] != levels[0]) return false;
    return true;
}

OrthogonalArray subarray(const OrthogonalArray& A, const std::vector<int64_t>& rows) {
    OrthogonalArray S(static_cast<int64_t>(rows.size()), A.cols, A.levels);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int c = 0; c < A.cols; ++c) S.set(static_cast<int64_t>(i), c, A.at(rows[i], c));
    return S;
}

namespace {

std::vector<std::vector<int>> column_subsets(int n, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> comb(t);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        out.push_back(comb);
        int i = t - 1;
        while (i >= 0 && comb[i] == n - t + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < t; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

// Balanced full factorial on the selected columns: each tuple appears
// exactly runs / prod(levels) times.
bool subset_balanced(const OrthogonalArray& A, const std::vector<int>& sel, std::vector<int64_t>& counts) {
    int64_t prod = 1;
    for (int c : sel) {
        prod *= A.levels[c];
        if (prod > A.runs) return false;
    }
    if (A.runs % prod != 0) return false;
    const int64_t lambda = A.runs / prod;

    const int t = static_cast<int>(sel.size());
    std::vector<int64_t> stride(t);
    int64_t acc = 1;
    for (int i = t - 1; i >= 0; --i) {
        stride[i] = acc;
        acc *= A.levels[sel[i]];
    }
    counts.assign(prod, 0);
    const int32_t* row = A.data.data();
    for (int64_t r = 0; r < A.runs; ++r, row += A.cols) {
        int64_t idx = 0;
        for (int i = 0; i < t; ++i) idx += row[sel[i]] * stride[i];
        if (++counts[idx] > lambda) return false;
    }
    return true;  // no count exceeds lambda and totals match, so all equal lambda
}

}  // namespace

bool check_strength(const OrthogonalArray& A, int t) {
    if (t < 0 || t > A.cols) throw std::invalid_argument("strength t must be in [0, n]");
    if (t == 0) return true;
    const auto subsets = column_subsets(A.cols, t);
    std::atomic<bool> ok{true};
    parallel_chunks(static_cast<int64_t>(subsets.size()), [&](int64_t b, int64_t e) {
        std::vector<int64_t> counts;
        for (int64_t i = b; i < e && ok.load(std::memory_order_relaxed); ++i) {
            if (!subset_balanced(A, subsets[i], counts)) ok.store(false, std::memory_order_relaxed);
        }
    });
    return ok.load();
}

std::vector<int> find_strength_violation(const OrthogonalArray& A, int t) {
    if (t < 0 || t > A.cols) throw std::invalid_argument("strength t must be in [0, n]");
    if (t == 0) return {};
    std::vector<int64_t> counts;
    for (const auto& sel : column_subsets(A.cols, t))
        if (!subset_balanced(A, sel, counts)) return sel;
    return {};
}

int max_strength(const OrthogonalArray& A) {
    int t = A.verified_strength.value_or(0);
    while (t < A.cols && check_strength(A, t + 1)) ++t;
    return t;
}

int linear_min_weight(const GeneratorColumns& G) {
    const GaloisField& F = cached_field(G.s);
    const int k = G.k;
    const int n = G.n();
    int64_t total = 1;
    for (int i = 0; i < k; ++i) total *= G.s;

    std::vector<int> fold_flip(G.s, 0);
    if (G.any_fold()) {
        for (int w = 1; w < G.s; ++w) {
            int best = 1;
            for (int u = 0; u < G.s; ++u) {
                if ((u & 1) == (F.sub(u, w) & 1)) {
                    best = 0;
                    break;
                }
            }
            fold_flip[w] = best;
        }
    }

    std::atomic<int> global_md{n + 1};
    parallel_chunks(total - 1, [&](int64_t b, int64_t e) {
        std::vector<int> msg(k);
        int local = n + 1;
        for (int64_t m = b; m < e; ++m) {
            int64_t v = m + 1;  // skip the zero message
            for (int i = k - 1; i >= 0; --i) {
                msg[i] = static_cast<int>(v % G.s);
                v /= G.s;
            }
            int w = 0;
            for (int j = 0; j < n && w < local; ++j) {
                int dot = 0;
                const std::vector<int>& col = G.columns[j];
                for (int i = 0; i < k; ++i) dot = F.add(dot, F.mul(msg[i], col[i]));
                if (G.fold_of(j) == Fold::none)
                    w += (dot != 0);
                else
                    w += fold_flip[dot];
            }
            local = std::min(local, w);
        }
        int cur = global_md.load();
        while (local < cur && !global_md.compare_exchange_weak(cur, local)) {
        }
    });
    return global_md.load();
}

namespace {

int min_distance_pairwise(const OrthogonalArray& A) {
    const int64_t n_rows = A.runs;
    std::atomic<int> best{A.cols + 1};
    parallel_chunks(n_rows - 1, [&](int64_t b, int64_t e) {
        for (int64_t i = b; i < e; ++i) {
            const int32_t* ri = A.data.data() + i * A.cols;
            for (int64_t j = i + 1; j < n_rows; ++j) {
                const int32_t* rj = A.data.data() + j * A.cols;
                const int bound = best.load(std::memory_order_relaxed);
                int d = 0;
                for (int c = 0; c < A.cols && d < bound; ++c) d += (ri[c] != rj[c]);
                int cur = best.load();
                while (d < cur && !best.compare_exchange_weak(cur, d)) {
                }
            }
        }
    });
    return best.load();
}

}  // namespace

int min_distance(const OrthogonalArray& A, int64_t pair_budget) {
    if (A.runs < 2) throw std::invalid_argument("min_distance needs at least two rows");
    if (A.hint) {
        const GeneratorColumns& G = *A.hint;
        if (G.n() != A.cols) throw std::logic_error("linear hint does not match array shape");
        int64_t total = 1;
        for (int i = 0; i < G.k; ++i) total *= G.s;
        if (total != A.runs) throw std::logic_error("linear hint does not match run count");
        return linear_min_weight(G);
    }
    const int64_t pairs = A.runs * (A.runs - 1) / 2;
    if (pairs > pair_budget)
        throw BudgetExceeded("pairwise scan needs " + std::to_string(pairs) + " comparisons, budget is " +
                             std::to_string(pair_budget) + "; supply a linear hint or raise the budget");
    return min_distance_pairwise(A);
}

bool has_duplicate_rows(const OrthogonalArray& A) {
    std::vector<int64_t> idx(A.runs);
    std::iota(idx.begin(), idx.end(), 0);
    auto less = [&](int64_t a, int64_t b) {
        const int32_t* ra = A.data.data() + a * A.cols;
        const int32_t* rb = A.data.data() + b * A.cols;
        return std::lexicographical_compare(ra, ra + A.cols, rb, rb + A.cols);
    };
    std::sort(idx.begin(), idx.end(), less);
    for (int64_t i = 0; i + 1 < A.runs; ++i) {
        const int32_t* ra = A.data.data() + idx[i] * A.cols;
        const int32_t* rb = A.data.data() + idx[i + 1] * A.cols;
        if (std::equal(ra, ra + A.cols, rb)) return true;
    }
    return false;
}

namespace {

// Rows pairwise distinct on the selected columns.
bool projection_distinct(const OrthogonalArray& A, const std::vector<int>& sel) {
    int64_t prod = 1;
    bool encodable = true;
    for (int c : sel) {
        if (prod > (int64_t{1} << 62) / A.levels[c]) {
            encodable = false;
            break;
        }
        prod *= A.levels[c];
    }
    if (encodable && prod < A.runs) return false;  // pigeonhole
    if (encodable) {
        std::vector<uint64_t> keys(A.runs);
        for (int64_t r = 0; r < A.runs; ++r) {
            uint64_t key = 0;
            for (int c : sel) key = key * A.levels[c] + static_cast<uint64_t>(A.at(r, c));
            keys[r] = key;
        }
        std::sort(keys.begin(), keys.end());
        return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    }
    std::set<std::vector<int32_t>> seen;
    for (int64_t r = 0; r < A.runs; ++r) {
        std::vector<int32_t> key;
        key.reserve(sel.size());
        for (int c : sel) key.push_back(static_cast<int32_t>(A.at(r, c)));
        if (!seen.insert(std::move(key)).second) return false;
    }
    return true;
}

}  // namespace

bool is_irredundant(const OrthogonalArray& A, int k, IrRoute route) {
    if (k < 1 || k >= A.cols) throw std::invalid_argument("irredundancy index k must satisfy 1 <= k < n");
    if (route == IrRoute::automatic) route = A.hint ? IrRoute::distance : IrRoute::projection;
    if (route == IrRoute::distance) return min_distance(A) >= k + 1;
    for (const auto& sel : column_subsets(A.cols, A.cols - k))
        if (!projection_distinct(A, sel)) return false;
    return true;
}

bool verify_partition(const OrthogonalArray& A, const OrthogonalPartition& P) {
    if (P.blocks.empty() || P.block_strength < 0) return false;
    const int64_t K = static_cast<int64_t>(P.blocks.size());
    if (A.runs % K != 0) return false;
    const int64_t block_size = A.runs / K;

    std::vector<bool> seen(A.runs, false);
    for (const auto& block : P.blocks) {
        if (static_cast<int64_t>(block.size()) != block_size) return false;
        for (int64_t r : block) {
            if (r < 0 || r >= A.runs || seen[r]) return false;
            seen[r] = true;
        }
    }

    if (P.block_strength == 0) return true;
    if (P.block_strength > A.cols) return false;
    for (const auto& block : P.blocks) {
        if (static_cast<int64_t>(block.size()) == A.runs) {
            if (A.verified_strength && *A.verified_strength >= P.block_strength) continue;
            if (!check_strength(A, P.block_strength)) return false;
            continue;
        }
        if (!check_strength(subarray(A, block), P.block_strength)) return false;
    }
    return true;
}

OrthogonalPartition trivial_partition(const OrthogonalArray& A, int block_strength) {
    OrthogonalPartition P;
    P.blocks.emplace_back(A.runs);
    std::iota(P.blocks[0].begin(), P.blocks[0].end(), 0);
    P.block_strength = block_strength;
    return P;
}

// --- text formats ---

void write_oa(std::ostream& out, const OrthogonalArray& A) {
    out << "oa v1\n" << A.runs << ' ' << A.cols << '\n';
    for (int c = 0; c < A.cols; ++c) out << (c ? " " : "") << A.levels[c];
    out << '\n';
    for (int64_t r = 0; r < A.runs; ++r) {
        for (int c = 0; c < A.cols; ++c) out << (c ? " " : "") << A.at(r, c);
        out << '\n';
    }
}

namespace {

std::string next_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(std::string("unexpected end of input, expected ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::vector<int64_t> parse_ints(const std::string& line, const char* what) {
    std::istringstream ss(line);
    std::vector<int64_t> out;
    int64_t v;
    while (ss >> v) out.push_back(v);
    std::string rest;
    if (ss.fail() && !ss.eof()) throw ParseError(std::string("malformed ") + what + ": '" + line + "'");
    return out;
}

}  // namespace

OrthogonalArray read_oa(std::istream& in) {
    if (next_line(in, "header") != "oa v1") throw ParseError("missing 'oa v1' header");
    auto dims = parse_ints(next_line(in, "dimensions"), "dimension line");
    if (dims.size() != 2 || dims[0] < 1 || dims[1] < 1) throw ParseError("dimension line must be 'N n'");
    const int64_t N = dims[0];
    const int n = static_cast<int>(dims[1]);
    auto lvl = parse_ints(next_line(in, "level sizes"), "level line");
    if (static_cast<int>(lvl.size()) != n) throw ParseError("level line must list one size per column");
    std::vector<int> levels(lvl.begin(), lvl.end());
    OrthogonalArray A(N, n, levels);
    for (int64_t r = 0; r < N; ++r) {
        auto row = parse_ints(next_line(in, "row"), "row");
        if (static_cast<int>(row.size()) != n)
            throw ParseError("row " + std::to_string(r) + " has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(n));
        for (int c = 0; c < n; ++c) A.set(r, c, static_cast<int>(row[c]));
    }
    A.validate();
    return A;
}

void write_oa_file(const std::string& path, const OrthogonalArray& A) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_oa(out, A);
}

OrthogonalArray read_oa_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_oa(in);
}

void write_partition(std::ostream& out, const OrthogonalPartition& P) {
    out << "partition v1\n" << P.blocks.size() << ' ' << P.block_strength << '\n';
    for (const auto& block : P.blocks) {
        for (size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
        out << '\n';
    }
}

OrthogonalPartition read_partition(std::istream& in) {
    if (next_line(in, "header") != "partition v1") throw ParseError("missing 'partition v1' header");
    auto dims = parse_ints(next_line(in, "block count"), "block count line");
    if (dims.size() != 2 || dims[0] < 1 || dims[1] < 0) throw ParseError("second line must be 'K k0'");
    OrthogonalPartition P;
    P.block_strength = static_cast<int>(dims[1]);
    for (int64_t b = 0; b < dims[0]; ++b) P.blocks.push_back(parse_ints(next_line(in, "block"), "block"));
    return P;
}

void write_partition_file(const std::string& path, const OrthogonalPartition& P) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_partition(out, P);
}

OrthogonalPartition read_partition_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_partition(in);
}

}  // namespace oacodes

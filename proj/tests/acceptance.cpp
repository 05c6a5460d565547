// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerance (exact unless stated) and its
// wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oacodes/codes.hpp"
#include "oacodes/construct.hpp"
#include "oacodes/gf.hpp"
#include "oacodes/quantum.hpp"
#include "oacodes/reproduce.hpp"

using namespace oacodes;

namespace {

int g_failures = 0;

void run_criterion(int id, const std::string& label, double budget_seconds, const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over the ") + std::to_string(budget_seconds) +
                  "s budget";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, label.c_str(), elapsed);
    if (!ok) {
        if (!detail.empty()) std::printf("       %s\n", detail.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

GeneratorColumns gen(int s, int k, std::vector<std::vector<int>> cols) {
    GeneratorColumns G;
    G.s = s;
    G.k = k;
    G.columns = std::move(cols);
    G.folds.assign(G.columns.size(), Fold::none);
    return G;
}

struct ExpectedCode {
    int n, k, d;
    std::string cls;
    bool almost_extremal = false;
    bool self_dual = false;
};

bool check_codes(const nlohmann::json& codes, const std::vector<ExpectedCode>& expected, int field, std::string& detail) {
    if (codes.size() != expected.size()) {
        detail = "expected " + std::to_string(expected.size()) + " codes, got " + std::to_string(codes.size());
        return false;
    }
    for (size_t i = 0; i < expected.size(); ++i) {
        const auto& c = codes[i];
        const auto& e = expected[i];
        if (c["field"] != field || c["n"] != e.n || c["k"] != e.k || c["d"] != e.d || c["classification"] != e.cls ||
            c["almost_extremal"] != e.almost_extremal || c["self_dual"] != e.self_dual) {
            detail = "code " + std::to_string(i) + " is " + c.dump() + ", expected [" + std::to_string(e.n) + "," +
                     std::to_string(e.k) + "," + std::to_string(e.d) + "] " + e.cls;
            return false;
        }
    }
    return true;
}

// prime powers up to 16
const std::vector<int> kPrimePowers16 = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

bool criterion1(std::string& detail) {
    const nlohmann::json report = build_target_report("example1");
    const std::vector<ExpectedCode> expected = {
        {3, 3, 1, "MDS"}, {4, 3, 2, "MDS"},          {4, 3, 1, "NMDS"},
        {5, 3, 2, "NMDS"}, {6, 3, 3, "NMDS", true}, {7, 3, 4, "NMDS"},
    };
    return check_codes(report["codes"], expected, 2, detail);
}

bool criterion2(std::string& detail) {
    const nlohmann::json report = build_target_report("example2");
    const std::vector<ExpectedCode> expected = {
        {4, 4, 1, "MDS"},
        {5, 4, 2, "MDS"},
        {5, 4, 1, "NMDS"},
        {6, 4, 2, "NMDS"},
        {7, 4, 3, "NMDS", true},  // [2q+3, 4, 2q-1] over GF(2) fits the almost-extremal pattern
        {8, 4, 4, "NMDS", false, true},
        {6, 4, 1, "2-MDS"},
        {7, 4, 2, "2-MDS"},
        {8, 4, 3, "2-MDS"},
        {9, 4, 4, "2-MDS"},
    };
    return check_codes(report["codes"], expected, 2, detail);
}

bool criterion3(std::string& detail) {
    const nlohmann::json report = build_target_report("example3");
    const std::vector<ExpectedCode> expected = {
        {3, 3, 1, "MDS"},  {4, 3, 2, "MDS"},         {9, 3, 6, "NMDS"}, {8, 3, 5, "NMDS", true},
        {7, 3, 4, "NMDS"}, {6, 3, 3, "NMDS"},        {5, 3, 2, "NMDS"}, {4, 3, 1, "NMDS"},
    };
    if (!check_codes(report["codes"], expected, 3, detail)) return false;
    // the binary [6,3,3] almost-extremal flag rides with example1
    const CodeReport binary = classify(gen(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    if (!binary.almost_extremal) {
        detail = "[6,3,3]_2 lost its almost-extremal flag";
        return false;
    }
    return true;
}

bool criterion4(std::string& detail) {
    for (int s : kPrimePowers16) {
        for (int k = 2; k <= 5; ++k) {
            for (int n = k; n <= std::min(s + 1, 2 * k + 2); ++n) {
                OrthogonalArray A = linear_oa(vandermonde_columns(s, k, n));
                const int md = min_distance(A);
                if (md != n - k + 1) {
                    detail = "s=" + std::to_string(s) + " k=" + std::to_string(k) + " n=" + std::to_string(n) +
                             ": md " + std::to_string(md) + " != " + std::to_string(n - k + 1);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion5(std::string& detail) {
    std::mt19937 rng(20240601);
    auto random_factor = [&](int n, int64_t max_runs) -> OrthogonalArray {
        while (true) {
            if (rng() % 2 == 0) {
                const int s = 2 + static_cast<int>(rng() % 6);
                if (s <= max_runs) return repetition_oa(s, n);
                continue;
            }
            const int s = kPrimePowers16[rng() % 6];  // up to 8
            if (n > s + 1) continue;
            const int k = 2 + static_cast<int>(rng() % 2);
            if (k > n) continue;
            int64_t runs = 1;
            for (int i = 0; i < k; ++i) runs *= s;
            if (runs > max_runs) continue;
            return linear_oa(vandermonde_columns(s, k, n));
        }
    };
    for (int pair = 0; pair < 20; ++pair) {
        const int n = 3 + static_cast<int>(rng() % 3);
        OrthogonalArray A = random_factor(n, 500);
        OrthogonalArray B = random_factor(n, 10000 / A.runs);
        OrthogonalArray P = kronecker_product(A, B);
        A.hint.reset();
        B.hint.reset();
        P.hint.reset();
        const int expected = std::min(min_distance(A), min_distance(B));
        const int got = min_distance(P);
        if (got != expected) {
            detail = "pair " + std::to_string(pair) + ": md " + std::to_string(got) + " != min " +
                     std::to_string(expected);
            return false;
        }
    }
    return true;
}

std::vector<GeneratorColumns> example_generators() {
    std::vector<GeneratorColumns> out;
    const std::vector<std::vector<int>> u3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    out.push_back(gen(2, 3, u3));
    out.push_back(gen(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
    out.push_back(gen(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}}));
    out.push_back(gen(2, 3, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    out.push_back(gen(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    out.push_back(gen(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    const std::vector<std::vector<int>> u4 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    auto ext4 = [&](std::vector<std::vector<int>> extra) {
        std::vector<std::vector<int>> cols = u4;
        for (auto& c : extra) cols.push_back(std::move(c));
        out.push_back(gen(2, 4, cols));
    };
    ext4({});
    ext4({{1, 1, 1, 1}});
    ext4({{1, 1, 1, 0}});
    ext4({{1, 1, 1, 0}, {0, 1, 1, 1}});
    ext4({{1, 1, 1, 0}, {1, 1, 0, 1}, {0, 1, 1, 1}});
    ext4({{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}});
    ext4({{1, 1, 0, 0}, {1, 0, 1, 0}});
    ext4({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}});
    ext4({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    ext4({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}});
    out.push_back(gen(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    out.push_back(gen(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
    out.push_back(gen(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}, {2, 0, 1}, {0, 2, 1}, {2, 1, 1}, {1, 2, 1}}));
    out.push_back(gen(3, 3, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 1, 0}, {2, 0, 1}}));
    out.push_back(gen(3, 3, {{0, 1, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 1, 0}, {2, 0, 1}}));
    out.push_back(gen(3, 3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {2, 1, 1}, {1, 2, 1}, {2, 2, 1}}));
    out.push_back(gen(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}}));
    out.push_back(gen(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}}));
    return out;
}

bool bridge_holds(const GeneratorColumns& G, std::string& detail) {
    GeneratorColumns dual = dual_generator(G);
    const int dual_weight = dual.k == 0 ? G.n() + 1 : linear_min_weight(dual);
    OrthogonalArray A = linear_oa(G);
    A.verified_strength.reset();
    const int t = max_strength(A);
    if (t + 1 != dual_weight) {
        detail = "strength " + std::to_string(t) + " + 1 != dual weight " + std::to_string(dual_weight);
        return false;
    }
    return true;
}

bool criterion6(std::string& detail) {
    for (const GeneratorColumns& G : example_generators())
        if (!bridge_holds(G, detail)) return false;

    std::mt19937 rng(424242);
    int built = 0;
    while (built < 50) {
        const int s = (rng() % 2 == 0) ? 2 : 3;
        const int max_k = s == 2 ? 8 : 5;
        const int k = 1 + static_cast<int>(rng() % max_k);
        const int n = k + 1 + static_cast<int>(rng() % 5);
        GeneratorColumns G;
        G.s = s;
        G.k = k;
        G.folds.assign(n, Fold::none);
        std::uniform_int_distribution<int> dist(0, s - 1);
        FieldMatrix M(s, k, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < k; ++i) M.at(i, j) = dist(rng);
        if (rank(M) < k) continue;
        G.columns.assign(n, std::vector<int>(k));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < k; ++i) G.columns[j][i] = M.at(i, j);
        if (!bridge_holds(G, detail)) {
            detail += " (random generator " + std::to_string(built) + ")";
            return false;
        }
        ++built;
    }
    return true;
}

struct Table2Row {
    int k, s;
};

const std::vector<Table2Row> kTable2Rows = {
    {1, 4}, {1, 6}, {1, 8}, {1, 10}, {1, 12}, {1, 14}, {1, 16},
    {2, 4}, {2, 8}, {2, 16}, {2, 20},
    {3, 8}, {3, 16},
    {4, 8},
    {5, 16},
};

bool check_table2_row(int s, int k, std::string& detail) {
    auto [A, cert] = build_nqmds(s, k);
    std::vector<int> alphabet(2 * k, s);
    alphabet.push_back(2);
    const bool ok = cert.verdict == QuantumVerdict::NQMDS && cert.singleton_bound == 2 && cert.dimension == 1 &&
                    cert.n == 2 * k + 1 && cert.distance == k + 1 && cert.alphabet == alphabet &&
                    A.verified_strength == k && (cert.array_md == k + 1 || cert.array_md == k + 2);
    if (!ok) detail = "row k=" + std::to_string(k) + " s=" + std::to_string(s) + ": " + cert.to_json().dump();
    return ok;
}

bool criterion7(std::string& detail) {
    for (const auto& row : kTable2Rows)
        if (!check_table2_row(row.s, row.k, detail)) return false;
    return true;
}

bool criterion8(std::string& detail) {
    try {
        build_nqmds(6, 2);
        detail = "s=6, k=2 unexpectedly constructible";
        return false;
    } catch (const Unconstructible&) {
    }
    for (int s : {4, 8, 16, 20}) {
        const auto start = std::chrono::steady_clock::now();
        auto [A, cert] = build_nqmds(s, 2);
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cert.verdict != QuantumVerdict::NQMDS) {
            detail = "s=" + std::to_string(s) + " did not certify";
            return false;
        }
        if (elapsed >= 1.0) {
            detail = "s=" + std::to_string(s) + " took " + std::to_string(elapsed) + "s";
            return false;
        }
    }
    return true;
}

bool criterion9(std::string& detail) {
    for (const auto& row : kTable2Rows) {
        // cap: every k-subset dimension product must stay within 4096
        int64_t worst = 1;
        for (int i = 0; i < row.k; ++i) worst *= row.s;
        if (worst > 4096) continue;
        auto [A, cert] = build_nqmds(row.s, row.k);
        BasisState psi = uniform_state(A, row.k);
        if (!reduction_check(psi, row.k)) {
            detail = "k=" + std::to_string(row.k) + " s=" + std::to_string(row.s) + " reduction not maximally mixed";
            return false;
        }
    }
    return true;
}

bool criterion10(std::string& detail) {
    std::vector<OrthogonalArray> corpus;
    for (const GeneratorColumns& G : example_generators()) corpus.push_back(linear_oa(G));
    for (int s : kPrimePowers16) {
        for (int k = 2; k <= 5; ++k) {
            int64_t runs = 1;
            for (int i = 0; i < k; ++i) runs *= s;
            if (runs > 4096 || 2 * k + 1 > s + 1) continue;
            corpus.push_back(linear_oa(vandermonde_columns(s, k, 2 * k + 1)));
            if (s % 2 == 0) corpus.push_back(fold_mod2(corpus.back(), 2 * k));
        }
    }
    corpus.push_back(fold_mod2(linear_oa(vandermonde_columns(4, 2, 5)), 0));
    corpus.push_back(linear_oa(ic_saturated_columns(2, 4)));
    corpus.push_back(linear_oa(ic_saturated_columns(3, 3)));
    corpus.push_back(linear_oa(ic_saturated_columns(5, 2)));

    for (size_t i = 0; i < corpus.size(); ++i) {
        OrthogonalArray raw = corpus[i];
        raw.hint.reset();
        const int scan = min_distance(raw);
        const int weights = min_distance(corpus[i]);
        if (scan != weights) {
            detail = "instance " + std::to_string(i) + " (" + corpus[i].provenance + "): scan " +
                     std::to_string(scan) + " != weights " + std::to_string(weights);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    run_criterion(1, "binary k=3 codes match the published list", 1.0, criterion1);
    run_criterion(2, "binary k=4 codes match, [8,4,4] self-dual", 1.0, criterion2);
    run_criterion(3, "ternary codes match, almost-extremal flags set", 1.0, criterion3);
    run_criterion(4, "moment-curve arrays have md = n-k+1 up to s=16, k=5", 60.0, criterion4);
    run_criterion(5, "product md equals the factor minimum on 20 random pairs", 30.0, criterion5);
    run_criterion(6, "strength + 1 equals dual weight on examples and 50 random codes", 30.0, criterion6);
    run_criterion(7, "every constructible published NQMDS row certifies", 300.0, criterion7);
    run_criterion(8, "s=6 refused, s in {4,8,16,20} built under a second each", 5.0, criterion8);
    run_criterion(9, "reductions are exactly maximally mixed below the 4096 cap", 60.0, criterion9);
    run_criterion(10, "pairwise-scan md agrees with weight enumeration, N <= 4096", 30.0, criterion10);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

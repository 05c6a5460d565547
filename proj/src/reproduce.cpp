#include "oacodes/reproduce.hpp"

#include <map>
#include <stdexcept>

#include "oacodes/codes.hpp"
#include "oacodes/construct.hpp"
#include "oacodes/quantum.hpp"

namespace oacodes {

namespace {

GeneratorColumns columns_of(int s, int k, const std::vector<std::vector<int>>& cols) {
    GeneratorColumns G;
    G.s = s;
    G.k = k;
    G.columns = cols;
    G.folds.assign(cols.size(), Fold::none);
    return G;
}

nlohmann::json classify_all(int s, int k, const std::vector<std::vector<std::vector<int>>>& column_sets) {
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& cols : column_sets) codes.push_back(classify(columns_of(s, k, cols)).to_json());
    return codes;
}

nlohmann::json example1_report() {
    // binary k=3 generators: units a1,a2,a3 and their listed combinations
    const std::vector<std::vector<std::vector<int>>> sets = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}},
        {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}},
    };
    return nlohmann::json{{"schema", "oa-codes/1"},
                          {"type", "reproduction"},
                          {"target", "example1"},
                          {"source", "Example 1: binary [n,3] codes from the strength-3 and strength-2 arrays"},
                          {"codes", classify_all(2, 3, sets)}};
}

nlohmann::json example2_report() {
    const std::vector<std::vector<int>> u = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    std::vector<std::vector<std::vector<int>>> sets;
    auto with = [&](std::vector<std::vector<int>> extra) {
        std::vector<std::vector<int>> cols = u;
        for (auto& c : extra) cols.push_back(std::move(c));
        sets.push_back(std::move(cols));
    };
    with({});                                                    // [4,4,1]
    with({{1, 1, 1, 1}});                                        // [5,4,2]
    with({{1, 1, 1, 0}});                                        // [5,4,1]
    with({{1, 1, 1, 0}, {0, 1, 1, 1}});                          // [6,4,2]
    with({{1, 1, 1, 0}, {1, 1, 0, 1}, {0, 1, 1, 1}});            // [7,4,3]
    with({{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}});  // [8,4,4]
    with({{1, 1, 0, 0}, {1, 0, 1, 0}});                          // [6,4,1]
    with({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}});            // [7,4,2]
    with({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});  // [8,4,3]
    with({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}});  // [9,4,4]
    return nlohmann::json{{"schema", "oa-codes/1"},
                          {"type", "reproduction"},
                          {"target", "example2"},
                          {"source", "Example 2: binary [n,4] codes, with the self-dual [8,4,4]"},
                          {"codes", classify_all(2, 4, sets)}};
}

nlohmann::json example3_report() {
    const std::vector<std::vector<std::vector<int>>> sets = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}},
        // A1..A6, columns as printed
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}, {2, 0, 1}, {0, 2, 1}, {2, 1, 1}, {1, 2, 1}},
        {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 1, 0}, {2, 0, 1}},
        {{0, 1, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 1, 0}, {2, 0, 1}},
        {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {2, 1, 1}, {1, 2, 1}, {2, 2, 1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}},
    };
    return nlohmann::json{{"schema", "oa-codes/1"},
                          {"type", "reproduction"},
                          {"target", "example3"},
                          {"source", "Example 3: ternary [n,3] codes, six of them NMDS"},
                          {"codes", classify_all(3, 3, sets)}};
}

nlohmann::json table2_report(int k, const std::vector<int>& svals, const std::string& target) {
    nlohmann::json rows = nlohmann::json::array();
    for (int s : svals) {
        auto [array, cert] = build_nqmds(s, k);
        rows.push_back(nlohmann::json{{"k", k}, {"s", s}, {"certificate", cert.to_json()}});
    }
    return nlohmann::json{{"schema", "oa-codes/1"},
                          {"type", "reproduction"},
                          {"target", target},
                          {"source", "Table 2 rows with k = " + std::to_string(k) + " (constructible entries)"},
                          {"rows", rows}};
}

#include "reproduce_golden.inc"

}  // namespace

std::vector<std::string> reproduce_targets() {
    return {"example1", "example2", "example3", "table2:k1", "table2:k2", "table2:k3", "table2:k4", "table2:k5"};
}

nlohmann::json build_target_report(const std::string& target) {
    if (target == "example1") return example1_report();
    if (target == "example2") return example2_report();
    if (target == "example3") return example3_report();
    if (target == "table2:k1") return table2_report(1, {4, 6, 8, 10, 12, 14, 16}, target);
    if (target == "table2:k2") return table2_report(2, {4, 8, 16, 20}, target);
    if (target == "table2:k3") return table2_report(3, {8, 16}, target);
    if (target == "table2:k4") return table2_report(4, {8}, target);
    if (target == "table2:k5") return table2_report(5, {16}, target);
    throw std::invalid_argument("unknown reproduce target '" + target + "'");
}

ReproduceResult run_reproduce(const std::string& target) {
    ReproduceResult res;
    res.report = build_target_report(target);
    const char* golden = golden_expectation(target);
    res.expected = nlohmann::json::parse(golden);
    res.ok = res.report == res.expected;
    if (!res.ok) res.mismatch = "report differs from the bundled expectation for '" + target + "'";
    return res;
}

}  // namespace oacodes

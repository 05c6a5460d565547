#include <random>
#include <sstream>

#include "doctest.h"
#include "oacodes/array.hpp"
#include "oacodes/construct.hpp"

using namespace oacodes;

namespace {

GeneratorColumns gen(int s, int k, std::vector<std::vector<int>> cols) {
    GeneratorColumns G;
    G.s = s;
    G.k = k;
    G.columns = std::move(cols);
    G.folds.assign(G.columns.size(), Fold::none);
    return G;
}

OrthogonalArray full_factorial_2_3() {
    return linear_oa(gen(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

// Example arrays: B has strength 3, the six-column A3 strength 2.
OrthogonalArray example_B() {
    return linear_oa(gen(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
}

OrthogonalArray example_A3() {
    return linear_oa(gen(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
}

OrthogonalArray ternary_A1() {
    return linear_oa(gen(3, 3,
                         {{1, 0, 0},
                          {0, 1, 0},
                          {0, 0, 1},
                          {1, 1, 0},
                          {1, 1, 1},
                          {2, 0, 1},
                          {0, 2, 1},
                          {2, 1, 1},
                          {1, 2, 1}}));
}

OrthogonalArray strip(OrthogonalArray A) {
    A.hint.reset();
    A.verified_strength.reset();
    return A;
}

}  // namespace

TEST_CASE("check_strength on full factorials and known arrays") {
    OrthogonalArray F = strip(full_factorial_2_3());
    CHECK(check_strength(F, 3));
    CHECK(check_strength(F, 0));

    OrthogonalArray A3 = strip(example_A3());
    CHECK(check_strength(A3, 2));
    CHECK_FALSE(check_strength(A3, 3));

    OrthogonalArray R = strip(repetition_oa(4, 3));
    CHECK(check_strength(R, 1));
    CHECK_FALSE(check_strength(R, 2));

    CHECK_THROWS_AS(check_strength(R, 4), std::invalid_argument);
}

TEST_CASE("find_strength_violation names the first bad subset") {
    OrthogonalArray R = strip(repetition_oa(3, 3));
    CHECK(find_strength_violation(R, 1).empty());
    CHECK(find_strength_violation(R, 2) == std::vector<int>{0, 1});
}

TEST_CASE("max_strength on the example arrays") {
    CHECK(max_strength(strip(example_B())) == 3);
    CHECK(max_strength(strip(ternary_A1())) == 2);

    OrthogonalArray one_col(4, 1, {4});
    for (int i = 0; i < 4; ++i) one_col.set(i, 0, i);
    CHECK(max_strength(one_col) == 1);
}

TEST_CASE("strength is monotone in t") {
    for (const OrthogonalArray& A : {strip(example_B()), strip(example_A3()), strip(ternary_A1())}) {
        const int t = max_strength(A);
        for (int tt = 0; tt <= t; ++tt) CHECK(check_strength(A, tt));
        if (t < A.cols) CHECK_FALSE(check_strength(A, t + 1));
    }
}

TEST_CASE("strength t over pure s levels forces s^t | N") {
    for (const OrthogonalArray& A : {strip(example_B()), strip(ternary_A1())}) {
        const int t = max_strength(A);
        int64_t st = 1;
        for (int i = 0; i < t; ++i) st *= A.levels[0];
        CHECK(A.runs % st == 0);
    }
}

TEST_CASE("min_distance: examples and budget") {
    CHECK(min_distance(strip(example_B())) == 2);  // 4 - 3 + 1

    OrthogonalArray R = repetition_oa(5, 7);
    CHECK(min_distance(R) == 7);

    CHECK(min_distance(strip(ternary_A1())) == 6);  // the [9,3,6] code

    CHECK_THROWS_AS(min_distance(strip(example_B()), 3), BudgetExceeded);
    CHECK(min_distance(example_B(), 3) == 2);  // hint path ignores the budget
}

TEST_CASE("weight enumeration agrees with the pairwise scan") {
    for (OrthogonalArray A : {example_B(), example_A3(), ternary_A1(), linear_oa(vandermonde_columns(4, 2, 5)),
                              linear_oa(vandermonde_columns(5, 2, 5)), linear_oa(ic_saturated_columns(3, 2))}) {
        const int hinted = min_distance(A);
        CHECK(hinted == min_distance(strip(A)));
    }
}

TEST_CASE("duplicate rows are flagged, md honestly 0") {
    OrthogonalArray D(4, 3, {2, 2, 2});
    for (int c = 0; c < 3; ++c) {
        D.set(1, c, 1);
        D.set(3, c, 1);
    }
    CHECK(has_duplicate_rows(D));
    CHECK(min_distance(D) == 0);
    CHECK_FALSE(has_duplicate_rows(strip(example_B())));
}

TEST_CASE("is_irredundant on known instances") {
    OrthogonalArray V = linear_oa(vandermonde_columns(4, 2, 5));  // md 4
    CHECK(is_irredundant(V, 2));
    CHECK(is_irredundant(strip(V), 2, IrRoute::projection));

    OrthogonalArray folded = fold_mod2(V, 4);  // md 3
    CHECK(is_irredundant(folded, 2));
    CHECK(is_irredundant(strip(folded), 2, IrRoute::projection));

    OrthogonalArray small = linear_oa(ic_saturated_columns(2, 2));  // OA(4,3,2,2), md 2
    CHECK_FALSE(is_irredundant(small, 2));
    CHECK_FALSE(is_irredundant(strip(small), 2, IrRoute::projection));

    CHECK_THROWS_AS(is_irredundant(small, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_irredundant(small, 3), std::invalid_argument);
}

TEST_CASE("irredundancy matches md >= k+1 across the corpus") {
    for (OrthogonalArray A : {example_B(), example_A3(), ternary_A1(), linear_oa(vandermonde_columns(8, 3, 7)),
                              fold_mod2(linear_oa(vandermonde_columns(4, 2, 5)), 4), repetition_oa(6, 3)}) {
        const int md = min_distance(strip(A));
        for (int k = 1; k < A.cols; ++k) {
            CHECK(is_irredundant(strip(A), k, IrRoute::projection) == (md >= k + 1));
        }
    }
}

TEST_CASE("verify_partition: trivial, cosets, inflated claims") {
    OrthogonalArray F = strip(full_factorial_2_3());
    CHECK(verify_partition(F, trivial_partition(F, max_strength(F))));

    // cosets of {000, 111}: rows paired with their complement
    OrthogonalPartition cosets;
    cosets.blocks = {{0, 7}, {1, 6}, {2, 5}, {3, 4}};
    cosets.block_strength = 1;
    CHECK(verify_partition(F, cosets));

    cosets.block_strength = 2;
    CHECK_FALSE(verify_partition(F, cosets));

    OrthogonalPartition overlapping;
    overlapping.blocks = {{0, 1, 2, 3}, {3, 4, 5, 6}};
    overlapping.block_strength = 0;
    CHECK_FALSE(verify_partition(F, overlapping));

    OrthogonalPartition uneven;
    uneven.blocks = {{0, 1, 2}, {3, 4, 5, 6, 7}};
    uneven.block_strength = 0;
    CHECK_FALSE(verify_partition(F, uneven));

    OrthogonalPartition strength_zero;
    strength_zero.blocks = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    strength_zero.block_strength = 0;
    CHECK(verify_partition(F, strength_zero));

    OrthogonalPartition out_of_range;
    out_of_range.blocks = {{0, 1, 2, 3}, {4, 5, 6, 8}};
    out_of_range.block_strength = 0;
    CHECK_FALSE(verify_partition(F, out_of_range));
}

TEST_CASE("OA text format is bit exact") {
    OrthogonalArray A(2, 3, {2, 4, 2});
    A.set(0, 0, 0);
    A.set(0, 1, 3);
    A.set(0, 2, 1);
    A.set(1, 0, 1);
    A.set(1, 1, 0);
    A.set(1, 2, 0);
    std::ostringstream out;
    write_oa(out, A);
    CHECK(out.str() == "oa v1\n2 3\n2 4 2\n0 3 1\n1 0 0\n");

    std::istringstream in(out.str());
    OrthogonalArray B = read_oa(in);
    CHECK(B.runs == 2);
    CHECK(B.levels == std::vector<int>{2, 4, 2});
    CHECK(B.at(0, 1) == 3);
}

TEST_CASE("partition text format round-trips") {
    OrthogonalPartition P;
    P.blocks = {{0, 7}, {1, 6}, {2, 5}, {3, 4}};
    P.block_strength = 1;
    std::ostringstream out;
    write_partition(out, P);
    CHECK(out.str() == "partition v1\n4 1\n0 7\n1 6\n2 5\n3 4\n");
    std::istringstream in(out.str());
    OrthogonalPartition Q = read_partition(in);
    CHECK(Q.blocks == P.blocks);
    CHECK(Q.block_strength == 1);
}

TEST_CASE("malformed OA files raise ParseError") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_oa(in);
    };
    CHECK_THROWS_AS(parse("oa v2\n1 1\n2\n0\n"), ParseError);
    CHECK_THROWS_AS(parse("oa v1\n2 2\n2 2\n0 0\n"), ParseError);           // missing row
    CHECK_THROWS_AS(parse("oa v1\n1 2\n2 2\n0 5\n"), ParseError);           // entry out of range
    CHECK_THROWS_AS(parse("oa v1\n1 2\n2 1\n0 0\n"), ParseError);           // level below 2
    CHECK_THROWS_AS(parse("oa v1\n1 2\n2 2\n0 x\n"), ParseError);           // junk token
    CHECK_THROWS_AS(parse("oa v1\n1 3\n2 2\n0 0 0\n"), ParseError);         // level list too short
    CHECK_THROWS_AS(parse("oa v1\n2 2\n2 2\n0 0\n0 -1\n"), ParseError);     // negative entry
}

TEST_CASE("round trip through a temp file keeps every entry") {
    OrthogonalArray A = strip(ternary_A1());
    const std::string path = "roundtrip_test.oa";
    write_oa_file(path, A);
    OrthogonalArray B = read_oa_file(path);
    CHECK(A.data == B.data);
    CHECK(A.levels == B.levels);
    std::remove(path.c_str());
}

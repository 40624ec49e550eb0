#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klr/qdim.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace klr;

namespace {

void all_partitions_of(int n, std::vector<int>& parts, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(parts));
        return;
    }
    const int cap = parts.empty() ? n : std::min(parts.back(), n);
    for (int p = cap; p >= 1; --p) {
        parts.push_back(p);
        all_partitions_of(n - p, parts, out);
        parts.pop_back();
    }
}

std::vector<Partition> all_partitions_of(int n) {
    std::vector<int> parts;
    std::vector<Partition> out;
    all_partitions_of(n, parts, out);
    return out;
}

}  // namespace

TEST_CASE("Laurent polynomial basics") {
    LaurentPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.str() == "0");
    CHECK(zero.at_one() == 0);
    CHECK(zero.nonneg_coeffs());
    CHECK_THROWS_AS(zero.min_exp(), std::logic_error);

    CHECK(LaurentPoly::constant(1).str() == "1");
    CHECK(LaurentPoly::term(1, 1).str() == "q");
    CHECK(LaurentPoly::term(1, -1).str() == "q^-1");
    CHECK(LaurentPoly::term(-1, 3).str() == "-q^3");
    CHECK(LaurentPoly::constant(0).is_zero());

    LaurentPoly p = LaurentPoly::constant(1) + LaurentPoly::term(2, 2) + LaurentPoly::term(1, 4);
    CHECK(p.str() == "1+2q^2+q^4");
    CHECK(p.coeff(2) == 2);
    CHECK(p.coeff(3) == 0);
    CHECK(p.min_exp() == 0);
    CHECK(p.max_exp() == 4);
    CHECK(p.at_one() == 4);

    LaurentPoly m = LaurentPoly::constant(1) - LaurentPoly::term(1, 1);
    CHECK(m.str() == "1-q");
    CHECK_FALSE(m.nonneg_coeffs());
    CHECK((m * m).str() == "1-2q+q^2");
    CHECK((m - m).is_zero());

    // (q^-1 + 1)(q - 1) = q - q^-1
    LaurentPoly a = LaurentPoly::term(1, -1) + LaurentPoly::constant(1);
    LaurentPoly b = LaurentPoly::term(1, 1) - LaurentPoly::constant(1);
    CHECK((a * b).str() == "-q^-1+q");
}

TEST_CASE("graded tableau counts of (2,2) at kappa=1, ell=3") {
    Charge ch{1, 3};
    Partition la({2, 2});
    CHECK(kq_total(ch, la).str() == "2q");
    CHECK(kq(ch, la, {1, 2, 0, 1}) == LaurentPoly::term(1, 1));
    CHECK(kq(ch, la, {1, 0, 2, 1}) == LaurentPoly::term(1, 1));
    CHECK(kq(ch, la, {1, 0, 1, 2}).is_zero());
    CHECK(kq(ch, la, {1, 2, 0}).is_zero());

    auto by_seq = kq_by_sequence(ch, la);
    REQUIRE(by_seq.size() == 2);
    CHECK(by_seq.at({1, 2, 0, 1}) == LaurentPoly::term(1, 1));
    CHECK(by_seq.at({1, 0, 2, 1}) == LaurentPoly::term(1, 1));

    CHECK(kq_total(ch, Partition()) == LaurentPoly::constant(1));
}

TEST_CASE("constrained walk agrees with full tableau enumeration") {
    for (Charge ch : {Charge{0, 2}, Charge{1, 2}, Charge{1, 3}, Charge{2, 4}}) {
        for (int n = 0; n <= 7; ++n) {
            for (const Partition& la : all_partitions_of(n)) {
                // route one: residue-filtered depth-first walk
                auto by_seq = kq_by_sequence(ch, la);
                // route two: enumerate tableaux, replay degrees
                std::map<std::vector<int>, LaurentPoly> expect;
                LaurentPoly total_expect;
                for_each_standard_tableau(la, [&](const StandardTableau& t) {
                    expect[residue_sequence(ch, t)].add_term(1, degree(ch, t));
                    total_expect.add_term(1, degree(ch, t));
                });
                CHECK(by_seq == expect);
                CHECK(kq_total(ch, la) == total_expect);
                for (const auto& [nu, poly] : expect) {
                    CHECK(kq(ch, la, nu) == poly);
                    CHECK(realizable(ch, nu));
                }
            }
        }
    }
}

TEST_CASE("squared counts at q=1 recover the symmetric group order") {
    Charge ch{1, 3};
    long long factorial = 1;
    for (int n = 1; n <= 7; ++n) {
        factorial *= n;
        Int sum = 0;
        for (const Partition& la : all_partitions_of(n)) {
            Int f = kq_total(ch, la).at_one();
            sum += f * f;
        }
        CHECK(sum == factorial);
    }
}

TEST_CASE("nonzero blocks") {
    Charge ch{1, 3};
    CHECK(is_nonzero_block(ch, RootVector({1, 2, 1, 0})));
    CHECK(is_nonzero_block(ch, RootVector({0, 0, 0, 0})));
    CHECK_FALSE(is_nonzero_block(ch, RootVector({1, 0, 0, 0})));
    CHECK_FALSE(is_nonzero_block(ch, RootVector({0, 0, 0, 1})));
    CHECK_FALSE(is_nonzero_block(ch, RootVector({-1, 0, 0, 0})));
    CHECK(is_nonzero_block(ch, RootVector({0, 1, 0, 0})));
    CHECK_THROWS_AS(is_nonzero_block(ch, RootVector({0, 1})), std::invalid_argument);
}

TEST_CASE("block residue sequences") {
    Charge ch{1, 3};
    RootVector beta({1, 2, 1, 0});
    auto seqs = block_sequences(ch, beta);
    REQUIRE(seqs.size() == 3);
    CHECK(seqs[0] == std::vector<int>{1, 0, 1, 2});
    CHECK(seqs[1] == std::vector<int>{1, 0, 2, 1});
    CHECK(seqs[2] == std::vector<int>{1, 2, 0, 1});
    for (const auto& nu : seqs) CHECK(realizable(ch, nu));
    CHECK(block_sequences(ch, RootVector({1, 0, 0, 0})).empty());
}

TEST_CASE("graded dimensions of the tame block at ell=2") {
    Charge ch{1, 2};
    RootVector beta({1, 2, 1});
    const std::vector<std::vector<int>> nus = {
        {1, 2, 1, 0}, {1, 2, 0, 1}, {1, 0, 2, 1}, {1, 0, 1, 2}};
    const char* expect[4][4] = {
        {"1+q^4", "q^2", "q^2", "0"},
        {"q^2", "1+q^2+q^4", "1+q^2+q^4", "q^2"},
        {"q^2", "1+q^2+q^4", "1+q^2+q^4", "q^2"},
        {"0", "q^2", "q^2", "1+q^4"},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(graded_dim(ch, beta, nus[i], nus[j]).str() == expect[i][j]);
}

TEST_CASE("graded dimension bookkeeping") {
    Charge ch{1, 3};
    RootVector beta({1, 2, 1, 0});

    CHECK_THROWS_AS(graded_dim(ch, beta, {1, 2, 0}, {1, 2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(graded_dim(ch, beta, {1, 2, 2, 1}, {1, 2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(graded_dim(ch, beta, {1, 2, 0, 7}, {1, 2, 0, 1}), std::invalid_argument);

    // the slot pairing is symmetric
    auto seqs = block_sequences(ch, beta);
    LaurentPoly sum;
    for (const auto& nu : seqs) {
        for (const auto& nu2 : seqs) {
            LaurentPoly d = graded_dim(ch, beta, nu, nu2);
            CHECK(d == graded_dim(ch, beta, nu2, nu));
            sum += d;
        }
    }
    // summing every slot recovers the whole block dimension
    CHECK(sum == graded_dim_block(ch, beta));

    CHECK(graded_dim_block(ch, RootVector({0, 0, 0, 0})) == LaurentPoly::constant(1));
}

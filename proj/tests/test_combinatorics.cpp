#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "tau/combinatorics.hpp"

using namespace tau;

TEST_CASE("partition basics") {
    Partition p{3, 1};
    CHECK(p.cells() == 4);
    CHECK(p.conjugate() == Partition{2, 1, 1});
    CHECK(p.part(3) == 0);
    CHECK(p.to_string() == "3,1");
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("0") == Partition());
    CHECK(Partition::parse("2,2,1") == Partition{2, 2, 1});
    CHECK_THROWS_AS(Partition::parse("1,x"), ParseError);
    CHECK_THROWS(Partition{1, 2});
    CHECK_THROWS(Partition{2, 0});
}

TEST_CASE("partition enumeration counts") {
    for (int n = 0; n <= 10; ++n) CHECK(static_cast<long long>(partitions_of(n).size()) == oracle::partition_count(n));
    long long upto6 = 0, upto8 = 0;
    for (int n = 0; n <= 8; ++n) {
        if (n <= 6) upto6 += oracle::partition_count(n);
        upto8 += oracle::partition_count(n);
    }
    CHECK(partitions_up_to(6).size() == static_cast<std::size_t>(upto6));
    CHECK(upto6 == 30);
    CHECK(upto8 == 67);
    CHECK(partitions_up_to(8).size() == 67);
    std::set<Partition> distinct;
    for (const auto& p : partitions_up_to(8)) distinct.insert(p);
    CHECK(distinct.size() == 67);
}

TEST_CASE("Frobenius coordinates") {
    CHECK(partition_to_frobenius(Partition{2, 1}).to_string() == "I=2;J=1");
    CHECK(partition_to_frobenius(Partition()).rank() == 0);
    FrobeniusSymbol fs = partition_to_frobenius(Partition{2, 2});
    CHECK(fs.arms == std::vector<int>{2, 1});
    CHECK(fs.legs == std::vector<int>{1, 0});
    CHECK(frobenius_to_partition(FrobeniusSymbol{{3}, {0}}) == Partition{3});
    CHECK(frobenius_to_partition(FrobeniusSymbol::parse("I=2,1;J=1,0")) == Partition{2, 2});
    for (const auto& p : partitions_up_to(9)) {
        FrobeniusSymbol s = partition_to_frobenius(p);
        CHECK(frobenius_to_partition(s) == p);
        // arms p_i = lambda_i - i + 1, legs q_i = lambda'_i - i
        const Partition conj = p.conjugate();
        for (std::size_t i = 0; i < s.arms.size(); ++i) {
            CHECK(s.arms[i] == p.part(static_cast<int>(i) + 1) - static_cast<int>(i));
            CHECK(s.legs[i] == conj.part(static_cast<int>(i) + 1) - static_cast<int>(i) - 1);
        }
        int total = 0;
        for (std::size_t i = 0; i < s.arms.size(); ++i) total += s.arms[i] + s.legs[i];
        CHECK(total == p.cells());
    }
}

TEST_CASE("Maya diagrams") {
    CHECK(partition_to_maya(Partition()).added.empty());
    CHECK(partition_to_maya(Partition()).removed.empty());
    MayaDiagram one = partition_to_maya(Partition{1});
    CHECK(one.added == std::set<int>{1});
    CHECK(one.removed == std::set<int>{0});
    MayaDiagram sq = partition_to_maya(Partition{2, 2});
    CHECK(sq.added == std::set<int>{1, 2});
    CHECK(sq.removed == std::set<int>{0, -1});
    for (const auto& p : partitions_up_to(9)) CHECK(maya_to_partition(partition_to_maya(p)) == p);
}

TEST_CASE("m coefficients match corner scan") {
    CHECK(m_coefficients(Partition()) == std::map<int, int>{{0, 1}});
    CHECK(m_coefficients(Partition{1}) == std::map<int, int>{{-1, 1}, {0, -1}, {1, 1}});
    CHECK(m_coefficients(Partition{2, 1}) == std::map<int, int>{{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}});
    for (const auto& p : partitions_up_to(9)) {
        auto m = m_coefficients(p);
        CHECK(m == oracle::corner_coefficients(p.parts()));
        int sum = 0;
        for (const auto& [k, v] : m) sum += v;
        CHECK(sum == 1);
    }
}

TEST_CASE("node colors and generators on diagrams") {
    CHECK(node_color(1, 1) == 0);
    CHECK(node_color(1, 2) == 1);
    CHECK(node_color(2, 1) == -1);
    CHECK(apply_generator_to_diagram(Partition(), 0) == Partition{1});
    CHECK(apply_generator_to_diagram(Partition{1}, 1) == Partition{2});
    CHECK(apply_generator_to_diagram(Partition{1}, 2) == Partition{1});
    CHECK(apply_generator_to_diagram(Partition{1}, 0) == Partition());
    for (const auto& p : partitions_up_to(7))
        for (int k = -8; k <= 8; ++k)
            CHECK(apply_generator_to_diagram(apply_generator_to_diagram(p, k), k) == p);
}

TEST_CASE("color multiplicities") {
    CHECK(color_multiplicities(Partition{1}) == std::map<int, int>{{0, 1}});
    CHECK(color_multiplicities(Partition{2, 1}) == std::map<int, int>{{-1, 1}, {0, 1}, {1, 1}});
    CHECK(color_multiplicities(Partition{2, 2}) == std::map<int, int>{{-1, 1}, {0, 2}, {1, 1}});
}

TEST_CASE("hook forms") {
    CHECK(hook_form(Partition{1}, 1, 1).to_polynomial() == alpha(0));
    CHECK(hook_form(Partition{2, 2}, 1, 1).to_polynomial() == alpha(-1) + alpha(0) + alpha(1));
    CHECK(hook_form(Partition{2, 2}, 2, 2).to_polynomial() == alpha(0));
    CHECK_THROWS_AS(hook_form(Partition{2, 2}, 1, 3), NodeOutside);
    CHECK(normalization_factor(Partition()) == Polynomial(1));
    CHECK(normalization_factor(Partition{2}) == (alpha(0) + alpha(1)) * alpha(1));
    CHECK(normalization_factor(Partition{2, 2}) ==
          (alpha(-1) + alpha(0) + alpha(1)) * (alpha(0) + alpha(1)) * (alpha(-1) + alpha(0)) * alpha(0));
    // At alpha = 1 every form is the classical hook length.
    for (const auto& p : partitions_up_to(8)) {
        for (auto [i, j] : p.nodes()) {
            VDifference h = hook_form(p, i, j);
            CHECK(h.a < h.b);
            CHECK(h.b - h.a == oracle::hook_length(p.parts(), i, j));
        }
    }
}

TEST_CASE("Weyl words") {
    CHECK(canonical_word(Partition{1}).to_string() == "s0");
    CHECK(canonical_word(Partition{3}).to_string() == "s2 s1 s0");
    CHECK(canonical_word(Partition{2, 2}).to_string() == "s0 s-1 s1 s0");
    CHECK(WeylWord{}.to_string() == "id");
    CHECK(WeylWord::parse("s0 s-1 s1 s0") == canonical_word(Partition{2, 2}));
    CHECK(WeylWord::parse("id").letters.empty());
    WeylWord w = WeylWord::parse("s1 pi");
    CHECK(w.pi_power == 1);
    CHECK(w.letters == std::vector<int>{0});
    CHECK(WeylWord::parse("pi^2 s1").pi_power == 2);
    CHECK_THROWS_AS(WeylWord::parse("s0 x1"), ParseError);
    CHECK_THROWS_AS(WeylWord::parse("sq"), ParseError);
    CHECK(WeylWord::parse("s0 s1").shifted(2).to_string() == "s2 s3");
    for (const auto& p : partitions_up_to(7)) {
        Partition shape;
        for (int i : canonical_word(p).acting_order()) {
            CHECK(m_coefficient(shape, i) == 1);
            shape = apply_generator_to_diagram(shape, i);
        }
        CHECK(shape == p);
    }
}

#include "sbc/partition.hpp"
#include "sbc/symbolic_set.hpp"

#include <doctest.h>
#include <set>

using namespace sbc;

TEST_CASE("conjugation") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
    CHECK(Partition{5, 2, 1}.conjugate() == Partition{3, 2, 1, 1, 1});
    for (long long n = 0; n <= 20; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(lam.conjugate().conjugate() == lam);
    // first part of the conjugate is the length
    for (const auto& lam : enumerate_partitions(12))
        if (!lam.empty()) CHECK(lam.conjugate().first() == static_cast<long long>(lam.length()));
}

TEST_CASE("subpartition") {
    CHECK(Partition{3, 1}.contains(Partition{2, 1}));
    CHECK_FALSE(Partition{3, 1}.contains(Partition{2, 2}));
    CHECK(Partition{1}.contains(Partition{}));
}

TEST_CASE("part-wise sum") {
    CHECK(Partition{2, 1} + Partition{2, 1} == Partition{4, 2});
    CHECK(Partition{3, 1} + Partition{} == Partition{3, 1});
    CHECK(Partition{3, 1} + Partition{3, 1} == Partition{6, 2});
    CHECK((Partition{3, 1} + Partition{2, 2}).n() == 8);
}

TEST_CASE("thin partitions") {
    CHECK(Partition{4, 1, 1, 1}.is_thin());
    CHECK(Partition{20, 5}.is_thin());
    CHECK_FALSE(Partition{4, 2, 2}.is_thin());
    CHECK(Partition{2, 2, 1, 1}.is_thin());  // conjugate of (4,2)
    CHECK(Partition{}.is_thin());
    // closed under conjugation
    for (const auto& lam : enumerate_partitions(14))
        CHECK(lam.is_thin() == lam.conjugate().is_thin());
}

TEST_CASE("normalized width") {
    CHECK(Partition{1, 1, 1}.normalized_width() == 3);
    CHECK(Partition{3}.normalized_width() == 3);
    CHECK(Partition{2, 2}.normalized_width() == 2);
    CHECK_THROWS_AS(Partition{}.normalized_width(), std::invalid_argument);
}

TEST_CASE("enumeration and counting") {
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0).front() == Partition{});
    CHECK(enumerate_partitions(25).size() == 1958);
    CHECK(partition_count(25) == 1958);
    CHECK(partition_count(30) == 5604);
    for (long long n = 0; n <= 22; ++n)
        CHECK(enumerate_partitions(n).size() == partition_count(n));
    // descending lexicographic order
    auto all = enumerate_partitions(9);
    CHECK(all.front() == Partition{9});
    CHECK(all.back().length() == 9);
    CHECK(std::is_sorted(all.begin(), all.end(), DescLex{}));
    CHECK_THROWS_AS(enumerate_partitions(300), std::invalid_argument);
}

TEST_CASE("partition text format") {
    CHECK(Partition::parse("[6,2]") == Partition{6, 2});
    CHECK(Partition::parse("[4,1^3]") == Partition{4, 1, 1, 1});
    CHECK(Partition::parse("[]") == Partition{});
    CHECK(Partition::parse(" [ 5 , 2^2 ] ") == Partition{5, 2, 2});
    CHECK(Partition{6, 2}.to_string() == "[6,2]");
    CHECK_THROWS(Partition::parse("[2,3]"));
    CHECK_THROWS(Partition::parse("[1,0]"));
    CHECK_THROWS(Partition::parse("6,2"));
}

TEST_CASE("symbolic set membership") {
    auto b43 = SymbolicPartitionSet::box(4, 3);
    CHECK(b43.contains(Partition{3, 1}));
    CHECK_FALSE(b43.contains(Partition{4}));
    CHECK_THROWS_AS(b43.contains(Partition{3}), std::invalid_argument);

    auto pb = SymbolicPartitionSet::punctured_box(25, 20);
    CHECK_FALSE(pb.contains(Partition{20, 4, 1}));
    CHECK_FALSE(pb.contains(Partition{20, 2, 1, 1, 1}));
    CHECK(pb.contains(Partition{20, 5}));
    CHECK(pb.contains(Partition{20, 4, 1}.conjugate()) == false);

    auto pf = SymbolicPartitionSet::punctured_full(3);
    CHECK_FALSE(pf.contains(Partition{2, 1}));
    CHECK(pf.contains(Partition{3}));
    CHECK(pf.contains(Partition{1, 1, 1}));
}

TEST_CASE("symbolic set construction guards") {
    CHECK_THROWS_AS(SymbolicPartitionSet::punctured_box(8, 4), std::invalid_argument);  // t <= n/2
    CHECK_THROWS_AS(SymbolicPartitionSet::punctured_box(8, 7), std::invalid_argument);  // t > n-2
    CHECK_THROWS_AS(SymbolicPartitionSet::punctured_full(2), std::invalid_argument);
    CHECK(SymbolicPartitionSet::box(4, 4).kind() == SymbolicPartitionSet::Kind::Full);
    CHECK_THROWS_AS(SymbolicPartitionSet::explicit_set(
                        5, {Partition{4, 1}}, /*require_conjugation_closed=*/true),
                    std::invalid_argument);
}

TEST_CASE("example materializations") {
    auto b43 = SymbolicPartitionSet::box(4, 3).materialize();
    CHECK(b43 == std::vector<Partition>{Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}});
    CHECK(SymbolicPartitionSet::full(3).materialize().size() == 3);

    // punctured box at n=8, t=5: both punctures coincide at (5,2,1)
    auto got = SymbolicPartitionSet::punctured_box(8, 5).materialize();
    std::set<Partition, DescLex> expect;
    for (const auto& lam : SymbolicPartitionSet::box(8, 5).materialize()) expect.insert(lam);
    expect.erase(Partition{5, 2, 1});
    expect.erase(Partition{3, 2, 1, 1, 1});
    CHECK(got == std::vector<Partition>(expect.begin(), expect.end()));
}

TEST_CASE("symbolic sets are conjugation-closed") {
    std::vector<SymbolicPartitionSet> sets{
        SymbolicPartitionSet::full(12),          SymbolicPartitionSet::punctured_full(12),
        SymbolicPartitionSet::box(12, 7),        SymbolicPartitionSet::punctured_box(12, 8),
        SymbolicPartitionSet::box(16, 5),        SymbolicPartitionSet::punctured_box(16, 9),
    };
    for (const auto& s : sets)
        for (long long n = s.n(), i = 0; i < 1; ++i)
            for (const auto& lam : enumerate_partitions(n))
                CHECK(s.contains(lam) == s.contains(lam.conjugate()));
    // exhaustive over small n for the box family
    for (long long n = 1; n <= 20; ++n)
        for (long long t = 1; t <= n; ++t) {
            auto box = SymbolicPartitionSet::box(n, t);
            for (const auto& lam : enumerate_partitions(n))
                CHECK(box.contains(lam) == box.contains(lam.conjugate()));
        }
}

TEST_CASE("materialize agrees with filtered enumeration") {
    std::vector<SymbolicPartitionSet> sets{
        SymbolicPartitionSet::punctured_full(10), SymbolicPartitionSet::box(10, 6),
        SymbolicPartitionSet::punctured_box(10, 7)};
    for (const auto& s : sets) {
        std::vector<Partition> filtered;
        for (const auto& lam : enumerate_partitions(s.n()))
            if (s.contains(lam)) filtered.push_back(lam);
        CHECK(s.materialize() == filtered);
    }
}

TEST_CASE("punctured box cardinalities") {
    // |oB| = |B| minus the closure of the two punctures (2, 3 or 4 partitions
    // depending on coincidences).
    for (long long n = 7; n <= 16; ++n)
        for (long long t = n / 2 + 1; t <= n - 2; ++t) {
            auto box = SymbolicPartitionSet::box(n, t).materialize();
            auto punc = SymbolicPartitionSet::punctured_box(n, t).materialize();
            std::vector<Partition> ex{Partition::parse("[" + std::to_string(t) + "," +
                                                       std::to_string(n - t - 1) + ",1]"),
                                      Partition::parse("[" + std::to_string(t) + ",2,1^" +
                                                       std::to_string(n - t - 2) + "]")};
            auto closure = conjugate_closure(ex);
            CHECK(box.size() - punc.size() == closure.size());
            CHECK(closure.size() >= 2);
            CHECK(closure.size() <= 4);
        }
}

TEST_CASE("symbolic set text round trip") {
    for (const char* text : {"P(10)", "oP(5)", "B(25,20)", "oB(25,20)"}) {
        auto s = SymbolicPartitionSet::parse(text);
        CHECK(s.to_string() == text);
    }
    auto ex = SymbolicPartitionSet::parse("{[3,1],[2,2],[2,1,1]}");
    CHECK(ex.kind() == SymbolicPartitionSet::Kind::Explicit);
    CHECK(ex.members().size() == 3);
}

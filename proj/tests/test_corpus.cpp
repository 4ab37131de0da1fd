#include <catch2/catch_amalgamated.hpp>

#include "lynum/corpus.hpp"
#include "lynum/hh_graph.hpp"
#include "support/brute.hpp"

using namespace lynum;

TEST_CASE("corpus generation is deterministic") {
    auto a = generate_corpus(CorpusKind::RandomPure, 4, 2, 3, 7);
    auto b = generate_corpus(CorpusKind::RandomPure, 4, 2, 3, 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("random_pure draws pure complexes of the requested dimension") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}, {6, 3}, {7, 4}}) {
        auto cs = generate_corpus(CorpusKind::RandomPure, n, d, 4, 11);
        for (const auto& delta : cs) {
            CHECK(delta.is_pure());
            CHECK(delta.top_dimension() == d);
            CHECK(static_cast<int>(stanley_reisner_ideal(delta).generators().size()) <= 13);
        }
    }
}

TEST_CASE("shellable members admit a shelling order (verified by search)") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 3}, {6, 3}, {6, 4}}) {
        auto cs = generate_corpus(CorpusKind::Shellable, n, d, 3, 1);
        for (const auto& delta : cs) {
            CHECK(delta.is_pure());
            CHECK(delta.top_dimension() == d);
            CHECK(testsupport::is_shellable(delta));
        }
    }
}

TEST_CASE("disjoint_blocks yields the advertised number of graph components") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {6, 3}, {7, 3}}) {
        int blocks = disjoint_block_count(n, d);
        REQUIRE(blocks >= 2);
        auto cs = generate_corpus(CorpusKind::DisjointBlocks, n, d, 3, 5);
        for (const auto& delta : cs) {
            CHECK(delta.is_pure());
            CHECK(top_lyubeznik_via_graph(delta) == blocks);
        }
    }
}

TEST_CASE("infeasible parameters are rejected") {
    CHECK_THROWS_AS(generate_corpus(CorpusKind::RandomPure, 3, 4, 1, 0), BadParams);
    CHECK_THROWS_AS(generate_corpus(CorpusKind::RandomPure, 0, 1, 1, 0), BadParams);
    CHECK_THROWS_AS(generate_corpus(CorpusKind::RandomPure, 4, 2, 0, 0), BadParams);
    CHECK_THROWS_AS(generate_corpus(CorpusKind::DisjointBlocks, 3, 2, 1, 0), BadParams);
}

#include <catch2/catch_amalgamated.hpp>

#include "lynum/corpus.hpp"
#include "lynum/hh_graph.hpp"
#include "support/brute.hpp"

using namespace lynum;

TEST_CASE("face prime heights") {
    SimplicialComplex delta = from_facets(4, {{1, 2, 3}, {3, 4}});
    CHECK(face_prime_height(delta, face_from_vertices({3}, 4)) == 2);
    for (Face f : delta.facets()) CHECK(face_prime_height(delta, f) == 0);
    CHECK_THROWS_AS(face_prime_height(delta, face_from_vertices({1, 4}, 4)), NotAFace);

    SimplicialComplex pure = from_facets(4, {{1, 2, 3}, {2, 3, 4}});
    CHECK(face_prime_height(pure, 0) == 3); // ht of the maximal ideal = dim
}

TEST_CASE("height agrees with the saturated-chain oracle on a corpus") {
    std::vector<SimplicialComplex> corpus;
    for (auto kind : {CorpusKind::RandomPure, CorpusKind::Shellable})
        for (const auto& delta : generate_corpus(kind, 5, 3, 4, 3)) corpus.push_back(delta);
    corpus.push_back(from_facets(4, {{1, 2, 3}, {3, 4}}));
    for (const auto& delta : corpus)
        for (Face sigma : delta.all_faces()) {
            CHECK(face_prime_height(delta, sigma) == face_prime_height_by_chains(delta, sigma));
            CHECK(face_prime_height(delta, sigma) == testsupport::brute_chain_height(delta, sigma));
        }
}

TEST_CASE("facet sum heights") {
    SimplicialComplex ridge = from_facets(4, {{1, 2, 3}, {2, 3, 4}});
    CHECK(facet_sum_height(ridge, ridge.facets()[0], ridge.facets()[1]) == 1);
    CHECK(facet_sum_height(ridge, ridge.facets()[0], ridge.facets()[0]) == 0);

    SimplicialComplex planes = from_facets(4, {{1, 2}, {3, 4}});
    CHECK(facet_sum_height(planes, planes.facets()[0], planes.facets()[1]) == 2);
}

TEST_CASE("ridge adjacency formula holds for pure complexes") {
    for (const auto& delta : generate_corpus(CorpusKind::RandomPure, 6, 3, 6, 17)) {
        int d = delta.top_dimension();
        auto tops = delta.top_facets();
        for (std::size_t i = 0; i < tops.size(); ++i)
            for (std::size_t j = i + 1; j < tops.size(); ++j) {
                int h = facet_sum_height(delta, tops[i], tops[j]);
                CHECK(h == d - face_size(tops[i] & tops[j]));
            }
    }
}

TEST_CASE("graph construction and components") {
    SimplicialComplex planes = from_facets(4, {{1, 2}, {3, 4}});
    HHGraph g1 = hochster_huneke_graph(planes);
    CHECK(g1.vertices.size() == 2);
    CHECK(g1.edges.empty());
    CHECK(connected_components(g1).count == 2);
    CHECK(top_lyubeznik_via_graph(planes) == 2);

    SimplicialComplex ridge = from_facets(4, {{1, 2, 3}, {2, 3, 4}});
    HHGraph g2 = hochster_huneke_graph(ridge);
    CHECK(g2.vertices.size() == 2);
    CHECK(g2.edges.size() == 1);
    CHECK(top_lyubeznik_via_graph(ridge) == 1);

    SimplicialComplex irr = from_facets(1, {{}});
    HHGraph g3 = hochster_huneke_graph(irr);
    CHECK(g3.vertices.size() == 1);
    CHECK(g3.edges.empty());
    CHECK(top_lyubeznik_via_graph(irr) == 1);

    CHECK(top_lyubeznik_via_graph(from_facets(3, {{1, 2, 3}})) == 1);
}

TEST_CASE("shellable members have connected graphs") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}, {7, 4}})
        for (const auto& delta : generate_corpus(CorpusKind::Shellable, n, d, 4, 23))
            CHECK(top_lyubeznik_via_graph(delta) == 1);
}

TEST_CASE("graph value is additive over vertex-disjoint unions") {
    // three disjoint edges assembled by hand
    SimplicialComplex three = from_facets(6, {{1, 2}, {3, 4}, {5, 6}});
    CHECK(top_lyubeznik_via_graph(three) == 3);
    auto split = component_split(three);
    REQUIRE(split.size() == 3);
    int total = 0;
    for (const auto& part : split) total += top_lyubeznik_via_graph(part);
    CHECK(total == 3);
}

TEST_CASE("component_split on a non-pure complex uses only top facets") {
    SimplicialComplex np = from_facets(4, {{1, 2, 3}, {3, 4}});
    auto split = component_split(np);
    REQUIRE(split.size() == 1);
    CHECK(split[0].facets() == std::vector<Face>{Face(0b0111)});
}

TEST_CASE("connectivity equals chain-linkage of minimal primes") {
    // the graph is connected iff every facet pair is joined by a chain of
    // facets with consecutive sum-heights at most one
    auto chain_linked = [](const SimplicialComplex& delta) {
        auto tops = delta.top_facets();
        std::vector<int> reach(tops.size(), 0);
        std::vector<std::size_t> queue{0};
        reach[0] = 1;
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            for (std::size_t j = 0; j < tops.size(); ++j)
                if (!reach[j] && facet_sum_height(delta, tops[cur], tops[j]) <= 1) {
                    reach[j] = 1;
                    queue.push_back(j);
                }
        }
        for (int r : reach)
            if (!r) return false;
        return true;
    };
    for (auto kind : {CorpusKind::RandomPure, CorpusKind::Shellable, CorpusKind::DisjointBlocks})
        for (const auto& delta : generate_corpus(kind, 6, 2, 5, 9)) {
            bool connected = top_lyubeznik_via_graph(delta) == 1;
            CHECK(connected == chain_linked(delta));
        }
}

TEST_CASE("cone vertex preserves the graph (vertex-wise bijection)") {
    for (const auto& base : generate_corpus(CorpusKind::RandomPure, 5, 2, 5, 31)) {
        SimplicialComplex c = cone(base);
        int apex = c.vertex_count();
        SimplicialComplex del = deletion(c, face_from_vertices({apex}, c.vertex_count()));
        HHGraph gc = hochster_huneke_graph(c);
        HHGraph gd = hochster_huneke_graph(del);
        REQUIRE(gc.vertices.size() == gd.vertices.size());
        Face apex_bit = Face(1) << (apex - 1);
        for (std::size_t i = 0; i < gc.vertices.size(); ++i)
            CHECK((gc.vertices[i].face & ~apex_bit) == gd.vertices[i].face);
        CHECK(gc.edges == gd.edges);
    }
}

TEST_CASE("pairwise height bound lifts from the base to the cone") {
    // with a cone vertex v: if all pairs over F1,F2 have sum-height >= 2 in
    // the deletion, the pair has sum-height >= 2 upstairs
    for (const auto& base : generate_corpus(CorpusKind::DisjointBlocks, 6, 2, 3, 13)) {
        SimplicialComplex c = cone(base);
        int apex = c.vertex_count();
        SimplicialComplex del = deletion(c, face_from_vertices({apex}, c.vertex_count()));
        auto tops_c = c.top_facets();
        auto tops_d = del.top_facets();
        REQUIRE(tops_c.size() == tops_d.size());
        for (std::size_t i = 0; i < tops_c.size(); ++i)
            for (std::size_t j = i + 1; j < tops_c.size(); ++j)
                if (facet_sum_height(del, tops_d[i], tops_d[j]) >= 2)
                    CHECK(facet_sum_height(c, tops_c[i], tops_c[j]) >= 2);
    }
}

TEST_CASE("projective mode") {
    ProjectiveInput two_planes_point;
    two_planes_point.d = 2;
    two_planes_point.components = {{"A", 2}, {"B", 2}};
    two_planes_point.intersections = {{"A", "B", 0}};
    CHECK(projective_top_lyubeznik(two_planes_point) == 2);

    ProjectiveInput two_planes_line = two_planes_point;
    two_planes_line.intersections = {{"A", "B", 1}};
    CHECK(projective_top_lyubeznik(two_planes_line) == 1);

    ProjectiveInput one;
    one.d = 3;
    one.components = {{"X", 3}};
    CHECK(projective_top_lyubeznik(one) == 1);

    // omitted pairs default to empty intersection
    ProjectiveInput omission;
    omission.d = 1;
    omission.components = {{"L1", 1}, {"L2", 1}};
    CHECK(projective_top_lyubeznik(omission) == 2);

    ProjectiveInput bad = two_planes_point;
    bad.intersections = {{"A", "B", 2}};
    CHECK_THROWS_AS(projective_top_lyubeznik(bad), BadInput);

    ProjectiveInput bad_dim;
    bad_dim.d = 2;
    bad_dim.components = {{"A", 2}, {"B", 1}};
    CHECK_THROWS_AS(projective_top_lyubeznik(bad_dim), BadInput);
}

TEST_CASE("DOT export is stable") {
    SimplicialComplex ridge = from_facets(4, {{1, 2, 3}, {2, 3, 4}});
    std::string dot = to_dot(hochster_huneke_graph(ridge));
    CHECK(dot == "graph hochster_huneke {\n"
                 "  \"1,2,3\";\n"
                 "  \"2,3,4\";\n"
                 "  \"1,2,3\" -- \"2,3,4\";\n"
                 "}\n");
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bga/path_algebra.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace bga;

TEST_CASE("path basis sizes") {
    // 2-edge path, unit multiplicities: 1_e0, 1_e1, a, b, soc(e0), soc(e1)
    BrauerGraph path(fixtures::path2(), {1, 1, 1});
    CHECK(dimension(path) == 6);

    CHECK(dimension(fixtures::triangle123()) == 24);

    BrauerGraph single11(fixtures::single_edge(), {1, 1});
    CHECK(dimension(single11) == 2);

    BrauerGraph single12(fixtures::single_edge(), {1, 2});
    CHECK(dimension(single12) == 3);
}

TEST_CASE("basis cardinality equals sum of multiplicity times valency squared") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        BrauerGraph bg = gen::random_brauer_graph(1 + rng() % 5, 3, rng);
        long long expected = 0;
        for (int v = 0; v < bg.vertex_count(); ++v) {
            expected += static_cast<long long>(bg.multiplicity(v)) * bg.valency(v) * bg.valency(v);
        }
        CHECK(dimension(bg) == expected);
    }
}

TEST_CASE("multiplication on the 2-edge path") {
    BrauerGraph bg(fixtures::path2(), {1, 1, 1});
    // a = alpha_1 (e0 -> e1 winding the middle vertex), b = alpha_2 (e1 -> e0)
    PathNF a = PathNF::proper(1, 1);
    PathNF b = PathNF::proper(2, 1);
    // ba winds the middle vertex to full length: the socle of e0, whose
    // canonical representative is the leaf loop at the multiplicity-1 vertex
    CHECK(multiply(bg, b, a) == PathNF::socle(0));
    CHECK(multiply(bg, a, b) == PathNF::socle(1));
    CHECK(multiply(bg, a, a).is_zero());

    // unit laws
    for (const PathNF& p : path_basis(bg)) {
        CHECK(multiply(bg, p, PathNF::idempotent(source_edge(bg, p))) == p);
        CHECK(multiply(bg, PathNF::idempotent(target_edge(bg, p)), p) == p);
    }

    // socles annihilate non-units
    CHECK(multiply(bg, PathNF::socle(0), PathNF::socle(0)).is_zero());
    CHECK(multiply(bg, PathNF::socle(1), b).is_zero());
}

TEST_CASE("modified sign: ba = -socle when the canonical representative sits at the other end") {
    BrauerGraph bg(fixtures::path2(), {1, 1, 1}, {1, 0});
    PathNF a = PathNF::proper(1, 1);
    PathNF b = PathNF::proper(2, 1);
    CHECK(multiply(bg, b, a) == PathNF::socle(0, -1));
    // even weight change leaves the structure constants untouched
    BrauerGraph bg2(fixtures::path2(), {1, 1, 1}, {2, 0});
    CHECK(multiply(bg2, b, a) == PathNF::socle(0));
}

TEST_CASE("normal forms from a different graph are rejected") {
    BrauerGraph path(fixtures::path2(), {1, 1, 1});
    CHECK_THROWS_AS(multiply(path, PathNF::proper(11, 1), PathNF::idempotent(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(multiply(path, PathNF::proper(1, 9), PathNF::idempotent(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(source_edge(path, PathNF::socle(7)), std::invalid_argument);
}

TEST_CASE("dimension and hom dimensions match the rewriting oracle") {
    std::mt19937 rng(90210);
    for (int trial = 0; trial < 40; ++trial) {
        BrauerGraph bg = gen::random_brauer_graph(1 + rng() % 4, 3, rng);
        oracle::Algebra alg(bg);
        CAPTURE(bg.graph().rho, bg.multiplicities());
        REQUIRE(dimension(bg) == alg.dimension());
        for (int x = 0; x < bg.edge_count(); ++x) {
            for (int y = 0; y < bg.edge_count(); ++y) {
                CHECK(hom_dimension(bg, x, y) == alg.hom_dimension(x, y));
            }
        }
    }
}

TEST_CASE("multiplication agrees with the rewriting oracle") {
    std::mt19937 rng(424213);
    for (int trial = 0; trial < 12; ++trial) {
        BrauerGraph bg = gen::random_brauer_graph(1 + rng() % 3, 2, rng);
        oracle::Algebra alg(bg);
        auto basis = path_basis(bg);
        for (const PathNF& p : basis) {
            for (const PathNF& q : basis) {
                PathNF nf = multiply(bg, p, q);
                auto lhs = to_oracle(alg, bg, nf);
                auto rhs = alg.multiply(to_oracle(alg, bg, p), to_oracle(alg, bg, q));
                CAPTURE(bg.graph().rho, bg.multiplicities());
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("associativity and unitality on the basis closure, exhaustively") {
    std::vector<BrauerGraph> graphs{
        fixtures::triangle123(),
        BrauerGraph(fixtures::path2(), {1, 1, 1}, {1, 0}),
        BrauerGraph(fixtures::single_edge(), {1, 2}),
        BrauerGraph(fixtures::one_vertex_loop(), {2}),
        BrauerGraph(fixtures::two_loop_bouquet(), {1}),
    };
    std::mt19937 rng(5150);
    graphs.push_back(gen::random_brauer_graph(5, 3, rng));
    for (const auto& bg : graphs) {
        auto basis = path_basis(bg);
        for (const PathNF& p : basis) {
            for (const PathNF& q : basis) {
                PathNF pq = multiply(bg, p, q);
                for (const PathNF& r : basis) {
                    PathNF qr = multiply(bg, q, r);
                    CHECK(multiply(bg, pq, r) == multiply(bg, p, qr));
                }
            }
        }
    }
}

TEST_CASE("degree additivity and relation homogeneity") {
    std::mt19937 rng(24601);
    for (int trial = 0; trial < 30; ++trial) {
        BrauerGraph plain = gen::random_brauer_graph(1 + rng() % 4, 3, rng);
        BrauerGraph bg = gen::random_admissible_grading(plain, rng);
        auto basis = path_basis(bg);
        for (const PathNF& p : basis) {
            for (const PathNF& q : basis) {
                PathNF pq = multiply(bg, p, q);
                if (!pq.is_zero()) {
                    CHECK(degree(bg, pq) == degree(bg, p) + degree(bg, q));
                }
            }
        }
        // both socle representatives are full cycles of degree zero
        for (int e = 0; e < bg.edge_count(); ++e) {
            auto [c, t] = socle_representatives(bg, e);
            for (const auto& rep : {c, t}) {
                int d = 0;
                int h = rep.start_half_edge;
                for (int i = 0; i < rep.length; ++i) {
                    d += bg.arrow_degree(h);
                    h = bg.rho(h);
                }
                CHECK(d == 0);
            }
        }
    }
}

TEST_CASE("complement closes paths to maximal cycles") {
    BrauerGraph bg(fixtures::path2(), {1, 1, 1});
    PathNF a = PathNF::proper(1, 1);
    PathNF b = PathNF::proper(2, 1);
    CHECK(complement(bg, a) == b);
    CHECK(complement(bg, b) == a);
    CHECK(complement(bg, PathNF::socle(0)) == PathNF::idempotent(0));
    CHECK(complement(bg, PathNF::idempotent(0)) == PathNF::socle(0));
    CHECK_THROWS_AS(complement(bg, PathNF::zero()), std::invalid_argument);

    // multiply(p, p*) is the maximal cycle at the start edge of p*
    std::mt19937 rng(8888);
    for (int trial = 0; trial < 30; ++trial) {
        BrauerGraph g = gen::random_brauer_graph(1 + rng() % 4, 3, rng);
        for (const PathNF& p : path_basis(g)) {
            if (p.kind() != PathNF::Kind::Proper) continue;
            PathNF comp = complement(g, p);
            PathNF prod = multiply(g, p, comp);
            REQUIRE(prod.kind() == PathNF::Kind::Socle);
            CHECK(prod.edge() == source_edge(g, comp));
            CHECK(prod == maximal_cycle_value(g, comp.start_half_edge()));
        }
    }
}

TEST_CASE("triangle complement example: for units, beta completes to alpha") {
    BrauerGraph bg(fixtures::triangle(), {1, 1, 1});
    // beta = the arrow alpha_1 winding vertex {1,2}; its complement is alpha_2
    CHECK(complement(bg, PathNF::proper(1, 1)) == PathNF::proper(2, 1));
}

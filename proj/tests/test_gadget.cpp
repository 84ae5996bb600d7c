#include <doctest.h>

#include <set>

#include "normax/errors.hpp"
#include "normax/gadget.hpp"
#include "support.hpp"

using namespace normax;
using namespace testsupport;

namespace {

Graph triangle() {
    Graph G;
    G.n = 3;
    G.add_edge(0, 1);
    G.add_edge(0, 2);
    G.add_edge(1, 2);
    return G;
}

Graph empty_graph(std::size_t n) {
    Graph G;
    G.n = n;
    return G;
}

Graph complete(std::size_t n) {
    Graph G;
    G.n = n;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) G.add_edge(u, v);
    return G;
}

}  // namespace

TEST_CASE("graph parsing") {
    auto G = parse_dimacs("c a comment\np edge 3 2\ne 1 2\n# another\ne 2 3\n");
    CHECK(G.n == 3);
    CHECK(G.adjacent(0, 1));
    CHECK(G.adjacent(1, 2));
    CHECK_FALSE(G.adjacent(0, 2));
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
}

TEST_CASE("sphere points at the cardinal directions are exact") {
    Rational U(1, 1024);
    auto pts = sphere_points(4, 2, U);
    REQUIRE(pts.size() == 8);
    CHECK(pts[0] == RatVec{Rational(1), Rational(0)});
    CHECK(pts[2] == RatVec{Rational(0), Rational(1)});
    CHECK(pts[4] == RatVec{Rational(-1), Rational(0)});  // antipode of the first
}

TEST_CASE("diagonal sphere point lands on the expected grid cell") {
    // Independent derivation: the crossing of the ray (1/2,1/2) + t(1,1)
    // with the euclidean unit circle has both coordinates 1/sqrt(2);
    // snapping to multiples of U/2 = 1/2048 gives 1448/2048 = 181/256
    // (1448.15... rounds to 1448, and the bisection error U/16 cannot
    // move the result across the rounding boundary at 1447.5 or 1448.5).
    Rational U(1, 1024);
    auto pts = sphere_points(4, 2, U);
    CHECK(pts[1] == RatVec{Rational(181, 256), Rational(181, 256)});
    // certified closeness to the sphere: |2 x^2 - 1| small
    Rational err = abs_val(2 * pts[1][0] * pts[1][0] - 1);
    CHECK(err <= 3 * U);
}

TEST_CASE("sphere point construction validates its input") {
    CHECK_THROWS_AS(sphere_points(5, 2, Rational(1, 100)), OddN);
    CHECK_THROWS(sphere_points(2, 2, Rational(1, 100)));
    CHECK_THROWS(sphere_points(4, 1, Rational(1, 100)));
}

TEST_CASE("rounded points stay within U of the sphere in every norm") {
    for (std::size_t n : {4, 8, 12})
        for (int p : {2, 3}) {
            Rational U(1, pow_int(Integer(n), static_cast<unsigned>(2 * p)) * 4);
            auto pts = sphere_points(n, p, U);
            const auto pu = static_cast<unsigned>(p);
            for (const auto& pt : pts) {
                Rational norm = pnorm_pow(pt, p);
                CHECK(norm >= pow_int(Rational(1) - U, pu));
                CHECK(norm <= pow_int(Rational(1) + U, pu));
                // grid membership: coordinates are multiples of U/2
                for (const auto& c : pt) CHECK(den(c / (U / 2)) == 1);
            }
        }
}

TEST_CASE("polygon facets from vertices in angular order") {
    std::vector<RatVec> diamond = {{Rational(1), Rational(0)},
                                   {Rational(0), Rational(1)},
                                   {Rational(-1), Rational(0)},
                                   {Rational(0), Rational(-1)}};
    auto P = polygon_hrep(diamond);
    REQUIRE(P.rows.size() == 4);
    std::set<HRow> rows(P.rows.begin(), P.rows.end());
    for (int a : {1, -1})
        for (int b : {1, -1})
            CHECK(rows.count(canonical_row({RatVec{Rational(a), Rational(b)}, Rational(1)})));
}

TEST_CASE("rounded octagon has facets tight at exactly two vertices") {
    Rational U(1, 1024);
    auto pts = sphere_points(4, 2, U);
    auto P = polygon_hrep(pts);
    CHECK(P.rows.size() == 8);
    for (const auto& r : P.rows) {
        std::size_t tight = 0;
        for (const auto& v : pts) {
            CHECK(dot(r.normal, v) <= r.rhs);
            if (dot(r.normal, v) == r.rhs) ++tight;
        }
        CHECK(tight == 2);
    }
}

TEST_CASE("collinear points are not a convex polygon") {
    std::vector<RatVec> bad = {{Rational(1), Rational(0)},
                               {Rational(0), Rational(1)},
                               {Rational(-1), Rational(2)},
                               {Rational(-1), Rational(0)}};
    CHECK_THROWS_AS(polygon_hrep(bad), NotInConvexPosition);
}

TEST_CASE("grid constant for the smallest instance") {
    auto inst = build_gadget(empty_graph(4), 2, 2);
    CHECK(inst.U == Rational(1, 1024));  // 1/(4^4 * 2^2)
    CHECK(inst.n_padded == 4);
    CHECK(inst.polytope.dim == 4);
    CHECK(inst.yes_threshold == Rational(2) * pow_int(Rational(1023, 1024), 2));
    CHECK(inst.no_threshold ==
          pow_int(Rational(1025, 1024), 2) + 1 - Rational(1, 64));
}

TEST_CASE("thresholds leave a strict gap and eps stays positive") {
    for (std::size_t k : {2, 3})
        for (int p : {2, 3}) {
            auto inst = build_gadget(empty_graph(5), k, p);
            CHECK(inst.no_threshold < inst.yes_threshold);
            CHECK(inst.eps_bar > 0);
            CHECK(inst.n_padded % 2 == 0);
            CHECK(inst.vertices_bar.size() == 2 * inst.n_padded);
            CHECK(inst.normals_bar.size() == 2 * inst.n_padded);
        }
}

TEST_CASE("gadget rows are closed under negation") {
    auto inst = build_gadget(triangle(), 2, 2);
    std::set<HRow> rows;
    for (const auto& r : inst.polytope.rows) rows.insert(canonical_row(r));
    for (const auto& r : rows) CHECK(rows.count({neg(r.normal), r.rhs}));
}

TEST_CASE("oversized clique parameter is rejected") {
    CHECK_THROWS_AS(build_gadget(empty_graph(3), 9, 2), KTooLarge);
}

TEST_CASE("triangle contains a 3-clique, the empty graph does not") {
    CHECK(decide_clique_via_normmax(build_gadget(triangle(), 3, 2)));
    CHECK_FALSE(decide_clique_via_normmax(build_gadget(empty_graph(4), 2, 2)));
    CHECK(decide_clique_via_normmax(build_gadget(complete(4), 2, 2)));
}

TEST_CASE("yes instances reach the threshold through a clique vertex") {
    auto inst = build_gadget(triangle(), 3, 2);
    // the clique tuple itself is feasible and reaches the YES value
    RatVec x;
    for (std::size_t i = 0; i < 3; ++i) {
        x.push_back(inst.vertices_bar[i][0]);
        x.push_back(inst.vertices_bar[i][1]);
    }
    CHECK(inst.polytope.contains(x));
    CHECK(pnorm_pow(x, 2) >= inst.yes_threshold);
}

TEST_CASE("the maximizing witness decomposes into clique blocks") {
    for (std::size_t k : {2, 3}) {
        auto inst = build_gadget(triangle(), k, 2);
        auto r = exact_normmax(inst.polytope, 2);
        REQUIRE(r.value >= inst.yes_threshold);
        std::set<RatVec> rounded(inst.vertices_bar.begin(), inst.vertices_bar.end());
        std::set<std::size_t> picks;
        for (std::size_t i = 0; i < k; ++i) {
            RatVec block{r.witness[2 * i], r.witness[2 * i + 1]};
            CHECK(rounded.count(block));
            picks.insert(nearest_vertex_index(block, inst.normals_bar) % inst.n_padded);
        }
        CHECK(picks.size() == k);  // pairwise distinct graph vertices
        for (auto u : picks) {
            CHECK(u < 3);  // the padded vertex is isolated, never in a clique
            for (auto v : picks)
                if (u != v) CHECK(triangle().adjacent(u, v));
        }
    }
}

TEST_CASE("closest-vertex index with deterministic ties") {
    auto inst = build_gadget(empty_graph(4), 2, 2);
    CHECK(nearest_vertex_index(inst.vertices_bar[0], inst.normals_bar) == 0);
    std::size_t n = inst.n_padded;
    CHECK(nearest_vertex_index(neg(inst.vertices_bar[0]), inst.normals_bar) == n);
    CHECK(nearest_vertex_index(RatVec{Rational(0), Rational(0)}, inst.normals_bar) == 0);
}

TEST_CASE("exhaustive clique search") {
    CHECK(clique_oracle(triangle(), 3));
    Graph path;
    path.n = 3;
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(clique_oracle(path, 3));
    CHECK(clique_oracle(empty_graph(1), 1));
    CHECK(clique_oracle(complete(5), 5));
    CHECK_FALSE(clique_oracle(complete(5), 6));
}

TEST_CASE("construction bounds hold on a mid-size instance") {
    auto rep = verify_gadget_bounds(8, 2);
    CHECK(rep.all_passed());
    // the separation bound from the report matches the direct formula
    Rational lb = Rational(2, 2 * 64) - Rational(6) * rep.U;
    CHECK(rep.eps_bar >= lb);
}

TEST_CASE("construction bounds across sizes and exponents") {
    for (std::size_t n : {4, 6, 12})
        for (int p : {2, 4}) {
            auto rep = verify_gadget_bounds(n, p);
            INFO("n=", n, " p=", p);
            CHECK(rep.all_passed());
        }
}

TEST_CASE("decisions agree with the oracle on all small graphs") {
    // exhaustive on 3 vertices, both parameters
    for (unsigned mask = 0; mask < 8; ++mask) {
        Graph G;
        G.n = 3;
        unsigned bit = 0;
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t v = u + 1; v < 3; ++v, ++bit)
                if ((mask >> bit) & 1) G.add_edge(u, v);
        for (std::size_t k : {2, 3}) {
            bool want = clique_oracle(G, k);
            CHECK(decide_clique_via_normmax(build_gadget(G, k, 2)) == want);
        }
    }
}

TEST_CASE("sidecar serialization carries the instance parameters") {
    auto inst = build_gadget(triangle(), 2, 2);
    auto json = gadget_sidecar_json(inst);
    CHECK(json.find("\"U\": \"1/1024\"") != std::string::npos);
    CHECK(json.find("\"n_padded\": 4") != std::string::npos);
    CHECK(json.find("yes_threshold") != std::string::npos);
}

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include <json.hpp>

#include "picard/checks.hpp"
#include "picard/graph.hpp"

using namespace picard;

namespace {

RealQuadratic rq(long a, long b, long c) { return {Int(a), Int(b), Int(c)}; }

std::set<RealQuadratic> cycle_vertex_set(const AmbiguousGraph& g, const ClosedPath& p) {
    std::set<RealQuadratic> out;
    for (std::size_t v : p.vertices) out.insert(g.vertices()[v]);
    return out;
}

}  // namespace

TEST_CASE("partner pairing") {
    CHECK(partner(rq(0, 1, 1)) == rq(-1, 1, -2));
    CHECK(partner(rq(1, 1, 1)) == rq(1, 1, -2));
    CHECK(partner(partner(rq(0, 1, 1))) == rq(0, 1, 1));
    CHECK_THROWS_AS(partner(rq(5, 1, 1)), NotAmbiguousInput);
}

TEST_CASE("graph construction") {
    AmbiguousGraph g1{Int(1)};
    CHECK(g1.vertices().size() == 12);
    CHECK(g1.edges_with(EdgeLabel::Partner).size() == 6);
    CHECK(g1.edges_with(EdgeLabel::D).size() == 6);
    CHECK(g1.edges_with(EdgeLabel::B).size() == 6);

    // B edge {sqrt(3), sqrt(3)/3}
    std::size_t u = g1.index_of(rq(0, 1, 1));
    std::size_t v = g1.index_of(rq(0, 1, 3));
    bool found = false;
    for (const LabeledEdge& e : g1.edges_with(EdgeLabel::B))
        found = found || (e.from == std::min(u, v) && e.to == std::max(u, v));
    CHECK(found);

    AmbiguousGraph g2{Int(2)};
    CHECK(g2.vertices().size() == 32);
}

TEST_CASE("layer cycles for k = 1") {
    AmbiguousGraph g{Int(1)};
    auto cycles = g.layer_cycles();
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].vertices.size() == 6);
    CHECK(cycles[1].vertices.size() == 6);

    // conjugation exchanges the two cycles
    std::set<RealQuadratic> first = cycle_vertex_set(g, cycles[0]);
    std::set<RealQuadratic> second = cycle_vertex_set(g, cycles[1]);
    std::set<RealQuadratic> conj_first;
    for (const RealQuadratic& q : first) conj_first.insert(q.conj());
    CHECK(conj_first == second);

    // so does B
    std::set<RealQuadratic> b_first;
    for (const RealQuadratic& q : first) b_first.insert(q.act_B());
    CHECK(b_first == second);
}

TEST_CASE("layer cycles for k = 2 have length 16") {
    AmbiguousGraph g{Int(2)};
    auto cycles = g.layer_cycles();
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].vertices.size() == 16);
    CHECK(cycles[1].vertices.size() == 16);
}

TEST_CASE("layer cycles for k = 3 have length 30") {
    AmbiguousGraph g{Int(3)};
    CHECK(g.vertices().size() == 60);
    auto cycles = g.layer_cycles();
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].vertices.size() == 30);
    CHECK(cycles[1].vertices.size() == 30);
}

TEST_CASE("structure suite holds for k <= 3") {
    for (long k : {1L, 2L, 3L}) {
        SuiteResult s = suite_theorem1(AmbiguousGraph{Int(k)});
        CAPTURE(k);
        CAPTURE(s.witness);
        CHECK(s.ok);
    }
}

TEST_CASE("k = 4 enumeration spans two closed paths") {
    // The Theorem-3 + Prop-5 procedure yields 80 triples at k = 4, but
    // they split into two separate closed paths: the one through 4√3
    // (52 vertices) and the one through 4√3/3 (28 vertices, all coprime
    // triples, so no reduction-based filter can touch them).
    AmbiguousGraph g{Int(4)};
    CHECK(g.vertices().size() == 80);
    // the three label-classes are still perfect matchings on the union
    for (EdgeLabel l : {EdgeLabel::Partner, EdgeLabel::D, EdgeLabel::B})
        CHECK(g.edges_with(l).size() == 40);
    CHECK(!g.connected());

    auto main_path = bfs_orbit_ambiguous(rq(0, 4, 1), 10000);
    auto side_path = bfs_orbit_ambiguous(rq(0, 4, 3), 10000);
    CHECK(main_path.size() == 52);
    CHECK(side_path.size() == 28);
    std::set<RealQuadratic> all(main_path.begin(), main_path.end());
    all.insert(side_path.begin(), side_path.end());
    CHECK(all.size() == 80);
    CHECK(std::vector<RealQuadratic>(all.begin(), all.end()) == g.vertices());

    // each component carries its own pair of conjugate cycles
    auto cycles = g.layer_cycles();
    REQUIRE(cycles.size() == 4);
    std::multiset<std::size_t> lengths;
    for (const ClosedPath& p : cycles) lengths.insert(p.vertices.size());
    CHECK(lengths == std::multiset<std::size_t>{14, 14, 26, 26});
}

TEST_CASE("BFS orbit equals enumeration for k <= 3") {
    CHECK(bfs_orbit_ambiguous(rq(0, 2, 1), 10000) == enumerate_ambiguous(2).members);
    CHECK(bfs_orbit_ambiguous(rq(0, 1, 1), 10000) == enumerate_ambiguous(1).members);
    // start-independence for k = 3
    auto members3 = enumerate_ambiguous(3).members;
    for (const RealQuadratic& start : members3)
        CHECK(bfs_orbit_ambiguous(start, 10000) == members3);
    CHECK_THROWS_AS(bfs_orbit_ambiguous(rq(0, 2, 1), 5), LimitExceeded);
    CHECK_THROWS_AS(bfs_orbit_ambiguous(rq(5, 1, 1), 100), NotAmbiguousInput);
}

TEST_CASE("every edge is reproducible through the general Moebius action") {
    for (long k : {1L, 2L}) {
        AmbiguousGraph g{Int(k)};
        CHECK(suite_oracle_equivalence(g.vertices()).ok);
        for (const LabeledEdge& e : g.edges()) {
            const RealQuadratic& from = g.vertices()[e.from];
            const RealQuadratic& to = g.vertices()[e.to];
            MobiusMap m = e.label == EdgeLabel::B   ? generator(Generator::B)
                          : e.label == EdgeLabel::D ? generator(Generator::D)
                          : e.via_c2 ? generator(Generator::C) * generator(Generator::C)
                                     : generator(Generator::C);
            ProjectivePoint img = m.apply(ProjectivePoint(from.embed()));
            REQUIRE(!img.is_infinity());
            CHECK(img.value() == to.embed());
        }
    }
}

TEST_CASE("DOT export") {
    AmbiguousGraph g{Int(1)};
    std::string dot = g.export_dot();
    CHECK(dot.find("graph ambiguous_k1 {") == 0);
    CHECK(std::count(dot.begin(), dot.end(), ';') == 12 + 18);
    CHECK(dot.find("0_1_1 [label=\"√3\"]") != std::string::npos);
    CHECK(dot.find("style=bold") != std::string::npos);
    // bold B edges only
    std::size_t bolds = 0, pos = 0;
    while ((pos = dot.find("style=bold", pos)) != std::string::npos) {
        ++bolds;
        ++pos;
    }
    CHECK(bolds == 6);
    // byte-determinism
    CHECK(dot == AmbiguousGraph{Int(1)}.export_dot());
}

TEST_CASE("JSON export round-trips") {
    AmbiguousGraph g{Int(2)};
    auto j = nlohmann::json::parse(g.export_json());
    CHECK(j["k"] == 2);
    CHECK(j["vertices"].size() == 32);
    for (const auto& e : j["edges"]) {
        CHECK(e["from"].get<std::size_t>() < 32);
        CHECK(e["to"].get<std::size_t>() < 32);
        std::string label = e["label"];
        CHECK((label == "C" || label == "D" || label == "B"));
        if (label == "C") CHECK((e["via"] == "C" || e["via"] == "C2"));
    }
    CHECK(j["cycles"].size() == 2);

    // reconstruct and compare
    std::set<std::tuple<std::size_t, std::size_t, std::string>> parsed;
    for (const auto& e : j["edges"])
        parsed.insert({e["from"].get<std::size_t>(), e["to"].get<std::size_t>(),
                       e["label"].get<std::string>()});
    CHECK(parsed.size() == g.edges().size());
    for (const LabeledEdge& e : g.edges())
        CHECK(parsed.count({e.from, e.to, edge_label_name(e.label)}) == 1);

    std::size_t idx = 0;
    for (const auto& v : j["vertices"]) {
        const RealQuadratic& q = g.vertices()[idx++];
        CHECK(Int(v["a"].get<long long>()) == q.a());
        CHECK(Int(v["b"].get<long long>()) == q.b());
        CHECK(Int(v["c"].get<long long>()) == q.c());
    }
}

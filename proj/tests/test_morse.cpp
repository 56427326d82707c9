#include "bsassign/morse.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace bsassign;
using bsassign::testing::var;

namespace {

Polynomial a1() { return var(2, 1); }
Polynomial a2() { return var(2, 2); }

Polarization ones(int r) { return Polarization{std::vector<Rational>(r, Rational(1))}; }

std::shared_ptr<const BSGraph> graph(const char* type, std::vector<int> letters) {
    return BSGraph::build_shared(LieType::parse(type), Word{std::move(letters)});
}

std::set<VertexMask> as_set(const std::vector<VertexMask>& v) { return {v.begin(), v.end()}; }

// The eleven generator rows of the worked A2 [2,1,2] example, in vertex
// order 000,200,010,210,002,202,012,212.
std::vector<std::pair<std::string, std::vector<Polynomial>>> printed_generator_table() {
    Polynomial z(2), one = Polynomial::constant(2, 1);
    Polynomial s = a1() + a2();
    return {
        {"eta1_000", {one, one, one, one, one, one, one, one}},
        {"eta1_200", {z, a2(), z, s, z, -a2(), z, a1()}},
        {"eta1_010", {z, z, a1(), a1(), z, z, s, s}},
        {"eta1_210", {z, z, z, a1() * s, z, z, z, a1() * s}},
        {"eta1_002", {z, z, z, z, a2() * a2(), z, a2() * a2(), a2() * s}},
        {"eta2_002", {z, z, z, z, -(a1() * a2()), z, -(a1() * a2()), z}},
        {"eta1_202", {z, z, z, z, a2(), a2(), a2(), a2()}},
        {"eta2_202", {z, z, z, z, z, -(a2() * a2()), z, a1() * a2()}},
        {"eta3_202", {z, z, z, z, z, a1() * a2(), z, a1() * a2()}},
        {"eta1_012", {z, z, z, z, z, z, a2() * s, a2() * s}},
        {"eta1_212", {z, z, z, z, z, z, z, a1() * a2() * s}},
    };
}

bool equal_up_to_sign(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        plus = plus && a[i] == b[i];
        minus = minus && a[i] == -b[i];
    }
    return plus || minus;
}

}  // namespace

TEST_CASE("orient: BS^[2,1] in the positive chamber") {
    auto g = graph("A2", {2, 1});
    OrientedGraph og = OrientedGraph::orient(g, ones(2));
    // Ascending arrows 00->01, 00->20, 01->21, 20->21.
    CHECK(og.ascending(0, 1));
    CHECK(og.ascending(0, 2));
    CHECK(og.ascending(2, 1));
    CHECK(og.ascending(1, 2));
    CHECK_FALSE(og.ascending(3, 1));
    CHECK_FALSE(og.ascending(3, 2));
    CHECK(og.topological_order().front() == 0);
    CHECK(og.topological_order().back() == 3);
}

TEST_CASE("orient: single edge and reversed polarization") {
    auto g = graph("A2", {1});
    OrientedGraph og = OrientedGraph::orient(g, ones(2));
    CHECK(og.ascending(0, 1));
    Polarization neg{{Rational(-1), Rational(-1)}};
    OrientedGraph rev = OrientedGraph::orient(g, neg);
    CHECK_FALSE(rev.ascending(0, 1));
    CHECK(rev.ascending(1, 1));

    auto g21 = graph("A2", {2, 1});
    OrientedGraph back = OrientedGraph::orient(g21, neg);
    CHECK(back.topological_order().front() == 3);
}

TEST_CASE("orient rejects non-polarizing covectors") {
    auto g = graph("A2", {2, 1});
    CHECK_THROWS_AS(OrientedGraph::orient(g, Polarization{{Rational(1), Rational(-1)}}), NotPolarizing);
    CHECK_THROWS_AS(OrientedGraph::orient(g, Polarization{{Rational(0), Rational(1)}}), NotPolarizing);
}

TEST_CASE("acyclicity for 50 random polarizing covectors per graph") {
    std::mt19937 rng(51);
    for (auto [type, letters] : std::vector<std::pair<const char*, std::vector<int>>>{
             {"A2", {2, 1, 2}}, {"B2", {1, 2, 1}}, {"G2", {1, 2}}, {"A3", {1, 2, 3, 1}}}) {
        auto g = graph(type, letters);
        int accepted = 0;
        while (accepted < 50) {
            Polarization xi;
            for (int i = 0; i < g->lie_type().rank; ++i)
                xi.values.push_back(bsassign::testing::random_rational(rng));
            if (!is_polarizing(xi, g->label_set()))
                continue;
            ++accepted;
            CHECK_NOTHROW(OrientedGraph::orient(g, xi));  // topological sort succeeds
        }
    }
}

TEST_CASE("flow_up examples") {
    auto g = graph("A2", {2, 1});
    OrientedGraph og = OrientedGraph::orient(g, ones(2));
    CHECK(as_set(flow_up(og, 0)) == std::set<VertexMask>{0, 1, 2, 3});
    CHECK(as_set(flow_up(og, 2)) == std::set<VertexMask>{2, 3});  // 01 -> {01, 21}
    CHECK(as_set(flow_up(og, 3)) == std::set<VertexMask>{3});

    auto g212 = graph("A2", {2, 1, 2});
    OrientedGraph og212 = OrientedGraph::orient(g212, ones(2));
    CHECK(as_set(flow_up(og212, 0)) == std::set<VertexMask>{0, 1, 2, 3, 4, 5, 6, 7});
    // 202 descends to 002 along a2, then ascends: F_202 = {202, 002, 012, 212}.
    CHECK(as_set(flow_up(og212, 5)) == std::set<VertexMask>{4, 5, 6, 7});
    CHECK(as_set(flow_up(og212, 4)) == std::set<VertexMask>{4, 6, 7});
    CHECK(as_set(flow_up(og212, 1)) == std::set<VertexMask>{1, 3, 4, 5, 6, 7});
}

TEST_CASE("dual polarization: flow-up under xi equals flow-down under -xi") {
    std::mt19937 rng(52);
    auto g = graph("A2", {2, 1, 2});
    int accepted = 0;
    while (accepted < 10) {
        Polarization xi;
        for (int i = 0; i < 2; ++i)
            xi.values.push_back(bsassign::testing::random_rational(rng));
        if (!is_polarizing(xi, g->label_set()))
            continue;
        ++accepted;
        Polarization neg{{-xi.values[0], -xi.values[1]}};
        OrientedGraph up = OrientedGraph::orient(g, xi);
        OrientedGraph down = OrientedGraph::orient(g, neg);
        for (VertexMask p = 0; p < g->vertex_count(); ++p) {
            std::set<VertexMask> flow_down;  // of p under -xi
            for (VertexMask q = 0; q < g->vertex_count(); ++q)
                if (as_set(flow_up(down, q)).count(p))
                    flow_down.insert(q);
            CHECK(as_set(flow_up(up, p)) == flow_down);
        }
    }
}

TEST_CASE("flowup_generators at the minimum vertex are the basis columns") {
    BasisMatrix a = assignment_basis(LieType::parse("A2"), Word{{2, 1, 2}});
    OrientedGraph og = OrientedGraph::orient(a.graph, ones(2));
    FlowupGenerators gens = flowup_generators(a, og, 0);
    REQUIRE(gens.assignments.size() == 8);
    for (VertexMask j = 0; j < 8; ++j)
        CHECK(gens.assignments[j].values() == a.column(j).values());
}

TEST_CASE("flowup_generators at 002 and 212 match the worked example") {
    BasisMatrix a = assignment_basis(LieType::parse("A2"), Word{{2, 1, 2}});
    OrientedGraph og = OrientedGraph::orient(a.graph, ones(2));
    auto table = printed_generator_table();

    FlowupGenerators at002 = flowup_generators(a, og, 4);
    std::vector<std::vector<Polynomial>> nonzero_at_p;
    for (const Assignment& eta : at002.assignments) {
        CHECK(is_assignment(*a.graph, eta.values()));
        for (VertexMask v : {0, 1, 2, 3, 5})
            CHECK(eta.value(v).is_zero());  // supported on F_002 = {002, 012, 212}... and 202? no.
        if (!eta.value(4).is_zero())
            nonzero_at_p.push_back(eta.values());
    }
    REQUIRE(nonzero_at_p.size() == 2);
    CHECK(equal_up_to_sign(nonzero_at_p[0], table[4].second));  // eta1_002
    CHECK(equal_up_to_sign(nonzero_at_p[1], table[5].second));  // eta2_002

    FlowupGenerators at212 = flowup_generators(a, og, 7);
    REQUIRE(at212.assignments.size() == 1);
    CHECK(equal_up_to_sign(at212.assignments[0].values(), table[10].second));
}

TEST_CASE("generating ideals of the worked example") {
    MorseGeneratorSet set = morse_generators(LieType::parse("A2"), Word{{2, 1, 2}}, ones(2));
    const auto& pv = set.per_vertex;
    REQUIRE(pv.size() == 8);
    CHECK(pv[0].ideal_minimal == std::vector<Polynomial>{Polynomial::constant(2, 1)});
    CHECK(pv[1].ideal_minimal == std::vector<Polynomial>{a2()});
    CHECK(pv[2].ideal_minimal == std::vector<Polynomial>{a1()});
    CHECK(pv[3].ideal_minimal == std::vector<Polynomial>{a1() * (a1() + a2())});
    CHECK(pv[4].ideal_minimal == std::vector<Polynomial>{a1() * a2(), a2() * a2()});
    CHECK(pv[5].ideal_minimal == std::vector<Polynomial>{a2()});
    CHECK(pv[6].ideal_minimal == std::vector<Polynomial>{a2() * (a1() + a2())});
    CHECK(pv[7].ideal_minimal == std::vector<Polynomial>{a1() * a2() * (a1() + a2())});
    for (std::size_t v = 0; v < 8; ++v)
        CHECK(pv[v].principal == (v != 4));
}

TEST_CASE("the eleven-row generator table is reproduced up to sign") {
    MorseGeneratorSet set = morse_generators(LieType::parse("A2"), Word{{2, 1, 2}}, ones(2));
    auto table = printed_generator_table();
    std::vector<std::vector<Polynomial>> computed;
    for (const auto& report : set.per_vertex)
        for (const Assignment& eta : report.generators)
            computed.push_back(eta.values());
    REQUIRE(computed.size() == 11);
    for (const auto& [name, row] : table) {
        int matches = 0;
        for (const auto& values : computed)
            if (equal_up_to_sign(values, row))
                ++matches;
        INFO("row ", name);
        CHECK(matches == 1);
    }
}

TEST_CASE("minimalization eliminates exactly eta2_202, eta3_202, eta1_212") {
    MorseGeneratorSet set = morse_generators(LieType::parse("A2"), Word{{2, 1, 2}}, ones(2));
    std::set<std::pair<VertexMask, std::size_t>> surviving;
    for (const GeneratorRef& ref : set.minimal)
        surviving.insert({ref.vertex, ref.index});
    CHECK(surviving == std::set<std::pair<VertexMask, std::size_t>>{
                           {0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {4, 1}, {5, 0}, {6, 0}});
    // Eliminated: generators 2 and 3 at 202 (vertex 5) and the one at 212.
    CHECK(set.per_vertex[5].generators.size() == 3);
    CHECK(set.per_vertex[7].generators.size() == 1);
    CHECK_FALSE(surviving.count({5, 1}));
    CHECK_FALSE(surviving.count({5, 2}));
    CHECK_FALSE(surviving.count({7, 0}));
}

TEST_CASE("printed dependency relations hold and are certified by cofactors") {
    auto table = printed_generator_table();
    auto row = [&](const char* name) -> const std::vector<Polynomial>& {
        for (const auto& [n, values] : table)
            if (n == std::string(name))
                return values;
        FAIL("row not found");
        return table[0].second;
    };
    auto scale_add = [](const std::vector<Polynomial>& u, const Polynomial& c,
                        const std::vector<Polynomial>& v) {
        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < u.size(); ++i)
            out.push_back(u[i] + c * v[i]);
        return out;
    };
    const std::vector<Polynomial> zero(8, Polynomial(2));
    // eta2_202 = eta1_002 - a2 eta1_202
    CHECK(row("eta2_202") == scale_add(row("eta1_002"), -a2(), row("eta1_202")));
    // eta3_202 = eta2_002 + a1 eta1_202
    CHECK(row("eta3_202") == scale_add(row("eta2_002"), a1(), row("eta1_202")));
    // eta1_212 = a1 eta1_002 + a2 eta2_002
    CHECK(row("eta1_212") ==
          scale_add(scale_add(zero, a1(), row("eta1_002")), a2(), row("eta2_002")));

    // Certify each relation through the engine's membership cofactors.
    for (const char* eliminated : {"eta2_202", "eta3_202", "eta1_212"}) {
        std::vector<ModuleElement> gens{row("eta1_002"), row("eta1_202"), row("eta2_002")};
        GroebnerBasis gb = groebner(gens, 8, 2);
        MembershipResult m = membership(row(eliminated), gb);
        REQUIRE(m.member);
        std::vector<Polynomial> recombined(8, Polynomial(2));
        for (std::size_t t = 0; t < gens.size(); ++t)
            for (std::size_t v = 0; v < 8; ++v)
                recombined[v] = recombined[v] + m.cofactors[t] * gens[t][v];
        CHECK(recombined == row(eliminated));
    }
}

TEST_CASE("GKM word [2,1]: one generator per vertex, all ideals principal") {
    MorseGeneratorSet set = morse_generators(LieType::parse("A2"), Word{{2, 1}}, ones(2));
    REQUIRE(set.per_vertex.size() == 4);
    for (const auto& report : set.per_vertex) {
        CHECK(report.generators.size() == 1);
        CHECK(report.principal);
    }
    CHECK(set.minimal.size() == 4);
    CHECK(set.per_vertex[0].ideal_minimal == std::vector<Polynomial>{Polynomial::constant(2, 1)});
    CHECK(set.per_vertex[1].ideal_minimal == std::vector<Polynomial>{a2()});
    CHECK(set.per_vertex[2].ideal_minimal == std::vector<Polynomial>{a1()});
    CHECK(set.per_vertex[3].ideal_minimal == std::vector<Polynomial>{a1() * (a1() + a2())});
}

TEST_CASE("empty word: single vertex, unit ideal") {
    MorseGeneratorSet set = morse_generators(LieType::parse("A2"), Word{{}}, ones(2));
    REQUIRE(set.per_vertex.size() == 1);
    CHECK(set.per_vertex[0].flow_up == std::vector<VertexMask>{0});
    REQUIRE(set.per_vertex[0].generators.size() == 1);
    CHECK(set.per_vertex[0].ideal_minimal == std::vector<Polynomial>{Polynomial::constant(2, 1)});
    CHECK(set.minimal.size() == 1);
}

TEST_CASE("every flowup generator vanishes off its flow-up and is an assignment") {
    for (auto [type, letters] : std::vector<std::pair<const char*, std::vector<int>>>{
             {"A2", {2, 1, 2}}, {"B2", {1, 2}}, {"A2", {1, 1}}}) {
        LieType lt = LieType::parse(type);
        BasisMatrix a = assignment_basis(lt, Word{letters});
        OrientedGraph og = OrientedGraph::orient(a.graph, ones(lt.rank));
        for (VertexMask p = 0; p < a.graph->vertex_count(); ++p) {
            std::vector<VertexMask> up = flow_up(og, p);
            FlowupGenerators gens = flowup_generators(a, og, p);
            for (const Assignment& eta : gens.assignments) {
                CHECK(is_assignment(*a.graph, eta.values()));
                for (VertexMask v = 0; v < a.graph->vertex_count(); ++v)
                    if (!std::binary_search(up.begin(), up.end(), v))
                        CHECK(eta.value(v).is_zero());
            }
            // Syzygy exactness: sum g_J A_J vanishes on the complement rows.
            for (const ModuleElement& syz : gens.syzygy_coefficients) {
                for (VertexMask v = 0; v < a.graph->vertex_count(); ++v) {
                    if (std::binary_search(up.begin(), up.end(), v))
                        continue;
                    Polynomial sum(lt.rank);
                    for (VertexMask j = 0; j < a.graph->vertex_count(); ++j)
                        sum = sum + syz[j] * a.mat.at(v, j);
                    CHECK(sum.is_zero());
                }
            }
        }
    }
}

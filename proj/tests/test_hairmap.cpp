#include "beadweave/contraction.hpp"
#include "beadweave/errors.hpp"
#include "beadweave/hairmap.hpp"

#include <doctest.h>

#include "testutil.hpp"

using namespace beadweave;

TEST_CASE("hair expansion of trivially beaded diagrams is the identity") {
    bwtest::Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        Diagram d = bwtest::random_closed(rng, bwtest::rand_int(rng, 1, 3) * 2);
        DiagramSum s;
        s.add(d, Rational(3, 2));
        if (s.empty()) continue;  // killed by symmetry already
        int base = vassiliev_degree(d);
        CHECK(hair_expand(s, base + bwtest::rand_int(rng, 0, 3)) == s);
    }
}

TEST_CASE("one t-1 bead expands to half the two-hair placement") {
    SUBCASE("beaded circle") {
        DiagramSum s;
        s.add(Diagram::circle(LaurentPoly::t_minus_one()), 1);
        DiagramSum expanded = hair_expand(s, 2);
        DiagramSum expected;
        expected.add(place_hairs(Diagram::circle(), EdgeRef::circle(0), 2), Rational(1, 2));
        CHECK(expanded == expected);
    }
    SUBCASE("beaded theta") {
        Diagram beaded = Diagram::theta();
        beaded.edges[0].bead = LaurentPoly::t_minus_one();
        DiagramSum s;
        s.add(beaded, 1);
        DiagramSum expanded = hair_expand(s, 3);
        DiagramSum expected;
        expected.add(place_hairs(Diagram::theta(), EdgeRef::edge(0), 2), Rational(1, 2));
        CHECK(expanded == expected);
        // the single-hair term died; nothing of degree <= 2 survives
        for (const auto& [enc, term] : expanded.terms())
            CHECK(vassiliev_degree(term.representative) == 3);
    }
}

TEST_CASE("hair expansion distributes over several beaded loci") {
    // t on one edge and t-1 on another: the t^0 part of exp-substituting t
    // is 1, so the k = 0 branch survives on that edge.
    Diagram d = Diagram::theta();
    d.edges[0].bead = LaurentPoly::t();
    d.edges[1].bead = LaurentPoly::t_minus_one();
    DiagramSum s;
    s.add(d, 1);
    DiagramSum expanded = hair_expand(s, 3);
    // surviving branches: two hairs on the t-1 edge (coefficient 1/2) and
    // one hair on each beaded edge (coefficient 1); single hairs die.
    for (const auto& [enc, term] : expanded.terms()) {
        CHECK(vassiliev_degree(term.representative) == 3);
        CHECK(term.representative.univalent == 2);
        CHECK(term.representative.all_beads_one());
    }
    // exact content against placements on the plain theta (the expansion
    // consumes every bead): (1/2) * two hairs on edge 1, plus 1 * one on each
    Diagram plain = Diagram::theta();
    DiagramSum expected;
    expected.add(place_hairs(place_hairs(plain, EdgeRef::edge(1), 1), EdgeRef::edge(0), 1),
                 Rational(1));
    expected.add(place_hairs(plain, EdgeRef::edge(1), 2), Rational(1, 2));
    CHECK(expanded == expected);
}

TEST_CASE("hair expansion truncation consistency") {
    bwtest::Rng rng(77);
    for (int i = 0; i < 15; ++i) {
        Diagram d = bwtest::random_closed(rng, 2);
        d.edges[bwtest::rand_int(rng, 0, d.edges.size() - 1)].bead =
            LaurentPoly::t_minus_one();
        DiagramSum s;
        s.add(d, 1);
        if (s.empty()) continue;
        DiagramSum big = hair_expand(s, 5);
        DiagramSum small = hair_expand(s, 3);
        DiagramSum restricted;
        for (const auto& [enc, term] : big.terms())
            if (vassiliev_degree(term.representative) <= 3)
                restricted.add(term.representative, term.coeff);
        CHECK(restricted == small);
    }
}

TEST_CASE("hair expansion does not depend on the term labeling") {
    bwtest::Rng rng(177);
    for (int i = 0; i < 15; ++i) {
        Diagram d = bwtest::random_closed(rng, 2);
        d.edges[bwtest::rand_int(rng, 0, d.edges.size() - 1)].bead =
            LaurentPoly::t_minus_one();
        DiagramSum a;
        a.add(d, 1);
        DiagramSum b;
        b.add(bwtest::shuffled(rng, d), 1);
        CHECK(hair_expand(a, 3) == hair_expand(b, 3));
    }
}

TEST_CASE("no surviving term has a single hair") {
    bwtest::Rng rng(278);
    for (int i = 0; i < 10; ++i) {
        Diagram d = bwtest::random_closed(rng, 2);
        for (auto& e : d.edges)
            e.bead = bwtest::small_bead_pool()[bwtest::rand_int(rng, 0, 5)];
        DiagramSum s;
        s.add(d, 1);
        DiagramSum expanded = hair_expand(s, 3);
        for (const auto& [enc, term] : expanded.terms())
            CHECK(term.representative.univalent != 1);
    }
}

TEST_CASE("leading term of the n=1 pipeline") {
    auto [c, lk] = build_grope_clasper(GropeSpec{1});
    DiagramSum contracted = complete_contraction(c, lk);
    DiagramSum haired = hair_expand(contracted, 2);
    A2hReport report;
    DiagramSum lead = leading_term(haired, 1, &report);
    CHECK(report.pass);
    REQUIRE(lead.size() == 1);
    Diagram expected = place_hairs(Diagram::circle(), EdgeRef::circle(0), 2);
    const auto& [enc, term] = *lead.terms().begin();
    CHECK(enc == canonicalize(expected).encoding);
    CHECK((term.coeff == Rational(1, 2) || term.coeff == Rational(-1, 2)));
}

TEST_CASE("leading term flags wrong shapes") {
    SUBCASE("empty sum stays empty") {
        A2hReport report;
        CHECK(leading_term(DiagramSum(), 3, &report).empty());
        CHECK(report.pass);
    }
    SUBCASE("hairs on different edges are rejected") {
        // hairs on two different edges of the theta: adjacent subdivision
        // vertices do not exist
        Diagram d = place_hairs(place_hairs(Diagram::theta(), EdgeRef::edge(0), 1),
                                EdgeRef::edge(1), 1);
        DiagramSum s;
        s.add(d, 1);
        REQUIRE(s.size() == 1);
        A2hReport report;
        leading_term(s, 2, &report);
        CHECK(!report.pass);
        REQUIRE(!report.violations.empty());
        CHECK(report.violations[0].find("single edge") != std::string::npos);
    }
    SUBCASE("disconnected term is rejected") {
        Diagram d = disjoint_union(place_hairs(Diagram::theta(), EdgeRef::edge(0), 2),
                                   Diagram::circle());
        DiagramSum s;
        s.add(d, 1);
        A2hReport report;
        leading_term(s, 2, &report);
        CHECK(!report.pass);
    }
}

#include "beadweave/diagram.hpp"
#include "beadweave/errors.hpp"

#include <doctest.h>

#include "testutil.hpp"

using namespace beadweave;

TEST_CASE("diagram validation") {
    Diagram theta = Diagram::theta();
    CHECK_NOTHROW(theta.validate());

    Diagram bad = theta;
    bad.edges[2].b.slot = 0;  // slot 0 at vertex 1 double-covered
    CHECK_THROWS_AS(bad.validate(), StructuralError);

    Diagram missing = theta;
    missing.edges.pop_back();
    CHECK_THROWS_AS(missing.validate(), StructuralError);
}

TEST_CASE("degrees") {
    CHECK(euler_degree(Diagram::theta()) == 2);
    CHECK(euler_degree(Diagram::circle()) == 0);
    CHECK(vassiliev_degree(Diagram::theta()) == 1);
    CHECK(vassiliev_degree(Diagram::circle()) == 0);

    Diagram lollipop;
    lollipop.trivalent = 1;
    lollipop.univalent = 1;
    lollipop.edges.push_back({{0, 0}, {0, 1}, LaurentPoly(1)});
    lollipop.edges.push_back({{0, 2}, {1, 0}, LaurentPoly(1)});
    CHECK(euler_degree(lollipop) == 1);
    CHECK(vassiliev_degree(lollipop) == 1);

    // an odd vertex count cannot satisfy the incidence constraints, so the
    // degree guard only ever fires on malformed data
    Diagram odd;
    odd.trivalent = 1;
    odd.univalent = 2;
    CHECK_THROWS_AS(vassiliev_degree(odd), StructuralError);
}

TEST_CASE("attach_hair shapes") {
    SUBCASE("circle becomes the lollipop") {
        Diagram d = attach_hair(Diagram::circle(), EdgeRef::circle(0));
        CHECK(d.trivalent == 1);
        CHECK(d.univalent == 1);
        CHECK(d.circles.empty());
        CHECK(d.edges.size() == 2);
        CHECK_NOTHROW(d.validate());
        CHECK(d.has_tadpole());
    }
    SUBCASE("hairy theta has Vassiliev degree 2") {
        Diagram d = attach_hair(Diagram::theta(), EdgeRef::edge(0));
        CHECK(d.trivalent == 3);
        CHECK(d.univalent == 1);
        CHECK(vassiliev_degree(d) == 2);
        CHECK_NOTHROW(d.validate());
    }
    SUBCASE("two hairs in either order give the same class") {
        Diagram theta = Diagram::theta();
        // First hair on edge 0, second on the resulting in-arc vs out-arc.
        Diagram once = attach_hair(theta, EdgeRef::edge(0));
        Diagram in_then = attach_hair(once, EdgeRef::edge(0));
        Diagram out_then = attach_hair(once, EdgeRef::edge(3));
        CHECK(canonicalize(in_then).encoding == canonicalize(out_then).encoding);
        // independently: brute-force isomorphism agrees
        CHECK(bwtest::brute_iso_signs(in_then, out_then) != 0);
    }
    SUBCASE("a loop edge subdivides into a bigon") {
        Diagram lollipop = attach_hair(Diagram::circle(), EdgeRef::circle(0));
        Diagram more = attach_hair(lollipop, EdgeRef::edge(0));  // the loop arc
        CHECK_NOTHROW(more.validate());
        CHECK(more.trivalent == 2);
        CHECK(more.univalent == 2);
        CHECK(!more.has_tadpole());
    }
    SUBCASE("vassiliev degree increments") {
        bwtest::Rng rng(42);
        for (int i = 0; i < 20; ++i) {
            Diagram d = bwtest::random_closed(rng, 4, true);
            int before = vassiliev_degree(d);
            int edge = bwtest::rand_int(rng, 0, static_cast<int>(d.edges.size()) - 1);
            CHECK(vassiliev_degree(attach_hair(d, EdgeRef::edge(edge))) == before + 1);
        }
    }
}

TEST_CASE("place_hairs matches iterated attachment on an edge") {
    Diagram theta = Diagram::theta();
    Diagram direct = place_hairs(theta, EdgeRef::edge(1), 2);
    Diagram once = attach_hair(theta, EdgeRef::edge(1));
    Diagram iterated = attach_hair(once, EdgeRef::edge(1));
    CHECK_NOTHROW(direct.validate());
    CHECK(canonicalize(direct).encoding == canonicalize(iterated).encoding);
    CHECK(vassiliev_degree(direct) == 3);
}

TEST_CASE("join_hairs") {
    SUBCASE("circle with two hairs closes into the theta") {
        Diagram gen = place_hairs(Diagram::circle(), EdgeRef::circle(0), 2);
        Diagram joined = join_hairs(gen);
        CHECK(canonicalize(joined).encoding == canonicalize(Diagram::theta()).encoding);
    }
    SUBCASE("two hairs on a theta edge give a theta with a 2-gon") {
        Diagram haired = place_hairs(Diagram::theta(), EdgeRef::edge(0), 2);
        Diagram joined = join_hairs(haired);
        CHECK(joined.trivalent == 4);
        CHECK(joined.univalent == 0);
        CHECK_NOTHROW(joined.validate());
        // the inserted 2-gon: two parallel edges between the subdivision vertices
        int parallel_pairs = 0;
        for (size_t i = 0; i < joined.edges.size(); ++i)
            for (size_t j = i + 1; j < joined.edges.size(); ++j) {
                auto va = std::minmax(joined.edges[i].a.vertex, joined.edges[i].b.vertex);
                auto vb = std::minmax(joined.edges[j].a.vertex, joined.edges[j].b.vertex);
                if (va == vb && va.first != va.second) ++parallel_pairs;
            }
        CHECK(parallel_pairs >= 1);
    }
    SUBCASE("a bare strut closes into a circle") {
        Diagram strut;
        strut.univalent = 2;
        strut.edges.push_back({{0, 0}, {1, 0}, LaurentPoly(1)});
        Diagram joined = join_hairs(strut);
        CHECK(joined.vertex_count() == 0);
        CHECK(joined.circles.size() == 1);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(join_hairs(Diagram::theta()), PreconditionError);
        Diagram beaded = place_hairs(Diagram::circle(), EdgeRef::circle(0), 2);
        beaded.edges[0].bead = LaurentPoly::t_minus_one();
        CHECK_THROWS_AS(join_hairs(beaded), PreconditionError);
    }
    SUBCASE("hairs meeting at one vertex close into a tadpole") {
        // both hairs hang off v0: joining them creates a loop there and the
        // class dies
        Diagram d;
        d.trivalent = 4;
        d.univalent = 2;
        d.edges.push_back({{0, 0}, {1, 0}, LaurentPoly(1)});  // stem to the body
        d.edges.push_back({{1, 1}, {2, 0}, LaurentPoly(1)});
        d.edges.push_back({{1, 2}, {3, 0}, LaurentPoly(1)});
        d.edges.push_back({{2, 1}, {3, 1}, LaurentPoly(1)});
        d.edges.push_back({{2, 2}, {3, 2}, LaurentPoly(1)});
        d.edges.push_back({{0, 1}, {4, 0}, LaurentPoly(1)});  // hair
        d.edges.push_back({{0, 2}, {5, 0}, LaurentPoly(1)});  // hair
        d.validate();
        CHECK(!d.has_tadpole());
        Diagram joined = join_hairs(d);
        CHECK(joined.has_tadpole());
        CHECK(canonicalize(joined).sign == 0);
    }
    SUBCASE("joining commutes with a disjoint circle") {
        bwtest::Rng rng(313);
        for (int i = 0; i < 20; ++i) {
            Diagram d = bwtest::random_closed(rng, bwtest::rand_int(rng, 1, 3) * 2, true);
            int e = bwtest::rand_int(rng, 0, static_cast<int>(d.edges.size()) - 1);
            Diagram lhs = disjoint_union(join_hairs(place_hairs(d, EdgeRef::edge(e), 2)),
                                         Diagram::circle());
            Diagram rhs = join_hairs(
                place_hairs(disjoint_union(d, Diagram::circle()), EdgeRef::edge(e), 2));
            CHECK(canonicalize(lhs).encoding == canonicalize(rhs).encoding);
            CHECK(canonicalize(lhs).sign == canonicalize(rhs).sign);
        }
    }
}

TEST_CASE("disjoint_union") {
    Diagram empty;
    Diagram theta = Diagram::theta();
    CHECK(canonicalize(disjoint_union(theta, empty)).encoding ==
          canonicalize(theta).encoding);

    Diagram two_circles = disjoint_union(Diagram::circle(), Diagram::circle());
    CHECK(two_circles.circles.size() == 2);
    CHECK(euler_degree(two_circles) == 0);

    Diagram mix = disjoint_union(theta, Diagram::circle());
    CHECK(mix.edges.size() == 3);
    CHECK(mix.circles.size() == 1);
    CHECK(!is_connected(mix));
    CHECK(is_connected(theta));
    CHECK(is_connected(Diagram::circle()));
}

TEST_CASE("diagram text format round-trips") {
    bwtest::Rng rng(2026);
    for (int i = 0; i < 50; ++i) {
        Diagram d = bwtest::random_diagram(rng, 4, 2, true, bwtest::small_bead_pool(), 2);
        std::string text = print_diagram(d);
        Diagram back = parse_diagram(text);
        CHECK(print_diagram(back) == text);
        CHECK(canonicalize(back).encoding == canonicalize(d).encoding);
    }

    const char* with_comments =
        "# a theta\n"
        "vertices: T 2 U 0\n"
        "edge 0: 0.0 -- 1.0 bead 1\n"
        "edge 1: 0.1 -- 1.2 bead 1  # middle\n"
        "edge 2: 0.2 -- 1.1 bead 1\n";
    CHECK(canonicalize(parse_diagram(with_comments)).encoding ==
          canonicalize(Diagram::theta()).encoding);

    CHECK_THROWS_AS(parse_diagram(""), ParseError);
    CHECK_THROWS_AS(parse_diagram("vertices: T 1 U 1\nedge 0: 0.0 -- 1.0 bead 1\n"),
                    StructuralError);  // incomplete incidence
    CHECK_THROWS_AS(parse_diagram("vertices: T 0 U 2\nedge 5: 0.0 -- 1.0 bead 1\n"),
                    ParseError);  // bad edge id
}

TEST_CASE("diagram sums") {
    Diagram theta = Diagram::theta();
    SUBCASE("AS cancellation") {
        DiagramSum s;
        s.add(theta, 1);
        s.add(bwtest::as_flipped(theta, 0), 1);
        CHECK(s.empty());
    }
    SUBCASE("single-hair terms die") {
        DiagramSum s;
        s.add(attach_hair(theta, EdgeRef::edge(0)), 1);
        CHECK(s.empty());
    }
    SUBCASE("coefficients merge") {
        bwtest::Rng rng(5);
        DiagramSum s;
        s.add(theta, Rational(1, 2));
        s.add(bwtest::shuffled(rng, theta), Rational(1, 2));
        CHECK(s.size() == 1);
        CHECK(s.terms().begin()->second.coeff == 1);
    }
    SUBCASE("simplify is idempotent") {
        bwtest::Rng rng(11);
        DiagramSum s;
        for (int i = 0; i < 10; ++i)
            s.add(bwtest::random_diagram(rng, 2, 2, true, bwtest::small_bead_pool(), 1),
                  Rational(bwtest::rand_int(rng, -3, 3), bwtest::rand_int(rng, 1, 4)));
        DiagramSum once = simplify(s);
        CHECK(once == s);
        CHECK(simplify(once) == once);
    }
    SUBCASE("sum text round-trip") {
        DiagramSum s;
        s.add(theta, Rational(-1, 2));
        s.add(Diagram::circle(LaurentPoly::t_minus_one()), 3);
        std::string text = print_sum(s);
        DiagramSum back = parse_sum(text);
        CHECK(back == s);
        CHECK(print_sum(back) == text);
    }
}

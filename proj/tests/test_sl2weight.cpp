#include "beadweave/contraction.hpp"
#include "beadweave/errors.hpp"
#include "beadweave/sl2weight.hpp"

#include <doctest.h>

#include "testutil.hpp"

using namespace beadweave;

TEST_CASE("sl2 base values") {
    Sl2Cache cache;
    CHECK(sl2_eval(Diagram::circle(), cache) == 3);
    CHECK(sl2_eval(disjoint_union(Diagram::circle(), Diagram::circle()), cache) == 9);
    CHECK(sl2_eval(Diagram::theta(), cache) == 6);
    CHECK(sl2_eval(ellipse_closed(3), cache) == 12);  // two parallel interior edges
    Diagram empty;
    CHECK(sl2_eval(empty, cache) == 1);
}

TEST_CASE("sl2 preconditions") {
    Sl2Cache cache;
    Diagram hairy = attach_hair(Diagram::theta(), EdgeRef::edge(0));
    CHECK_THROWS_AS(sl2_eval(hairy, cache), PreconditionError);
    Diagram beaded = Diagram::circle(LaurentPoly::t_minus_one());
    CHECK_THROWS_AS(sl2_eval(beaded, cache), PreconditionError);
}

TEST_CASE("tadpoles evaluate to zero, also through resolution") {
    // dumbbell: two looped vertices joined by a bar
    Diagram dumbbell;
    dumbbell.trivalent = 2;
    dumbbell.edges.push_back({{0, 0}, {0, 1}, LaurentPoly(1)});
    dumbbell.edges.push_back({{1, 0}, {1, 1}, LaurentPoly(1)});
    dumbbell.edges.push_back({{0, 2}, {1, 2}, LaurentPoly(1)});
    Sl2Cache cache;
    CHECK(sl2_eval(dumbbell, cache) == 0);
    // forcing the resolution of the bar: parallel and crossed agree
    CHECK(sl2_eval_resolving_first(dumbbell, 2, cache) == 0);
    CHECK_THROWS_AS(sl2_eval_resolving_first(dumbbell, 0, cache), PreconditionError);
}

TEST_CASE("sl2 matches the memo-free oracle") {
    bwtest::Rng rng(606);
    for (int i = 0; i < 60; ++i) {
        Diagram d = bwtest::random_closed(rng, bwtest::rand_int(rng, 1, 3) * 2,
                                          bwtest::rand_int(rng, 0, 3) == 0);
        Sl2Cache cache;
        CHECK(sl2_eval(d, cache) == bwtest::sl2_raw(d));
    }
}

TEST_CASE("AS invariance") {
    bwtest::Rng rng(707);
    for (int i = 0; i < 100; ++i) {
        int tri = bwtest::rand_int(rng, 1, 3) * 2;
        Diagram d = bwtest::random_closed(rng, tri);
        Diagram flipped = bwtest::as_flipped(d, bwtest::rand_int(rng, 0, tri - 1));
        Sl2Cache cache;
        CHECK(sl2_eval(flipped, cache) == -sl2_eval(d, cache));
    }
}

TEST_CASE("IHX alternating sums vanish") {
    bwtest::Rng rng(808);
    int done = 0;
    while (done < 100) {
        Diagram d = bwtest::random_closed(rng, bwtest::rand_int(rng, 2, 3) * 2);
        std::vector<int> internal;
        for (size_t i = 0; i < d.edges.size(); ++i)
            if (d.edges[i].a.vertex != d.edges[i].b.vertex)
                internal.push_back(static_cast<int>(i));
        if (internal.empty()) continue;
        bwtest::IhxTriple t =
            bwtest::ihx_triple(d, internal[bwtest::rand_int(rng, 0, internal.size() - 1)]);
        Sl2Cache cache;
        Int total = sl2_eval(t.i, cache) - sl2_eval(t.h, cache) + sl2_eval(t.x, cache);
        CHECK(total == 0);
        ++done;
    }
}

TEST_CASE("loop multiplicativity") {
    bwtest::Rng rng(909);
    for (int i = 0; i < 50; ++i) {
        Diagram d = bwtest::random_closed(rng, bwtest::rand_int(rng, 1, 3) * 2,
                                          bwtest::rand_int(rng, 0, 4) == 0);
        Sl2Cache cache;
        CHECK(sl2_eval(disjoint_union(d, Diagram::circle()), cache) ==
              3 * sl2_eval(d, cache));
    }
}

TEST_CASE("first resolved edge does not matter") {
    bwtest::Rng rng(1010);
    for (int i = 0; i < 25; ++i) {
        Diagram d = bwtest::random_closed(rng, bwtest::rand_int(rng, 1, 3) * 2);
        Sl2Cache cache;
        Int reference = sl2_eval(d, cache);
        for (size_t e = 0; e < d.edges.size(); ++e) {
            if (d.edges[e].a.vertex == d.edges[e].b.vertex) continue;
            Sl2Cache fresh;
            CHECK(sl2_eval_resolving_first(d, static_cast<int>(e), fresh) == reference);
        }
    }
}

TEST_CASE("joined generator family evaluates to +-3*2^n") {
    Sl2Cache cache;
    Int expected = 3;
    for (int n = 1; n <= 6; ++n) {
        expected *= 2;
        Diagram joined = join_hairs(grope_generator(n));
        CHECK(canonicalize(joined).encoding == canonicalize(ellipse_closed(n + 1)).encoding);
        Int value = sl2_eval(joined, cache);
        CHECK(value == expected);  // the sign convention makes these positive
    }
}

TEST_CASE("configurable loop value") {
    Sl2Cache cache5;
    CHECK(sl2_eval(Diagram::theta(), cache5, 5) == 20);  // N^2 - N at N... dim-5 loop
}

TEST_CASE("linear extension over sums") {
    Sl2Cache cache;
    SUBCASE("half a theta") {
        DiagramSum s;
        s.add(Diagram::theta(), Rational(1, 2));
        CHECK(sl2_eval_sum(s, cache) == 3);
    }
    SUBCASE("empty sum") {
        CHECK(sl2_eval_sum(DiagramSum(), cache) == 0);
    }
    SUBCASE("difference cancels") {
        DiagramSum s;
        s.add(Diagram::theta(), 1);
        s.add(Diagram::theta(), -1);
        CHECK(sl2_eval_sum(s, cache) == 0);
    }
    SUBCASE("errors propagate") {
        DiagramSum s;
        s.add(place_hairs(Diagram::theta(), EdgeRef::edge(0), 2), 1);
        CHECK_THROWS_AS(sl2_eval_sum(s, cache), PreconditionError);
    }
}

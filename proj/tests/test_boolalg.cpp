#include "doctest.h"
#include "twistset/boolalg.hpp"

#include <stdexcept>

using namespace twistset;

TEST_CASE("powerset algebra construction and bounds") {
    CHECK_THROWS_AS(make_powerset_algebra(0), std::out_of_range);
    CHECK_THROWS_AS(make_powerset_algebra(17), std::out_of_range);
    CHECK_THROWS_AS(make_powerset_algebra(-3), std::out_of_range);

    BoolAlg a1 = make_powerset_algebra(1);
    CHECK(a1.size() == 2);
    CHECK(a1.full_mask() == 0x1u);

    BoolAlg a16 = make_powerset_algebra(16);
    CHECK(a16.size() == 65536);
    CHECK(a16.full_mask() == 0xFFFFu);

    CHECK(ba_elements(make_powerset_algebra(3)).size() == 8);
}

TEST_CASE("atomic operations on 2^2, frozen values") {
    BoolAlg a = make_powerset_algebra(2);
    BAElem p = ba_atom(a, 0);  // {p} = 0b01
    BAElem q = ba_atom(a, 1);  // {q} = 0b10

    CHECK(p.mask == 0x1u);
    CHECK(q.mask == 0x2u);
    CHECK(ba_meet(p, q).mask == 0x0u);
    CHECK(ba_join(p, q).mask == 0x3u);
    CHECK(ba_compl(p).mask == 0x2u);
    // material implication between disjoint atoms: ~{p} | {q} = {q}
    CHECK(ba_imp(p, q) == q);
    CHECK(ba_imp(q, p) == p);
    CHECK(ba_imp(p, p) == ba_top(a));
    CHECK(ba_leq(ba_bottom(a), p));
    CHECK(ba_leq(p, ba_top(a)));
    CHECK_FALSE(ba_leq(p, q));

    CHECK_THROWS_AS(ba_atom(a, 2), std::out_of_range);
    CHECK_THROWS_AS(ba_make(a, 0x4u), std::out_of_range);
}

TEST_CASE("boolean laws hold on every element pair/triple of 2^3") {
    BoolAlg a = make_powerset_algebra(3);
    auto elems = ba_elements(a);
    for (const BAElem& x : elems) {
        CHECK(ba_join(x, ba_compl(x)) == ba_top(a));
        CHECK(ba_meet(x, ba_compl(x)) == ba_bottom(a));
        CHECK(ba_compl(ba_compl(x)) == x);
        for (const BAElem& y : elems) {
            CHECK(ba_meet(x, y) == ba_meet(y, x));
            CHECK(ba_join(x, y) == ba_join(y, x));
            // x -> y is the relative pseudo-complement: x & z <= y iff z <= x -> y
            for (const BAElem& z : elems)
                CHECK(ba_leq(ba_meet(x, z), y) == ba_leq(z, ba_imp(x, y)));
        }
    }
}

TEST_CASE("leq is meet-characterized") {
    BoolAlg a = make_powerset_algebra(2);
    for (const BAElem& x : ba_elements(a))
        for (const BAElem& y : ba_elements(a))
            CHECK(ba_leq(x, y) == (ba_meet(x, y) == x));
}

TEST_CASE("empty big meet is top, empty big join is bottom") {
    BoolAlg a = make_powerset_algebra(4);
    CHECK(ba_big_meet(a, {}) == ba_top(a));
    CHECK(ba_big_join(a, {}) == ba_bottom(a));

    std::vector<BAElem> xs = {ba_atom(a, 0), ba_atom(a, 2)};
    CHECK(ba_big_meet(a, xs).mask == 0x0u);
    CHECK(ba_big_join(a, xs).mask == 0x5u);
}

TEST_CASE("cross-algebra operations are rejected") {
    BoolAlg a1 = make_powerset_algebra(1);
    BoolAlg a2 = make_powerset_algebra(2);
    CHECK_THROWS_AS(ba_meet(ba_top(a1), ba_top(a2)), std::invalid_argument);
    CHECK_THROWS_AS(ba_imp(ba_top(a1), ba_bottom(a2)), std::invalid_argument);
    CHECK_THROWS_AS(ba_leq(ba_top(a1), ba_bottom(a2)), std::invalid_argument);
}

#include "doctest.h"
#include "twistset/proplogic.hpp"

using namespace twistset;

namespace {
const Tri O = Tri::zero, H = Tri::half, I = Tri::one;
}

TEST_CASE("three-valued tables, every entry frozen") {
    // conjunction
    CHECK(tri_and(I, I) == I);
    CHECK(tri_and(I, H) == H);
    CHECK(tri_and(I, O) == O);
    CHECK(tri_and(H, I) == H);
    CHECK(tri_and(H, H) == H);
    CHECK(tri_and(H, O) == O);
    CHECK(tri_and(O, I) == O);
    CHECK(tri_and(O, H) == O);
    CHECK(tri_and(O, O) == O);
    // disjunction
    CHECK(tri_or(I, I) == I);
    CHECK(tri_or(I, H) == I);
    CHECK(tri_or(I, O) == I);
    CHECK(tri_or(H, I) == I);
    CHECK(tri_or(H, H) == H);
    CHECK(tri_or(H, O) == H);
    CHECK(tri_or(O, I) == I);
    CHECK(tri_or(O, H) == H);
    CHECK(tri_or(O, O) == O);
    // implication
    CHECK(tri_imp(I, I) == I);
    CHECK(tri_imp(I, H) == H);
    CHECK(tri_imp(I, O) == O);
    CHECK(tri_imp(H, I) == I);
    CHECK(tri_imp(H, H) == H);
    CHECK(tri_imp(H, O) == O);
    CHECK(tri_imp(O, I) == I);
    CHECK(tri_imp(O, H) == I);
    CHECK(tri_imp(O, O) == I);
    // strong implication
    CHECK(tri_simp(I, I) == I);
    CHECK(tri_simp(I, H) == I);
    CHECK(tri_simp(I, O) == O);
    CHECK(tri_simp(H, I) == I);
    CHECK(tri_simp(H, H) == I);
    CHECK(tri_simp(H, O) == O);
    CHECK(tri_simp(O, I) == I);
    CHECK(tri_simp(O, H) == I);
    CHECK(tri_simp(O, O) == I);
    // classical negation
    CHECK(tri_snot(I) == O);
    CHECK(tri_snot(H) == O);
    CHECK(tri_snot(O) == I);
    // paraconsistent negation
    CHECK(tri_pneg(I) == O);
    CHECK(tri_pneg(H) == H);
    CHECK(tri_pneg(O) == I);
    // consistency
    CHECK(tri_circ(I) == I);
    CHECK(tri_circ(H) == O);
    CHECK(tri_circ(O) == I);

    CHECK(tri_designated(I));
    CHECK(tri_designated(H));
    CHECK_FALSE(tri_designated(O));
}

TEST_CASE("designation acts classically on & | -> ~") {
    for (Tri x : {O, H, I})
        for (Tri y : {O, H, I}) {
            bool dx = tri_designated(x), dy = tri_designated(y);
            CHECK(tri_designated(tri_and(x, y)) == (dx && dy));
            CHECK(tri_designated(tri_or(x, y)) == (dx || dy));
            CHECK(tri_designated(tri_imp(x, y)) == (!dx || dy));
        }
    for (Tri x : {O, H, I}) CHECK(tri_designated(tri_snot(x)) == !tri_designated(x));
}

TEST_CASE("parser shapes and precedence") {
    PForm f = parse_prop("p -> q -> r");
    REQUIRE(f->kind == PKind::imp);
    CHECK(f->a->kind == PKind::var);
    CHECK(f->b->kind == PKind::imp);  // right-associative

    f = parse_prop("p & q | r");
    CHECK(f->kind == PKind::or_);
    CHECK(f->a->kind == PKind::and_);

    f = parse_prop("~p & q");
    CHECK(f->kind == PKind::and_);
    CHECK(f->a->kind == PKind::snot);

    CHECK(prop_equal(parse_prop("p => q"), ppneg(psnot(pimp(pvar("p"), pvar("q"))))));
    CHECK(prop_equal(parse_prop("O p"), psnot(pand(pvar("p"), ppneg(pvar("p"))))));
    CHECK(prop_equal(parse_prop("p <-> q"),
                     pand(pimp(pvar("p"), pvar("q")), pimp(pvar("q"), pvar("p")))));

    // keywords from the set-theoretic language are rejected here
    CHECK_THROWS_AS(parse_prop("p in q"), parse_error);
    CHECK_THROWS_AS(parse_prop("forall p . p"), parse_error);
    CHECK_THROWS_AS(parse_prop("p & #2"), parse_error);
    CHECK_THROWS_AS(parse_prop("p &"), parse_error);
    CHECK_THROWS_AS(parse_prop("(p"), parse_error);
    CHECK_THROWS_AS(parse_prop("p q"), parse_error);

    // `O` alone is an operator, `Op` is an identifier
    CHECK(parse_prop("Op")->kind == PKind::var);
    CHECK(parse_prop("O p")->kind == PKind::snot);
}

TEST_CASE("parse . render round-trips") {
    for (const char* src : {
             "p",
             "p -> q -> r",
             "(p -> q) -> r",
             "p & q | r & s",
             "~(p | q) & !p",
             "p => q",
             "O (p & q)",
             "p <-> ~q",
             "((p & ~p) -> q) | r",
             "!!p -> p",
         }) {
        PForm f = parse_prop(src);
        CHECK(prop_equal(parse_prop(render_prop(f)), f));
    }
}

TEST_CASE("frozen evaluation and tautology verdicts in the three-valued matrix") {
    Matrix m = mpt0_matrix();

    PForm contradiction_imp = parse_prop("(p & !p) -> q");
    CHECK(eval_tri(contradiction_imp, {{"p", H}, {"q", O}}) == O);

    TautVerdict v = is_tautology(m, contradiction_imp);
    REQUIRE_FALSE(v.tautology);
    REQUIRE(v.vars == std::vector<std::string>{"p", "q"});
    // first failing valuation in scan order: p = 1/2, q = 0
    CHECK(v.countervaluation[0] == tri_to_twist(H));
    CHECK(v.countervaluation[1] == tri_to_twist(O));

    CHECK(is_tautology(m, parse_prop("p -> p")).tautology);
    CHECK(is_tautology(m, parse_prop("p | ~p")).tautology);
    CHECK(is_tautology(m, parse_prop("p | !p")).tautology);
    CHECK(is_tautology(m, parse_prop("!~p -> p")).tautology);  // matrix-valid
    CHECK(is_tautology(m, parse_prop("p => p")).tautology);
    CHECK(is_tautology(m, parse_prop("!(p & !p)")).tautology);  // designated at p = 1/2
    CHECK_FALSE(is_tautology(m, parse_prop("~(p & !p)")).tautology);
    CHECK_FALSE(is_tautology(m, parse_prop("O p")).tautology);

    // explosion holds for ~ but not for !
    CHECK(is_tautology(m, parse_prop("p -> (~p -> q)")).tautology);
    CHECK_FALSE(is_tautology(m, parse_prop("p -> (!p -> q)")).tautology);
}

TEST_CASE("matrix consequence") {
    Matrix m = mpt0_matrix();
    PForm p = parse_prop("p"), q = parse_prop("q");

    // premises {O p, p, !p} are never jointly designated: consequence holds vacuously
    CHECK(matrix_consequence(m, {parse_prop("O p"), p, parse_prop("!p")}, q).tautology);
    // but {p, !p} alone do not explode
    TautVerdict v = matrix_consequence(m, {p, parse_prop("!p")}, q);
    REQUIRE_FALSE(v.tautology);
    CHECK(v.countervaluation[0] == tri_to_twist(H));  // p = 1/2
    CHECK(v.countervaluation[1] == tri_to_twist(O));  // q = 0

    CHECK(matrix_consequence(m, {p}, parse_prop("p | q")).tautology);
    CHECK(matrix_consequence(m, {p, parse_prop("p -> q")}, q).tautology);
}

TEST_CASE("twist matrices agree with the tables at n = 1 and validate the schemas") {
    Matrix m1 = twist_matrix(make_powerset_algebra(1));
    Matrix m3v = mpt0_matrix();

    for (const char* src : {
             "p & q", "p | q", "p -> q", "~p", "!p", "O p", "p => q",
             "(p & !p) -> q", "!~p -> p", "p -> (q -> p & q)",
         }) {
        PForm f = parse_prop(src);
        TautVerdict a = is_tautology(m3v, f);
        TautVerdict b = is_tautology(m1, f);
        CHECK(a.tautology == b.tautology);
        if (!a.tautology) {
            CHECK(a.countervaluation == b.countervaluation);
        }
    }
}

TEST_CASE("axiom schemas are tautologies of both routes (n <= 2 here)") {
    std::vector<Matrix> ms = {mpt0_matrix(), twist_matrix(make_powerset_algebra(1)),
                              twist_matrix(make_powerset_algebra(2))};
    for (const std::string& name : axiom_names()) {
        // instantiate metas by distinct fresh variables
        PForm pattern = axiom_pattern(name);
        struct Sub {
            static PForm run(const PForm& f) {
                switch (f->kind) {
                    case PKind::meta: return pvar("m" + std::to_string(f->meta));
                    case PKind::var: return f;
                    case PKind::snot: return psnot(run(f->a));
                    case PKind::pneg: return ppneg(run(f->a));
                    case PKind::and_: return pand(run(f->a), run(f->b));
                    case PKind::or_: return por(run(f->a), run(f->b));
                    case PKind::imp: return pimp(run(f->a), run(f->b));
                }
                return f;
            }
        };
        PForm inst = Sub::run(pattern);
        for (const Matrix& m : ms) {
            CAPTURE(name);
            CHECK(is_tautology(m, inst).tautology);
        }
    }
}

TEST_CASE("valuation budget is enforced") {
    Matrix m = twist_matrix(make_powerset_algebra(2));  // 9 values
    // nine variables: 9^9 = 387420489 > 10^7
    PForm f = parse_prop("a & b & c & d & e & f & g & h & i");
    CHECK_THROWS_AS(is_tautology(m, f), budget_error);
    try {
        is_tautology(m, f);
    } catch (const budget_error& e) {
        CHECK(e.needed == 387420489ull);
        CHECK_FALSE(e.needed_overflows);
    }
    // explicit larger budget lifts the cap
    CHECK(is_tautology(m, parse_prop("a | ~a"), 100).tautology);
}

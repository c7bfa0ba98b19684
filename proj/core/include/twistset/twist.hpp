#pragma once

// Twist domains over a powerset algebra: pairs (z1, z2) with z1 | z2 = top.
// z1 carries positive support, z2 negative support; overlap encodes
// inconsistency.  Two implication-like operations live here:
//
//   t_imp  (z1 -> w1, z1 & w2)      the "lpt0" implication
//   t_simp (z1 -> w1, z1 & ~w1)     the "ps3" implication (second coordinate
//                                    is always the complement of the first)

#include <cstdint>
#include <optional>
#include <vector>

#include "twistset/boolalg.hpp"

namespace twistset {

enum class Semantics { lpt0, ps3 };

struct TwistVal {
    BAElem z1, z2;

    friend auto operator<=>(const TwistVal&, const TwistVal&) = default;
};

// Canonical named values: one = (top, bot), half = (top, top), zero = (bot, top).
TwistVal tv_one(const BoolAlg& a);
TwistVal tv_half(const BoolAlg& a);
TwistVal tv_zero(const BoolAlg& a);

// Validating constructor: requires z1 | z2 = top and matching algebras.
TwistVal make_twist(const BAElem& z1, const BAElem& z2);

// All 3^n twist values, lexicographic on (z1.mask, z2.mask).
std::vector<TwistVal> twist_domain(const BoolAlg& a);

TwistVal t_and(const TwistVal& x, const TwistVal& y);
TwistVal t_or(const TwistVal& x, const TwistVal& y);
TwistVal t_imp(const TwistVal& x, const TwistVal& y);
TwistVal t_simp(const TwistVal& x, const TwistVal& y);
TwistVal t_snot(const TwistVal& x);  // classical-negation twist: (~z1, z1)
TwistVal t_neg(const TwistVal& x);   // swap: (z2, z1)
TwistVal t_circ(const TwistVal& x);  // consistency: (~(z1 & z2), z1 & z2)

TwistVal sem_imp(Semantics s, const TwistVal& x, const TwistVal& y);

// Lattice order: x <= y iff x.z1 <= y.z1 and x.z2 >= y.z2.
bool t_leq(const TwistVal& x, const TwistVal& y);
TwistVal t_big_meet(const BoolAlg& a, const std::vector<TwistVal>& xs);  // empty -> one
TwistVal t_big_join(const BoolAlg& a, const std::vector<TwistVal>& xs);  // empty -> zero

// Designated values: first coordinate = top.
bool is_designated(const TwistVal& x);

// Checks the three "reasonable implication" conditions for the chosen
// implication over the whole domain:
//   P1: meet(z,w) <= u  implies  z <= imp(w,u)
//   P2: w <= u          implies  imp(z,w) <= imp(z,u)
//   P3: z <= w          implies  imp(w,u) <= imp(z,u)
// Scans P1 then P2 then P3, each in lexicographic (z, w, u) order, and
// reports the first violated triple.  Intended for small algebras (n <= 3).
struct ImplicationReport {
    bool holds = true;
    int condition = 0;  // 1..3 when !holds
    std::optional<TwistVal> z, w, u;
};

ImplicationReport check_reasonable_implication(const BoolAlg& a, Semantics s);

}  // namespace twistset

#pragma once

// Finite powerset Boolean algebras 2^n over n atoms, 1 <= n <= 16.
// An element is the set of atoms it contains, stored as a bitmask.

#include <compare>
#include <cstdint>
#include <vector>

namespace twistset {

struct BoolAlg {
    int n = 1;  // number of atoms

    std::uint32_t full_mask() const { return (n >= 32) ? ~0u : ((1u << n) - 1u); }
    std::uint64_t size() const { return std::uint64_t{1} << n; }
};

// An element remembers the atom count of its algebra so that cross-algebra
// operations can be rejected instead of silently producing garbage.
struct BAElem {
    std::uint32_t mask = 0;
    int n = 1;

    friend auto operator<=>(const BAElem&, const BAElem&) = default;
};

BoolAlg make_powerset_algebra(int n);  // throws std::out_of_range unless 1 <= n <= 16

BAElem ba_bottom(const BoolAlg& a);
BAElem ba_top(const BoolAlg& a);
BAElem ba_atom(const BoolAlg& a, int i);           // i-th atom, 0 <= i < n
BAElem ba_make(const BoolAlg& a, std::uint32_t mask);  // validates mask <= full

// All 2^n elements in ascending mask order.
std::vector<BAElem> ba_elements(const BoolAlg& a);

BAElem ba_meet(const BAElem& x, const BAElem& y);
BAElem ba_join(const BAElem& x, const BAElem& y);
BAElem ba_compl(const BAElem& x);
BAElem ba_imp(const BAElem& x, const BAElem& y);  // material: ~x | y
bool ba_leq(const BAElem& x, const BAElem& y);

// Big meet/join over a (possibly empty) family: empty meet = top, empty join = bottom.
BAElem ba_big_meet(const BoolAlg& a, const std::vector<BAElem>& xs);
BAElem ba_big_join(const BoolAlg& a, const std::vector<BAElem>& xs);

bool ba_is_top(const BAElem& x);
bool ba_is_bottom(const BAElem& x);

}  // namespace twistset

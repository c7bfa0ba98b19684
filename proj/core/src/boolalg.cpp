#include "twistset/boolalg.hpp"

#include <stdexcept>
#include <string>

namespace twistset {

namespace {

void require_same_algebra(const BAElem& x, const BAElem& y) {
    if (x.n != y.n)
        throw std::invalid_argument("boolean algebra mismatch: 2^" + std::to_string(x.n) +
                                    " vs 2^" + std::to_string(y.n));
}

std::uint32_t full_of(int n) { return (1u << n) - 1u; }

}  // namespace

BoolAlg make_powerset_algebra(int n) {
    if (n < 1 || n > 16)
        throw std::out_of_range("atom count must be in [1, 16], got " + std::to_string(n));
    return BoolAlg{n};
}

BAElem ba_bottom(const BoolAlg& a) { return BAElem{0u, a.n}; }
BAElem ba_top(const BoolAlg& a) { return BAElem{a.full_mask(), a.n}; }

BAElem ba_atom(const BoolAlg& a, int i) {
    if (i < 0 || i >= a.n)
        throw std::out_of_range("atom index " + std::to_string(i) + " out of range for 2^" +
                                std::to_string(a.n));
    return BAElem{1u << i, a.n};
}

BAElem ba_make(const BoolAlg& a, std::uint32_t mask) {
    if (mask > a.full_mask())
        throw std::out_of_range("mask " + std::to_string(mask) + " not an element of 2^" +
                                std::to_string(a.n));
    return BAElem{mask, a.n};
}

std::vector<BAElem> ba_elements(const BoolAlg& a) {
    std::vector<BAElem> out;
    out.reserve(std::size_t{1} << a.n);
    for (std::uint32_t m = 0; m <= a.full_mask(); ++m) out.push_back(BAElem{m, a.n});
    return out;
}

BAElem ba_meet(const BAElem& x, const BAElem& y) {
    require_same_algebra(x, y);
    return BAElem{x.mask & y.mask, x.n};
}

BAElem ba_join(const BAElem& x, const BAElem& y) {
    require_same_algebra(x, y);
    return BAElem{x.mask | y.mask, x.n};
}

BAElem ba_compl(const BAElem& x) { return BAElem{~x.mask & full_of(x.n), x.n}; }

BAElem ba_imp(const BAElem& x, const BAElem& y) {
    require_same_algebra(x, y);
    return BAElem{(~x.mask & full_of(x.n)) | y.mask, x.n};
}

bool ba_leq(const BAElem& x, const BAElem& y) {
    require_same_algebra(x, y);
    return (x.mask & y.mask) == x.mask;
}

BAElem ba_big_meet(const BoolAlg& a, const std::vector<BAElem>& xs) {
    BAElem acc = ba_top(a);
    for (const BAElem& x : xs) acc = ba_meet(acc, x);
    return acc;
}

BAElem ba_big_join(const BoolAlg& a, const std::vector<BAElem>& xs) {
    BAElem acc = ba_bottom(a);
    for (const BAElem& x : xs) acc = ba_join(acc, x);
    return acc;
}

bool ba_is_top(const BAElem& x) { return x.mask == full_of(x.n); }
bool ba_is_bottom(const BAElem& x) { return x.mask == 0u; }

}  // namespace twistset

#include "twistset/twist.hpp"

#include <stdexcept>
#include <string>

namespace twistset {

namespace {

void require_twist_pair(const BAElem& z1, const BAElem& z2) {
    if (z1.n != z2.n)
        throw std::invalid_argument("twist value coordinates from different algebras");
    BoolAlg a{z1.n};
    if ((z1.mask | z2.mask) != a.full_mask())
        throw std::invalid_argument("not a twist value: z1 | z2 must be the top element");
}

}  // namespace

TwistVal tv_one(const BoolAlg& a) { return TwistVal{ba_top(a), ba_bottom(a)}; }
TwistVal tv_half(const BoolAlg& a) { return TwistVal{ba_top(a), ba_top(a)}; }
TwistVal tv_zero(const BoolAlg& a) { return TwistVal{ba_bottom(a), ba_top(a)}; }

TwistVal make_twist(const BAElem& z1, const BAElem& z2) {
    require_twist_pair(z1, z2);
    return TwistVal{z1, z2};
}

std::vector<TwistVal> twist_domain(const BoolAlg& a) {
    std::vector<TwistVal> out;
    const std::uint32_t full = a.full_mask();
    for (std::uint32_t m1 = 0; m1 <= full; ++m1)
        for (std::uint32_t m2 = 0; m2 <= full; ++m2)
            if ((m1 | m2) == full) out.push_back(TwistVal{BAElem{m1, a.n}, BAElem{m2, a.n}});
    return out;
}

TwistVal t_and(const TwistVal& x, const TwistVal& y) {
    return TwistVal{ba_meet(x.z1, y.z1), ba_join(x.z2, y.z2)};
}

TwistVal t_or(const TwistVal& x, const TwistVal& y) {
    return TwistVal{ba_join(x.z1, y.z1), ba_meet(x.z2, y.z2)};
}

TwistVal t_imp(const TwistVal& x, const TwistVal& y) {
    return TwistVal{ba_imp(x.z1, y.z1), ba_meet(x.z1, y.z2)};
}

TwistVal t_simp(const TwistVal& x, const TwistVal& y) {
    return TwistVal{ba_imp(x.z1, y.z1), ba_meet(x.z1, ba_compl(y.z1))};
}

TwistVal t_snot(const TwistVal& x) { return TwistVal{ba_compl(x.z1), x.z1}; }

TwistVal t_neg(const TwistVal& x) { return TwistVal{x.z2, x.z1}; }

TwistVal t_circ(const TwistVal& x) {
    BAElem both = ba_meet(x.z1, x.z2);
    return TwistVal{ba_compl(both), both};
}

TwistVal sem_imp(Semantics s, const TwistVal& x, const TwistVal& y) {
    return s == Semantics::lpt0 ? t_imp(x, y) : t_simp(x, y);
}

bool t_leq(const TwistVal& x, const TwistVal& y) {
    return ba_leq(x.z1, y.z1) && ba_leq(y.z2, x.z2);
}

TwistVal t_big_meet(const BoolAlg& a, const std::vector<TwistVal>& xs) {
    TwistVal acc = tv_one(a);
    for (const TwistVal& x : xs) acc = t_and(acc, x);
    return acc;
}

TwistVal t_big_join(const BoolAlg& a, const std::vector<TwistVal>& xs) {
    TwistVal acc = tv_zero(a);
    for (const TwistVal& x : xs) acc = t_or(acc, x);
    return acc;
}

bool is_designated(const TwistVal& x) { return ba_is_top(x.z1); }

ImplicationReport check_reasonable_implication(const BoolAlg& a, Semantics s) {
    const std::vector<TwistVal> dom = twist_domain(a);
    auto imp = [&](const TwistVal& x, const TwistVal& y) { return sem_imp(s, x, y); };

    // P1
    for (const TwistVal& z : dom)
        for (const TwistVal& w : dom)
            for (const TwistVal& u : dom)
                if (t_leq(t_and(z, w), u) && !t_leq(z, imp(w, u)))
                    return ImplicationReport{false, 1, z, w, u};
    // P2
    for (const TwistVal& z : dom)
        for (const TwistVal& w : dom)
            for (const TwistVal& u : dom)
                if (t_leq(w, u) && !t_leq(imp(z, w), imp(z, u)))
                    return ImplicationReport{false, 2, z, w, u};
    // P3
    for (const TwistVal& z : dom)
        for (const TwistVal& w : dom)
            for (const TwistVal& u : dom)
                if (t_leq(z, w) && !t_leq(imp(w, u), imp(z, u)))
                    return ImplicationReport{false, 3, z, w, u};

    return ImplicationReport{};
}

}  // namespace twistset

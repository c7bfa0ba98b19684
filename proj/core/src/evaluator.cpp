#include "twistset/evaluator.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistset {

namespace {

enum : int { kMem = 0, kEq = 1 };

elem_id resolve(EvalContext& ctx, const Term& t, const Assignment& mu) {
    switch (t.kind) {
        case TermKind::var: {
            auto it = mu.find(t.name);
            if (it == mu.end()) throw eval_error("unbound variable '" + t.name + "'");
            return it->second;
        }
        case TermKind::cst:
            if (t.id >= ctx.store->size())
                throw eval_error("unknown constant #" + std::to_string(t.id));
            return t.id;
        case TermKind::empty:
            return ctx.store->empty_element();
    }
    throw eval_error("unreachable term kind");
}

std::uint64_t pow_saturating(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
        result *= base;
    }
    return result;
}

}  // namespace

TwistVal val_mem(EvalContext& ctx, elem_id u, elem_id v) {
    const auto key = std::make_tuple(kMem, u, v);
    if (ctx.use_memo) {
        auto it = ctx.memo.find(key);
        if (it != ctx.memo.end()) return it->second;
    }
    const BoolAlg& a = ctx.store->algebra();
    std::vector<TwistVal> parts;
    for (const auto& [x, value] : ctx.store->element(v).keys)
        parts.push_back(t_and(value, val_eq(ctx, x, u)));
    TwistVal result = t_big_join(a, parts);
    if (ctx.use_memo) ctx.memo.emplace(key, result);
    return result;
}

TwistVal val_eq(EvalContext& ctx, elem_id u, elem_id v) {
    const auto key = std::make_tuple(kEq, std::min(u, v), std::max(u, v));
    if (ctx.use_memo) {
        auto it = ctx.memo.find(key);
        if (it != ctx.memo.end()) return it->second;
    }
    const BoolAlg& a = ctx.store->algebra();
    std::vector<TwistVal> parts;
    for (const auto& [x, value] : ctx.store->element(u).keys)
        parts.push_back(sem_imp(ctx.semantics, value, val_mem(ctx, x, v)));
    for (const auto& [y, value] : ctx.store->element(v).keys)
        parts.push_back(sem_imp(ctx.semantics, value, val_mem(ctx, y, u)));
    TwistVal result = t_big_meet(a, parts);
    if (ctx.use_memo) ctx.memo.emplace(key, result);
    return result;
}

TwistVal val_formula(EvalContext& ctx, const FForm& f, const Assignment& mu) {
    const BoolAlg& a = ctx.store->algebra();
    switch (f->kind) {
        case FKind::mem:
            return val_mem(ctx, resolve(ctx, f->t1, mu), resolve(ctx, f->t2, mu));
        case FKind::eq:
            return val_eq(ctx, resolve(ctx, f->t1, mu), resolve(ctx, f->t2, mu));
        case FKind::and_:
            return t_and(val_formula(ctx, f->a, mu), val_formula(ctx, f->b, mu));
        case FKind::or_:
            return t_or(val_formula(ctx, f->a, mu), val_formula(ctx, f->b, mu));
        case FKind::imp:
            // `->` is definable in both semantics and always means t_imp.
            return t_imp(val_formula(ctx, f->a, mu), val_formula(ctx, f->b, mu));
        case FKind::simp:
            if (ctx.semantics != Semantics::ps3)
                throw eval_error("'=>' requires ps3 semantics");
            return t_simp(val_formula(ctx, f->a, mu), val_formula(ctx, f->b, mu));
        case FKind::snot:
            return t_snot(val_formula(ctx, f->a, mu));
        case FKind::pneg:
            return t_neg(val_formula(ctx, f->a, mu));
        case FKind::forall:
        case FKind::exists: {
            std::vector<TwistVal> parts;
            parts.reserve(ctx.carrier.size());
            Assignment inner = mu;
            for (elem_id id : ctx.carrier) {
                inner[f->var] = id;
                parts.push_back(val_formula(ctx, f->a, inner));
            }
            return f->kind == FKind::forall ? t_big_meet(a, parts)
                                            : t_big_join(a, parts);
        }
    }
    throw eval_error("unreachable formula kind");
}

bool is_valid(EvalContext& ctx, const FForm& f, const Assignment& mu) {
    return is_designated(val_formula(ctx, f, mu));
}

bool is_valid_all(EvalContext& ctx, const FForm& f, std::uint64_t budget) {
    std::vector<std::string> vars;
    for (const std::string& v : free_vars(f)) vars.push_back(v);

    std::uint64_t count = pow_saturating(ctx.carrier.size(), vars.size());
    if (count > budget)
        throw budget_error("is_valid_all: " +
                               (count == UINT64_MAX ? std::string("more than 2^64")
                                                    : std::to_string(count)) +
                               " assignments exceed budget " + std::to_string(budget),
                           count, count == UINT64_MAX);

    std::vector<std::size_t> idx(vars.size(), 0);
    if (!vars.empty() && ctx.carrier.empty()) return true;  // no assignments
    for (;;) {
        Assignment mu;
        for (std::size_t i = 0; i < vars.size(); ++i) mu[vars[i]] = ctx.carrier[idx[i]];
        if (!is_valid(ctx, f, mu)) return false;

        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == ctx.carrier.size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;  // odometer wrapped (or closed formula)
    }
    return true;
}

elem_id mixture(EvalContext& ctx, const std::vector<BAElem>& weights,
                const std::vector<elem_id>& elements) {
    if (weights.size() != elements.size())
        throw std::invalid_argument("mixture: weights and elements differ in length");
    const BoolAlg& a = ctx.store->algebra();
    for (const BAElem& w : weights)
        if (w.n != a.n) throw std::invalid_argument("mixture: weight from a different algebra");

    std::vector<elem_id> dom;
    for (elem_id id : elements)
        for (const auto& [k, value] : ctx.store->element(id).keys) dom.push_back(k);
    std::sort(dom.begin(), dom.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());

    std::vector<std::pair<elem_id, TwistVal>> keys;
    keys.reserve(dom.size());
    for (elem_id z : dom) {
        BAElem first = ba_bottom(a);
        for (std::size_t i = 0; i < elements.size(); ++i)
            first = ba_join(first, ba_meet(weights[i], val_mem(ctx, z, elements[i]).z1));
        keys.emplace_back(z, make_twist(first, ba_compl(first)));
    }
    return ctx.store->make_element(std::move(keys));
}

std::vector<elem_id> core(EvalContext& ctx, elem_id u,
                          const std::vector<elem_id>& carrier) {
    std::vector<elem_id> candidates;
    for (elem_id x : carrier)
        if (ba_is_top(val_mem(ctx, x, u).z1)) candidates.push_back(x);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    std::vector<elem_id> reps;
    for (elem_id x : candidates) {
        bool represented = false;
        for (elem_id r : reps)
            if (ba_is_top(val_eq(ctx, r, x).z1)) {
                represented = true;
                break;
            }
        if (!represented) reps.push_back(x);
    }
    return reps;
}

}  // namespace twistset

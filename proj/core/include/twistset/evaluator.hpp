#pragma once

// Truth values for set formulas over a finite slice of the universe.
// Atomic values are mutually recursive:
//
//   [[u in v]] = join over x in dom(v) of (v(x) & [[x ~ u]])
//   [[u ~ v]]  = meet over x in dom(u) of (u(x) -> [[x in v]])
//              & meet over x in dom(v) of (v(x) -> [[x in u]])
//
// where `->` inside the equality recursion is t_imp under lpt0 and t_simp
// under ps3.  Connectives are evaluated by the twist operations and
// quantifiers as big meet/join over an explicit finite carrier.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "twistset/fol.hpp"
#include "twistset/universe.hpp"

namespace twistset {

struct EvalContext {
    UniverseStore* store = nullptr;
    Semantics semantics = Semantics::lpt0;
    std::vector<elem_id> carrier;  // quantifier range

    // Atomic values are cached per (predicate, id, id); equality keys are
    // normalized to (min, max), which is sound because the defining
    // expression is symmetric.  Disable to cross-check memoization.
    bool use_memo = true;
    std::map<std::tuple<int, elem_id, elem_id>, TwistVal> memo;
};

using Assignment = std::map<std::string, elem_id>;

TwistVal val_mem(EvalContext& ctx, elem_id u, elem_id v);  // [[u in v]]
TwistVal val_eq(EvalContext& ctx, elem_id u, elem_id v);   // [[u ~ v]]

// Evaluates a formula whose free variables are covered by the assignment.
// Throws eval_error for unbound variables, constants outside the store, and
// `=>` under lpt0 semantics (the strong implication is a ps3 notion; under
// lpt0 it would silently change which implication drives the recursion).
TwistVal val_formula(EvalContext& ctx, const FForm& f, const Assignment& mu = {});

// Designation of the formula's value under one assignment ...
bool is_valid(EvalContext& ctx, const FForm& f, const Assignment& mu = {});

// ... and under every assignment of its free variables into the carrier.
// The assignment count is checked against `budget` before any evaluation.
bool is_valid_all(EvalContext& ctx, const FForm& f,
                  std::uint64_t budget = 10'000'000);

}  // namespace twistset

#pragma once

// First-order language of set membership and equality, in the ASCII syntax
//
//   atoms        t in t        t = t
//   terms        variables | #<id> (store constants) | empty
//   connectives  & | -> => ~ ! O <->        (precedence: prefix > & > | > ->)
//   quantifiers  forall x . e    exists x . e        (scope runs to the end)
//   bounded      forall x in t . e    exists x in t . e
//
// Derived forms are expanded at parse time -- O a becomes ~(a & !a), a <-> b
// becomes (a -> b) & (b -> a), bounded quantifiers become implications or
// conjunctions -- except `=>`, which stays its own node so that evaluation
// can reject it under semantics that lack it.

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "twistset/errors.hpp"

namespace twistset {

enum class TermKind { var, cst, empty };

struct Term {
    TermKind kind = TermKind::var;
    std::string name;       // var
    std::uint32_t id = 0;   // cst

    friend bool operator==(const Term&, const Term&) = default;
};

Term tvar(const std::string& name);
Term tconst(std::uint32_t id);
Term tempty();

enum class FKind { mem, eq, and_, or_, imp, simp, snot, pneg, forall, exists };

struct FOFormula;
using FForm = std::shared_ptr<const FOFormula>;

struct FOFormula {
    FKind kind;
    Term t1, t2;      // mem, eq
    std::string var;  // forall, exists
    FForm a, b;
};

FForm fmem(Term element, Term container);
FForm feq(Term lhs, Term rhs);
FForm fand(FForm a, FForm b);
FForm for_(FForm a, FForm b);
FForm fimp(FForm a, FForm b);
FForm fsimp(FForm a, FForm b);
FForm fsnot(FForm a);
FForm fpneg(FForm a);
FForm fforall(const std::string& var, FForm body);
FForm fexists(const std::string& var, FForm body);
// derived
FForm fcirc(FForm a);
FForm fiff(FForm a, FForm b);
FForm fbounded_forall(const std::string& var, Term bound, FForm body);
FForm fbounded_exists(const std::string& var, Term bound, FForm body);

bool fo_equal(const FForm& a, const FForm& b);

FForm parse_formula(const std::string& text);  // throws parse_error
std::string render(const FForm& f);            // parse(render(f)) == f

std::set<std::string> free_vars(const FForm& f);

// No occurrence of `!` anywhere in the formula.
bool is_pure(const FForm& f);

// Every quantifier is bounded: forall x . (x in t -> ...) or
// exists x . (x in t & ...), with t not mentioning x.  Requires a pure
// formula; throws std::invalid_argument otherwise.
bool is_restricted(const FForm& f);

// Capture-avoiding substitution of a term for a free variable.  Throws
// std::invalid_argument if the substitution would capture a variable.
FForm substitute(const FForm& f, const std::string& var, const Term& replacement);

}  // namespace twistset

#pragma once

// Bounded twist-valued universes.  An element is a finite map from
// previously-interned element ids to twist values; the store hash-conses
// these maps so that structural equality coincides with id equality.
//
// Ranks: the empty element has rank 1, and every other element has rank
// 1 + the maximum rank among its keys.  Level k of the cumulative hierarchy
// (all elements of rank <= k) has exactly (1 + |T|)^{|level k-1|} elements,
// where |T| = 3^n is the size of the twist domain.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistset/errors.hpp"
#include "twistset/twist.hpp"

namespace twistset {

using elem_id = std::uint32_t;

struct ElemEntry {
    // (key id, value) pairs, sorted ascending by key id; keys are always
    // older (smaller) ids than the element itself.
    std::vector<std::pair<elem_id, TwistVal>> keys;
    int rank = 1;
};

class UniverseStore {
  public:
    explicit UniverseStore(BoolAlg alg) : alg_(alg) {}

    const BoolAlg& algebra() const { return alg_; }

    // The element with no keys; interned on first use, idempotent after.
    elem_id empty_element();

    // Interns the given key/value map (order-insensitive; duplicates,
    // unknown ids, and foreign-algebra values are rejected with
    // std::invalid_argument).  Re-making an existing map returns its id.
    elem_id make_element(std::vector<std::pair<elem_id, TwistVal>> keys);

    std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
    const ElemEntry& element(elem_id id) const;  // throws std::out_of_range
    int rank(elem_id id) const;

  private:
    BoolAlg alg_;
    std::vector<ElemEntry> elems_;
    std::map<std::vector<std::pair<elem_id, TwistVal>>, elem_id> intern_;
};

// Materializes every element of rank <= max_rank and returns their ids in
// ascending order.  Before each level is built, the total element count it
// implies is compared against `budget`; if it would exceed the budget a
// budget_error carrying the needed count is thrown and nothing from that
// level is materialized.
std::vector<elem_id> enumerate_rank(UniverseStore& store, int max_rank,
                                    std::uint64_t budget);

// --- hereditarily finite sets -------------------------------------------
//
// HF sets are handled as Ackermann codes: bit i of a code is set exactly
// when the set coded by i is a member.  Code 0 is the empty set, code 1 is
// {0}, code 3 is {0, {0}}, and all sets of HF rank <= 3 have codes 0..15.

bool hf_member(std::uint64_t a, std::uint64_t b);  // does a's set belong to b's?
int hf_rank(std::uint64_t code);                   // empty set has rank 0

// The canonical embedding of an HF set: x maps to { <y-embedded, one> : y in x }.
elem_id check_name(UniverseStore& store, std::uint64_t code);

// --- store dump format ---------------------------------------------------
//
// Line-oriented text, one element per line, ids sequential from 0:
//
//   <id> <rank> {<key>:(<z1-mask>,<z2-mask>), ...}
//
// Keys are decimal and sorted ascending; masks are lowercase hex without a
// prefix.  The algebra is not part of the dump: the loader takes it as a
// parameter and rejects masks that do not fit.  dump/load round-trip
// bit-exactly.

std::string dump_store(const UniverseStore& store);
UniverseStore load_store(const std::string& text, BoolAlg alg);  // throws parse_error

// --- derived constructions (defined alongside the evaluator) -------------

struct EvalContext;

// Weighted blend of elements: the result's domain is the union of the
// components' domains, and each key z gets first coordinate
// join_i (weights[i] & [[z in elements[i]]]_1) with complementary second
// coordinate.  Lists must have equal length and weights must come from the
// store's algebra.
elem_id mixture(EvalContext& ctx, const std::vector<BAElem>& weights,
                const std::vector<elem_id>& elements);

// The full members of u inside the carrier, thinned to one representative
// (smallest id) per equality class: every returned x has [[x in u]]_1 = top
// and no two returned ids are fully equal.
std::vector<elem_id> core(EvalContext& ctx, elem_id u,
                          const std::vector<elem_id>& carrier);

}  // namespace twistset

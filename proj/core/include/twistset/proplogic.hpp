#pragma once

// Propositional layer: formulas over {&, |, ->, ~, !}, the three-valued
// matrix with values {0, 1/2, 1} and designated {1/2, 1}, twist-valued
// matrices over 2^n, tautology/consequence checking, and a Hilbert-style
// proof checker for the sixteen axiom schemas plus modus ponens.
//
// Derived connectives are expanded at parse time:
//   a => b   becomes  !~(a -> b)
//   O a      becomes  ~(a & !a)
//   a <-> b  becomes  (a -> b) & (b -> a)

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistset/errors.hpp"
#include "twistset/twist.hpp"

namespace twistset {

// ---------------------------------------------------------------------------
// formulas

enum class PKind { var, meta, and_, or_, imp, snot, pneg };

struct PropFormula;
using PForm = std::shared_ptr<const PropFormula>;

struct PropFormula {
    PKind kind;
    std::string name;  // var
    int meta = 0;      // meta (schema placeholders; never produced by the parser)
    PForm a, b;
};

PForm pvar(const std::string& name);
PForm pand(PForm a, PForm b);
PForm por(PForm a, PForm b);
PForm pimp(PForm a, PForm b);
PForm psnot(PForm a);
PForm ppneg(PForm a);
// derived
PForm psimp(PForm a, PForm b);
PForm pcirc(PForm a);
PForm piff(PForm a, PForm b);

bool prop_equal(const PForm& a, const PForm& b);
std::vector<std::string> prop_vars(const PForm& f);  // sorted, unique
std::string render_prop(const PForm& f);
PForm parse_prop(const std::string& text);  // throws parse_error

// ---------------------------------------------------------------------------
// three-valued tables (0 = 0, 1 = 1/2, 2 = 1)

enum class Tri : std::uint8_t { zero = 0, half = 1, one = 2 };

Tri tri_and(Tri x, Tri y);
Tri tri_or(Tri x, Tri y);
Tri tri_imp(Tri x, Tri y);
Tri tri_simp(Tri x, Tri y);
Tri tri_snot(Tri x);
Tri tri_pneg(Tri x);
Tri tri_circ(Tri x);
bool tri_designated(Tri x);

// the n = 1 twist values and the three-valued matrix name the same objects
TwistVal tri_to_twist(Tri t);           // over 2^1
Tri twist_to_tri(const TwistVal& v);    // requires n = 1

// table-driven evaluation (the three-valued route; independent of twist ops)
Tri eval_tri(const PForm& f, const std::map<std::string, Tri>& valuation);

// ---------------------------------------------------------------------------
// matrices

// A matrix is either the hardcoded three-valued one or the twist-valued
// matrix over 2^n.  Values are uniformly TwistVals; for the three-valued
// matrix they are the n = 1 twist values and evaluation goes through the
// tables above, NOT through the twist operations.
struct Matrix {
    bool three_valued = true;
    BoolAlg alg{1};
};

Matrix mpt0_matrix();
Matrix twist_matrix(const BoolAlg& a);

std::vector<TwistVal> matrix_values(const Matrix& m);  // enumeration order of valuations
TwistVal eval_prop(const Matrix& m, const PForm& f,
                   const std::map<std::string, TwistVal>& valuation);

inline constexpr std::uint64_t kValuationBudget = 10'000'000;

struct TautVerdict {
    bool tautology = true;
    std::vector<std::string> vars;           // sorted; countervaluation is parallel
    std::vector<TwistVal> countervaluation;  // first failing valuation, scan order
};

// Enumerates all |values|^|vars| valuations (variables in sorted order, the
// last one varying fastest, values in matrix_values order).  Throws
// budget_error if that count exceeds `budget`.
TautVerdict is_tautology(const Matrix& m, const PForm& f,
                         std::uint64_t budget = kValuationBudget);

// Matrix consequence: every valuation designating all premises designates
// the conclusion.  Same enumeration and budget rules.
TautVerdict matrix_consequence(const Matrix& m, const std::vector<PForm>& premises,
                               const PForm& conclusion,
                               std::uint64_t budget = kValuationBudget);

// ---------------------------------------------------------------------------
// Hilbert calculus

// Axiom schema names, in preference order for match_axiom.
const std::vector<std::string>& axiom_names();

// Schema pattern for a given name (formulas over meta placeholders).
PForm axiom_pattern(const std::string& name);

// First schema (in listing order) that the formula instantiates, if any.
std::optional<std::string> match_axiom(const PForm& f);

// Does `f` instantiate the named schema?
bool matches_axiom(const std::string& name, const PForm& f);

struct ProofLine {
    int index = 0;
    PForm formula;
    std::string justification;  // axiom name or "MP"
    int ref_major = 0, ref_minor = 0;
};

struct ProofScript {
    std::vector<ProofLine> lines;
};

// Text format, one line per step:  `<index>. <formula> ; <justification>`
// where the justification is an axiom name or `MP <i> <j>` with i the line
// proving the implication and j the line proving its antecedent.
ProofScript parse_proof_script(const std::string& text);  // throws parse_error

struct ProofVerdict {
    bool ok = true;
    int first_bad_line = 0;  // 1-based line index when !ok
    std::string reason;
};

ProofVerdict check_proof(const ProofScript& script);

}  // namespace twistset

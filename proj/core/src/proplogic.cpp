#include "twistset/proplogic.hpp"

#include <algorithm>
#include <set>

#include "prop_parser.hpp"

namespace twistset {

// ---------------------------------------------------------------------------
// builders

namespace {

PForm node(PKind k, PForm a = nullptr, PForm b = nullptr) {
    auto f = std::make_shared<PropFormula>();
    f->kind = k;
    f->a = std::move(a);
    f->b = std::move(b);
    return f;
}

}  // namespace

PForm pvar(const std::string& name) {
    auto f = std::make_shared<PropFormula>();
    f->kind = PKind::var;
    f->name = name;
    return f;
}

PForm pand(PForm a, PForm b) { return node(PKind::and_, std::move(a), std::move(b)); }
PForm por(PForm a, PForm b) { return node(PKind::or_, std::move(a), std::move(b)); }
PForm pimp(PForm a, PForm b) { return node(PKind::imp, std::move(a), std::move(b)); }
PForm psnot(PForm a) { return node(PKind::snot, std::move(a)); }
PForm ppneg(PForm a) { return node(PKind::pneg, std::move(a)); }

PForm psimp(PForm a, PForm b) { return ppneg(psnot(pimp(std::move(a), std::move(b)))); }
PForm pcirc(PForm a) { return psnot(pand(a, ppneg(a))); }
PForm piff(PForm a, PForm b) { return pand(pimp(a, b), pimp(b, a)); }

bool prop_equal(const PForm& a, const PForm& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case PKind::var: return a->name == b->name;
        case PKind::meta: return a->meta == b->meta;
        case PKind::snot:
        case PKind::pneg: return prop_equal(a->a, b->a);
        default: return prop_equal(a->a, b->a) && prop_equal(a->b, b->b);
    }
}

namespace {

void collect_vars(const PForm& f, std::set<std::string>& out) {
    if (!f) return;
    if (f->kind == PKind::var) out.insert(f->name);
    collect_vars(f->a, out);
    collect_vars(f->b, out);
}

}  // namespace

std::vector<std::string> prop_vars(const PForm& f) {
    std::set<std::string> s;
    collect_vars(f, s);
    return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// rendering (parenthesized by precedence: prefix > & > | > ->)

namespace {

int prop_prec(const PForm& f) {
    switch (f->kind) {
        case PKind::imp: return 1;
        case PKind::or_: return 2;
        case PKind::and_: return 3;
        default: return 4;
    }
}

void render_prop_rec(const PForm& f, int parent_prec, std::string& out) {
    const int prec = prop_prec(f);
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (f->kind) {
        case PKind::var: out += f->name; break;
        case PKind::meta: out += "?" + std::to_string(f->meta); break;
        case PKind::snot:
            out += '~';
            render_prop_rec(f->a, 4, out);
            break;
        case PKind::pneg:
            out += '!';
            render_prop_rec(f->a, 4, out);
            break;
        case PKind::and_:
            render_prop_rec(f->a, 3, out);
            out += " & ";
            render_prop_rec(f->b, 4, out);  // right operand needs strictly tighter
            break;
        case PKind::or_:
            render_prop_rec(f->a, 2, out);
            out += " | ";
            render_prop_rec(f->b, 3, out);
            break;
        case PKind::imp:
            render_prop_rec(f->a, 2, out);  // implications are right-associative
            out += " -> ";
            render_prop_rec(f->b, 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string render_prop(const PForm& f) {
    std::string out;
    render_prop_rec(f, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

using detail::Tok;
using detail::TokenCursor;

PForm parse_prop_impl(TokenCursor& cur);

PForm parse_prop_prefix(TokenCursor& cur) {
    const detail::Token& t = cur.peek();
    switch (t.kind) {
        case Tok::tilde: cur.get(); return psnot(parse_prop_prefix(cur));
        case Tok::bang: cur.get(); return ppneg(parse_prop_prefix(cur));
        case Tok::circ: cur.get(); return pcirc(parse_prop_prefix(cur));
        case Tok::lparen: {
            cur.get();
            PForm f = parse_prop_impl(cur);
            cur.expect(Tok::rparen, "')'");
            return f;
        }
        case Tok::ident: return pvar(cur.get().text);
        case Tok::kw_forall:
        case Tok::kw_exists:
        case Tok::kw_in:
        case Tok::kw_empty:
        case Tok::hash:
            throw parse_error("'" + t.text + "' is not allowed in a propositional formula",
                              t.line, t.column);
        default:
            throw parse_error("expected a propositional formula, got '" +
                                  (t.kind == Tok::end ? "<end>" : t.text) + "'",
                              t.line, t.column);
    }
}

PForm parse_prop_and(TokenCursor& cur) {
    PForm f = parse_prop_prefix(cur);
    while (cur.accept(Tok::amp)) f = pand(f, parse_prop_prefix(cur));
    return f;
}

PForm parse_prop_or(TokenCursor& cur) {
    PForm f = parse_prop_and(cur);
    while (cur.accept(Tok::pipe)) f = por(f, parse_prop_and(cur));
    return f;
}

PForm parse_prop_impl(TokenCursor& cur) {
    PForm lhs = parse_prop_or(cur);
    if (cur.accept(Tok::arrow)) return pimp(lhs, parse_prop_impl(cur));
    if (cur.accept(Tok::darrow)) return psimp(lhs, parse_prop_impl(cur));
    if (cur.accept(Tok::iff)) return piff(lhs, parse_prop_impl(cur));
    return lhs;
}

}  // namespace

namespace detail {

PForm parse_prop_cursor(TokenCursor& cur) { return parse_prop_impl(cur); }

}  // namespace detail

PForm parse_prop(const std::string& text) {
    auto toks = detail::lex(text);
    TokenCursor cur{&toks};
    PForm f = parse_prop_impl(cur);
    const detail::Token& t = cur.peek();
    if (t.kind != Tok::end)
        throw parse_error("unexpected trailing '" + t.text + "'", t.line, t.column);
    return f;
}

// ---------------------------------------------------------------------------
// three-valued tables.  Index order: [x][y] with 0 -> 0, 1 -> 1/2, 2 -> 1.

namespace {

constexpr Tri Z = Tri::zero, H = Tri::half, I = Tri::one;

constexpr Tri AND3[3][3] = {
    {Z, Z, Z},
    {Z, H, H},
    {Z, H, I},
};
constexpr Tri OR3[3][3] = {
    {Z, H, I},
    {H, H, I},
    {I, I, I},
};
constexpr Tri IMP3[3][3] = {
    {I, I, I},
    {Z, H, I},
    {Z, H, I},
};
constexpr Tri SIMP3[3][3] = {
    {I, I, I},
    {Z, I, I},
    {Z, I, I},
};
constexpr Tri SNOT3[3] = {I, Z, Z};
constexpr Tri PNEG3[3] = {I, H, Z};
constexpr Tri CIRC3[3] = {I, Z, I};

std::size_t ix(Tri t) { return static_cast<std::size_t>(t); }

}  // namespace

Tri tri_and(Tri x, Tri y) { return AND3[ix(x)][ix(y)]; }
Tri tri_or(Tri x, Tri y) { return OR3[ix(x)][ix(y)]; }
Tri tri_imp(Tri x, Tri y) { return IMP3[ix(x)][ix(y)]; }
Tri tri_simp(Tri x, Tri y) { return SIMP3[ix(x)][ix(y)]; }
Tri tri_snot(Tri x) { return SNOT3[ix(x)]; }
Tri tri_pneg(Tri x) { return PNEG3[ix(x)]; }
Tri tri_circ(Tri x) { return CIRC3[ix(x)]; }
bool tri_designated(Tri x) { return x != Tri::zero; }

TwistVal tri_to_twist(Tri t) {
    BoolAlg a{1};
    switch (t) {
        case Tri::zero: return tv_zero(a);
        case Tri::half: return tv_half(a);
        default: return tv_one(a);
    }
}

Tri twist_to_tri(const TwistVal& v) {
    if (v.z1.n != 1) throw std::invalid_argument("twist_to_tri requires an n = 1 value");
    if (v == tv_zero(BoolAlg{1})) return Tri::zero;
    if (v == tv_half(BoolAlg{1})) return Tri::half;
    return Tri::one;
}

Tri eval_tri(const PForm& f, const std::map<std::string, Tri>& valuation) {
    switch (f->kind) {
        case PKind::var: {
            auto it = valuation.find(f->name);
            if (it == valuation.end()) throw eval_error("unbound variable '" + f->name + "'");
            return it->second;
        }
        case PKind::meta: throw eval_error("cannot evaluate a schema placeholder");
        case PKind::and_: return tri_and(eval_tri(f->a, valuation), eval_tri(f->b, valuation));
        case PKind::or_: return tri_or(eval_tri(f->a, valuation), eval_tri(f->b, valuation));
        case PKind::imp: return tri_imp(eval_tri(f->a, valuation), eval_tri(f->b, valuation));
        case PKind::snot: return tri_snot(eval_tri(f->a, valuation));
        case PKind::pneg: return tri_pneg(eval_tri(f->a, valuation));
    }
    throw eval_error("corrupt formula");
}

// ---------------------------------------------------------------------------
// matrices

Matrix mpt0_matrix() { return Matrix{true, BoolAlg{1}}; }
Matrix twist_matrix(const BoolAlg& a) { return Matrix{false, a}; }

std::vector<TwistVal> matrix_values(const Matrix& m) {
    return twist_domain(m.three_valued ? BoolAlg{1} : m.alg);
}

namespace {

TwistVal eval_twist_prop(const PForm& f, const std::map<std::string, TwistVal>& valuation) {
    switch (f->kind) {
        case PKind::var: {
            auto it = valuation.find(f->name);
            if (it == valuation.end()) throw eval_error("unbound variable '" + f->name + "'");
            return it->second;
        }
        case PKind::meta: throw eval_error("cannot evaluate a schema placeholder");
        case PKind::and_:
            return t_and(eval_twist_prop(f->a, valuation), eval_twist_prop(f->b, valuation));
        case PKind::or_:
            return t_or(eval_twist_prop(f->a, valuation), eval_twist_prop(f->b, valuation));
        case PKind::imp:
            return t_imp(eval_twist_prop(f->a, valuation), eval_twist_prop(f->b, valuation));
        case PKind::snot: return t_snot(eval_twist_prop(f->a, valuation));
        case PKind::pneg: return t_neg(eval_twist_prop(f->a, valuation));
    }
    throw eval_error("corrupt formula");
}

}  // namespace

TwistVal eval_prop(const Matrix& m, const PForm& f,
                   const std::map<std::string, TwistVal>& valuation) {
    if (m.three_valued) {
        std::map<std::string, Tri> tri_val;
        for (const auto& [k, v] : valuation) tri_val.emplace(k, twist_to_tri(v));
        return tri_to_twist(eval_tri(f, tri_val));
    }
    return eval_twist_prop(f, valuation);
}

namespace {

// |values|^k with saturation; reports overflow through the bool.
std::pair<std::uint64_t, bool> checked_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) return {UINT64_MAX, true};
        r *= base;
    }
    return {r, false};
}

// Runs `body` for every valuation of `vars` (last variable fastest).
template <typename Body>
void for_each_valuation(const std::vector<std::string>& vars,
                        const std::vector<TwistVal>& values, Body&& body) {
    std::map<std::string, TwistVal> valuation;
    std::vector<std::size_t> odo(vars.size(), 0);
    for (const std::string& v : vars) valuation.emplace(v, values[0]);
    while (true) {
        if (!body(valuation)) return;
        std::size_t k = vars.size();
        while (k > 0) {
            --k;
            if (++odo[k] < values.size()) {
                valuation[vars[k]] = values[odo[k]];
                break;
            }
            odo[k] = 0;
            valuation[vars[k]] = values[0];
            if (k == 0) return;
        }
        if (vars.empty()) return;
    }
}

void check_budget(const Matrix& m, std::size_t nvars, std::uint64_t budget) {
    auto [count, overflow] = checked_pow(matrix_values(m).size(), nvars);
    if (overflow || count > budget)
        throw budget_error("valuation sweep needs " +
                               (overflow ? std::string("more than 2^64")
                                         : std::to_string(count)) +
                               " valuations, budget is " + std::to_string(budget),
                           count, overflow);
}

}  // namespace

TautVerdict is_tautology(const Matrix& m, const PForm& f, std::uint64_t budget) {
    TautVerdict verdict;
    verdict.vars = prop_vars(f);
    check_budget(m, verdict.vars.size(), budget);
    const auto values = matrix_values(m);
    for_each_valuation(verdict.vars, values, [&](const auto& valuation) {
        if (!is_designated(eval_prop(m, f, valuation))) {
            verdict.tautology = false;
            for (const std::string& v : verdict.vars)
                verdict.countervaluation.push_back(valuation.at(v));
            return false;
        }
        return true;
    });
    return verdict;
}

TautVerdict matrix_consequence(const Matrix& m, const std::vector<PForm>& premises,
                               const PForm& conclusion, std::uint64_t budget) {
    TautVerdict verdict;
    std::set<std::string> vars;
    for (const PForm& p : premises) collect_vars(p, vars);
    collect_vars(conclusion, vars);
    verdict.vars.assign(vars.begin(), vars.end());
    check_budget(m, verdict.vars.size(), budget);
    const auto values = matrix_values(m);
    for_each_valuation(verdict.vars, values, [&](const auto& valuation) {
        for (const PForm& p : premises)
            if (!is_designated(eval_prop(m, p, valuation))) return true;
        if (!is_designated(eval_prop(m, conclusion, valuation))) {
            verdict.tautology = false;
            for (const std::string& v : verdict.vars)
                verdict.countervaluation.push_back(valuation.at(v));
            return false;
        }
        return true;
    });
    return verdict;
}

}  // namespace twistset

#include "twistset/fol.hpp"

#include "lexer.hpp"

namespace twistset {

Term tvar(const std::string& name) { return Term{TermKind::var, name, 0}; }
Term tconst(std::uint32_t id) { return Term{TermKind::cst, "", id}; }
Term tempty() { return Term{TermKind::empty, "", 0}; }

namespace {

FForm fnode(FKind k, FForm a = nullptr, FForm b = nullptr) {
    auto f = std::make_shared<FOFormula>();
    f->kind = k;
    f->a = std::move(a);
    f->b = std::move(b);
    return f;
}

}  // namespace

FForm fmem(Term element, Term container) {
    auto f = std::make_shared<FOFormula>();
    f->kind = FKind::mem;
    f->t1 = std::move(element);
    f->t2 = std::move(container);
    return f;
}

FForm feq(Term lhs, Term rhs) {
    auto f = std::make_shared<FOFormula>();
    f->kind = FKind::eq;
    f->t1 = std::move(lhs);
    f->t2 = std::move(rhs);
    return f;
}

FForm fand(FForm a, FForm b) { return fnode(FKind::and_, std::move(a), std::move(b)); }
FForm for_(FForm a, FForm b) { return fnode(FKind::or_, std::move(a), std::move(b)); }
FForm fimp(FForm a, FForm b) { return fnode(FKind::imp, std::move(a), std::move(b)); }
FForm fsimp(FForm a, FForm b) { return fnode(FKind::simp, std::move(a), std::move(b)); }
FForm fsnot(FForm a) { return fnode(FKind::snot, std::move(a)); }
FForm fpneg(FForm a) { return fnode(FKind::pneg, std::move(a)); }

FForm fforall(const std::string& var, FForm body) {
    auto f = std::make_shared<FOFormula>();
    f->kind = FKind::forall;
    f->var = var;
    f->a = std::move(body);
    return f;
}

FForm fexists(const std::string& var, FForm body) {
    auto f = std::make_shared<FOFormula>();
    f->kind = FKind::exists;
    f->var = var;
    f->a = std::move(body);
    return f;
}

FForm fcirc(FForm a) { return fsnot(fand(a, fpneg(a))); }
FForm fiff(FForm a, FForm b) { return fand(fimp(a, b), fimp(b, a)); }

FForm fbounded_forall(const std::string& var, Term bound, FForm body) {
    return fforall(var, fimp(fmem(tvar(var), std::move(bound)), std::move(body)));
}

FForm fbounded_exists(const std::string& var, Term bound, FForm body) {
    return fexists(var, fand(fmem(tvar(var), std::move(bound)), std::move(body)));
}

bool fo_equal(const FForm& a, const FForm& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case FKind::mem:
        case FKind::eq: return a->t1 == b->t1 && a->t2 == b->t2;
        case FKind::snot:
        case FKind::pneg: return fo_equal(a->a, b->a);
        case FKind::forall:
        case FKind::exists: return a->var == b->var && fo_equal(a->a, b->a);
        default: return fo_equal(a->a, b->a) && fo_equal(a->b, b->b);
    }
}

// ---------------------------------------------------------------------------
// parsing

namespace {

using detail::Tok;
using detail::TokenCursor;

FForm parse_fo_formula(TokenCursor& cur);

Term parse_term(TokenCursor& cur) {
    const detail::Token& t = cur.peek();
    switch (t.kind) {
        case Tok::ident: return tvar(cur.get().text);
        case Tok::kw_empty: cur.get(); return tempty();
        case Tok::hash: {
            cur.get();
            detail::Token num = cur.expect(Tok::integer, "element id after '#'");
            if (num.value > UINT32_MAX)
                throw parse_error("element id out of range", num.line, num.column);
            return tconst(static_cast<std::uint32_t>(num.value));
        }
        default:
            throw parse_error("expected a term, got '" +
                                  (t.kind == Tok::end ? "<end>" : t.text) + "'",
                              t.line, t.column);
    }
}

FForm parse_quantifier(TokenCursor& cur) {
    const bool universal = cur.get().kind == Tok::kw_forall;
    detail::Token v = cur.expect(Tok::ident, "quantified variable");
    if (cur.accept(Tok::kw_in)) {
        Term bound = parse_term(cur);
        if (bound.kind == TermKind::var && bound.name == v.text)
            throw parse_error("bound term mentions the quantified variable", v.line, v.column);
        cur.expect(Tok::dot, "'.' after quantifier");
        FForm body = parse_fo_formula(cur);  // scope runs to the end
        return universal ? fbounded_forall(v.text, bound, body)
                         : fbounded_exists(v.text, bound, body);
    }
    cur.expect(Tok::dot, "'.' after quantifier");
    FForm body = parse_fo_formula(cur);
    return universal ? fforall(v.text, body) : fexists(v.text, body);
}

FForm parse_fo_prefix(TokenCursor& cur) {
    const detail::Token& t = cur.peek();
    switch (t.kind) {
        case Tok::tilde: cur.get(); return fsnot(parse_fo_prefix(cur));
        case Tok::bang: cur.get(); return fpneg(parse_fo_prefix(cur));
        case Tok::circ: cur.get(); return fcirc(parse_fo_prefix(cur));
        case Tok::kw_forall:
        case Tok::kw_exists: return parse_quantifier(cur);
        case Tok::lparen: {
            cur.get();
            FForm f = parse_fo_formula(cur);
            cur.expect(Tok::rparen, "')'");
            return f;
        }
        case Tok::ident:
        case Tok::kw_empty:
        case Tok::hash: {
            Term lhs = parse_term(cur);
            const detail::Token& op = cur.peek();
            if (cur.accept(Tok::kw_in)) return fmem(lhs, parse_term(cur));
            if (cur.accept(Tok::eq)) return feq(lhs, parse_term(cur));
            throw parse_error("expected 'in' or '=' after term", op.line, op.column);
        }
        default:
            throw parse_error("expected a formula, got '" +
                                  (t.kind == Tok::end ? "<end>" : t.text) + "'",
                              t.line, t.column);
    }
}

FForm parse_fo_and(TokenCursor& cur) {
    FForm f = parse_fo_prefix(cur);
    while (cur.accept(Tok::amp)) f = fand(f, parse_fo_prefix(cur));
    return f;
}

FForm parse_fo_or(TokenCursor& cur) {
    FForm f = parse_fo_and(cur);
    while (cur.accept(Tok::pipe)) f = for_(f, parse_fo_and(cur));
    return f;
}

FForm parse_fo_formula(TokenCursor& cur) {
    FForm lhs = parse_fo_or(cur);
    if (cur.accept(Tok::arrow)) return fimp(lhs, parse_fo_formula(cur));
    if (cur.accept(Tok::darrow)) return fsimp(lhs, parse_fo_formula(cur));
    if (cur.accept(Tok::iff)) return fiff(lhs, parse_fo_formula(cur));
    return lhs;
}

}  // namespace

FForm parse_formula(const std::string& text) {
    auto toks = detail::lex(text);
    TokenCursor cur{&toks};
    FForm f = parse_fo_formula(cur);
    const detail::Token& t = cur.peek();
    if (t.kind != Tok::end)
        throw parse_error("unexpected trailing '" + t.text + "'", t.line, t.column);
    return f;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string render_term(const Term& t) {
    switch (t.kind) {
        case TermKind::var: return t.name;
        case TermKind::cst: return "#" + std::to_string(t.id);
        case TermKind::empty: return "empty";
    }
    return "?";
}

// precedence: quantifiers 0 < implications 1 < | 2 < & 3 < prefix/atoms 4
int fo_prec(const FForm& f) {
    switch (f->kind) {
        case FKind::forall:
        case FKind::exists: return 0;
        case FKind::imp:
        case FKind::simp: return 1;
        case FKind::or_: return 2;
        case FKind::and_: return 3;
        default: return 4;
    }
}

void render_rec(const FForm& f, int parent_prec, std::string& out) {
    const int prec = fo_prec(f);
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (f->kind) {
        case FKind::mem:
            out += render_term(f->t1) + " in " + render_term(f->t2);
            break;
        case FKind::eq:
            out += render_term(f->t1) + " = " + render_term(f->t2);
            break;
        case FKind::snot:
            out += '~';
            render_rec(f->a, 4, out);
            break;
        case FKind::pneg:
            out += '!';
            render_rec(f->a, 4, out);
            break;
        case FKind::and_:
            render_rec(f->a, 3, out);
            out += " & ";
            render_rec(f->b, 4, out);
            break;
        case FKind::or_:
            render_rec(f->a, 2, out);
            out += " | ";
            render_rec(f->b, 3, out);
            break;
        case FKind::imp:
        case FKind::simp:
            render_rec(f->a, 2, out);
            out += (f->kind == FKind::imp) ? " -> " : " => ";
            render_rec(f->b, 1, out);
            break;
        case FKind::forall:
        case FKind::exists:
            out += (f->kind == FKind::forall) ? "forall " : "exists ";
            out += f->var + " . ";
            render_rec(f->a, 0, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string render(const FForm& f) {
    std::string out;
    render_rec(f, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// classification and substitution

namespace {

void free_vars_rec(const FForm& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f->kind) {
        case FKind::mem:
        case FKind::eq:
            for (const Term* t : {&f->t1, &f->t2})
                if (t->kind == TermKind::var && !bound.count(t->name)) out.insert(t->name);
            return;
        case FKind::snot:
        case FKind::pneg: free_vars_rec(f->a, bound, out); return;
        case FKind::forall:
        case FKind::exists: {
            const bool already = bound.count(f->var) > 0;
            bound.insert(f->var);
            free_vars_rec(f->a, bound, out);
            if (!already) bound.erase(f->var);
            return;
        }
        default:
            free_vars_rec(f->a, bound, out);
            free_vars_rec(f->b, bound, out);
            return;
    }
}

}  // namespace

std::set<std::string> free_vars(const FForm& f) {
    std::set<std::string> bound, out;
    free_vars_rec(f, bound, out);
    return out;
}

bool is_pure(const FForm& f) {
    switch (f->kind) {
        case FKind::mem:
        case FKind::eq: return true;
        case FKind::pneg: return false;
        case FKind::snot:
        case FKind::forall:
        case FKind::exists: return is_pure(f->a);
        default: return is_pure(f->a) && is_pure(f->b);
    }
}

namespace {

bool restricted_rec(const FForm& f) {
    switch (f->kind) {
        case FKind::mem:
        case FKind::eq: return true;
        case FKind::snot: return restricted_rec(f->a);
        case FKind::pneg: return false;  // unreachable behind the purity gate
        case FKind::and_:
        case FKind::or_:
        case FKind::imp:
        case FKind::simp: return restricted_rec(f->a) && restricted_rec(f->b);
        case FKind::forall:
        case FKind::exists: {
            // body must be `x in t -> ...` (forall) or `x in t & ...` (exists)
            const FForm& body = f->a;
            const FKind glue = (f->kind == FKind::forall) ? FKind::imp : FKind::and_;
            if (body->kind != glue) return false;
            const FForm& guard = body->a;
            if (guard->kind != FKind::mem) return false;
            if (guard->t1.kind != TermKind::var || guard->t1.name != f->var) return false;
            if (guard->t2.kind == TermKind::var && guard->t2.name == f->var) return false;
            return restricted_rec(body->b);
        }
    }
    return false;
}

}  // namespace

bool is_restricted(const FForm& f) {
    if (!is_pure(f))
        throw std::invalid_argument("restrictedness is only defined for pure formulas");
    return restricted_rec(f);
}

namespace {

Term subst_term(const Term& t, const std::string& var, const Term& replacement) {
    if (t.kind == TermKind::var && t.name == var) return replacement;
    return t;
}

FForm subst_rec(const FForm& f, const std::string& var, const Term& replacement) {
    switch (f->kind) {
        case FKind::mem:
            return fmem(subst_term(f->t1, var, replacement), subst_term(f->t2, var, replacement));
        case FKind::eq:
            return feq(subst_term(f->t1, var, replacement), subst_term(f->t2, var, replacement));
        case FKind::snot: return fsnot(subst_rec(f->a, var, replacement));
        case FKind::pneg: return fpneg(subst_rec(f->a, var, replacement));
        case FKind::and_:
            return fand(subst_rec(f->a, var, replacement), subst_rec(f->b, var, replacement));
        case FKind::or_:
            return for_(subst_rec(f->a, var, replacement), subst_rec(f->b, var, replacement));
        case FKind::imp:
            return fimp(subst_rec(f->a, var, replacement), subst_rec(f->b, var, replacement));
        case FKind::simp:
            return fsimp(subst_rec(f->a, var, replacement), subst_rec(f->b, var, replacement));
        case FKind::forall:
        case FKind::exists: {
            if (f->var == var) return f;  // occurrence is bound here
            if (replacement.kind == TermKind::var && replacement.name == f->var &&
                free_vars(f->a).count(var))
                throw std::invalid_argument("substitution would capture variable '" +
                                            replacement.name + "'");
            FForm body = subst_rec(f->a, var, replacement);
            return (f->kind == FKind::forall) ? fforall(f->var, body) : fexists(f->var, body);
        }
    }
    return f;
}

}  // namespace

FForm substitute(const FForm& f, const std::string& var, const Term& replacement) {
    return subst_rec(f, var, replacement);
}

}  // namespace twistset

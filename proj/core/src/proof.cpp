#include <array>
#include <sstream>

#include "prop_parser.hpp"

// Hilbert calculus: the sixteen axiom schemas and the proof-script checker.

namespace twistset {

namespace {

PForm meta(int i) {
    auto f = std::make_shared<PropFormula>();
    f->kind = PKind::meta;
    f->meta = i;
    return f;
}

struct Schema {
    std::string name;
    PForm pattern;
};

// Biconditional schemas are stored in their expanded form, matching what the
// parser produces for `<->`.
const std::vector<Schema>& schemas() {
    static const std::vector<Schema> table = [] {
        PForm A = meta(0), B = meta(1), C = meta(2);
        std::vector<Schema> s;
        s.push_back({"Ax1", pimp(A, pimp(B, A))});
        s.push_back({"Ax2", pimp(pimp(A, pimp(B, C)), pimp(pimp(A, B), pimp(A, C)))});
        s.push_back({"Ax3", pimp(A, pimp(B, pand(A, B)))});
        s.push_back({"Ax4", pimp(pand(A, B), A)});
        s.push_back({"Ax5", pimp(pand(A, B), B)});
        s.push_back({"Ax6", pimp(A, por(A, B))});
        s.push_back({"Ax7", pimp(B, por(A, B))});
        s.push_back({"Ax8", pimp(pimp(A, C), pimp(pimp(B, C), pimp(por(A, B), C)))});
        s.push_back({"Ax9", por(A, pimp(A, B))});
        s.push_back({"TND", por(A, psnot(A))});
        s.push_back({"exp", pimp(A, pimp(psnot(A), B))});
        s.push_back({"TNDn", por(A, ppneg(A))});
        s.push_back({"dneg", piff(ppneg(ppneg(A)), A)});
        s.push_back({"negor", piff(ppneg(por(A, B)), pand(ppneg(A), ppneg(B)))});
        s.push_back({"negand", piff(ppneg(pand(A, B)), por(ppneg(A), ppneg(B)))});
        s.push_back({"negimp", piff(ppneg(pimp(A, B)), pand(A, ppneg(B)))});
        return s;
    }();
    return table;
}

bool match_pattern(const PForm& pattern, const PForm& target,
                   std::array<PForm, 3>& binding) {
    if (pattern->kind == PKind::meta) {
        PForm& slot = binding[static_cast<std::size_t>(pattern->meta)];
        if (!slot) {
            slot = target;
            return true;
        }
        return prop_equal(slot, target);
    }
    if (pattern->kind != target->kind) return false;
    switch (pattern->kind) {
        case PKind::var: return pattern->name == target->name;
        case PKind::snot:
        case PKind::pneg: return match_pattern(pattern->a, target->a, binding);
        default:
            return match_pattern(pattern->a, target->a, binding) &&
                   match_pattern(pattern->b, target->b, binding);
    }
}

bool instantiates(const PForm& pattern, const PForm& target) {
    std::array<PForm, 3> binding{};
    return match_pattern(pattern, target, binding);
}

}  // namespace

const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Schema& s : schemas()) out.push_back(s.name);
        return out;
    }();
    return names;
}

PForm axiom_pattern(const std::string& name) {
    for (const Schema& s : schemas())
        if (s.name == name) return s.pattern;
    throw std::invalid_argument("unknown axiom schema '" + name + "'");
}

std::optional<std::string> match_axiom(const PForm& f) {
    for (const Schema& s : schemas())
        if (instantiates(s.pattern, f)) return s.name;
    return std::nullopt;
}

bool matches_axiom(const std::string& name, const PForm& f) {
    return instantiates(axiom_pattern(name), f);
}

// ---------------------------------------------------------------------------
// proof scripts

namespace {

bool is_axiom_name(const std::string& name) {
    for (const Schema& s : schemas())
        if (s.name == name) return true;
    return false;
}

}  // namespace

ProofScript parse_proof_script(const std::string& text) {
    ProofScript script;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // skip blank lines
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        const std::size_t semi = line.find(';');
        if (semi == std::string::npos)
            throw parse_error("missing ';' before justification", line_no,
                              static_cast<int>(line.size()) + 1);

        auto head_toks = detail::lex(line.substr(0, semi), line_no);
        detail::TokenCursor cur{&head_toks};

        ProofLine pl;
        detail::Token idx = cur.expect(detail::Tok::integer, "line index");
        pl.index = static_cast<int>(idx.value);
        cur.expect(detail::Tok::dot, "'.' after line index");

        // the formula part reuses the propositional grammar
        pl.formula = detail::parse_prop_cursor(cur);
        if (!cur.at(detail::Tok::end)) {
            const detail::Token& t = cur.peek();
            throw parse_error("unexpected '" + t.text + "' after formula", line_no, t.column);
        }

        auto just_toks = detail::lex(line.substr(semi + 1), line_no);
        detail::TokenCursor jcur{&just_toks};
        detail::Token jt = jcur.expect(detail::Tok::ident, "justification");
        pl.justification = jt.text;
        if (jt.text == "MP") {
            pl.ref_major = static_cast<int>(jcur.expect(detail::Tok::integer, "premise index").value);
            pl.ref_minor = static_cast<int>(jcur.expect(detail::Tok::integer, "premise index").value);
        }
        if (!jcur.at(detail::Tok::end)) {
            const detail::Token& t = jcur.peek();
            throw parse_error("unexpected trailing '" + t.text + "' in justification", line_no,
                              t.column);
        }

        const int expected = static_cast<int>(script.lines.size()) + 1;
        if (pl.index != expected)
            throw parse_error("line index " + std::to_string(pl.index) + " out of order (expected " +
                                  std::to_string(expected) + ")",
                              line_no, idx.column);
        script.lines.push_back(std::move(pl));
    }
    return script;
}

ProofVerdict check_proof(const ProofScript& script) {
    for (std::size_t k = 0; k < script.lines.size(); ++k) {
        const ProofLine& pl = script.lines[k];
        const int here = static_cast<int>(k) + 1;
        if (pl.justification == "MP") {
            if (pl.ref_major <= 0 || pl.ref_major >= here || pl.ref_minor <= 0 ||
                pl.ref_minor >= here)
                return {false, here, "MP references must point to earlier lines"};
            const PForm& major = script.lines[static_cast<std::size_t>(pl.ref_major - 1)].formula;
            const PForm& minor = script.lines[static_cast<std::size_t>(pl.ref_minor - 1)].formula;
            if (major->kind != PKind::imp)
                return {false, here,
                        "MP major premise (line " + std::to_string(pl.ref_major) +
                            ") is not an implication"};
            if (!prop_equal(major->a, minor))
                return {false, here,
                        "MP minor premise does not match the antecedent of line " +
                            std::to_string(pl.ref_major)};
            if (!prop_equal(major->b, pl.formula))
                return {false, here, "formula is not the consequent of line " +
                                         std::to_string(pl.ref_major)};
        } else if (is_axiom_name(pl.justification)) {
            if (!matches_axiom(pl.justification, pl.formula))
                return {false, here,
                        "formula is not an instance of " + pl.justification};
        } else {
            return {false, here, "unknown justification '" + pl.justification + "'"};
        }
    }
    return {};
}

}  // namespace twistset

// Acceptance gate: seventeen end-to-end criteria, one PASS/FAIL line each.
// Exit code is the number of failed criteria.  Thresholds and time limits
// are pinned here; a red line means the behavior regressed, not the gate.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "twistset/boolalg.hpp"
#include "twistset/errors.hpp"
#include "twistset/evaluator.hpp"
#include "twistset/fol.hpp"
#include "twistset/lab.hpp"
#include "twistset/proplogic.hpp"
#include "twistset/twist.hpp"
#include "twistset/universe.hpp"

namespace {

using namespace twistset;

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw check_failure(msg);
}

TwistVal wval(const WitnessConstruction& w, const std::string& label) {
    for (const auto& [l, v] : w.values)
        if (l == label) return v;
    throw check_failure("witness value missing: " + label);
}

EvalContext make_ctx(UniverseStore& st, Semantics s, std::vector<elem_id> carrier) {
    return EvalContext{&st, s, std::move(carrier), true, {}};
}

// ---------------------------------------------------------------------------
// 1. the three-valued tables, against an independently written oracle

const Tri kTri[3] = {Tri::one, Tri::half, Tri::zero};

void criterion_truth_tables() {
    // rows/columns ordered 1, 1/2, 0
    const Tri and_t[3][3] = {{Tri::one, Tri::half, Tri::zero},
                             {Tri::half, Tri::half, Tri::zero},
                             {Tri::zero, Tri::zero, Tri::zero}};
    const Tri or_t[3][3] = {{Tri::one, Tri::one, Tri::one},
                            {Tri::one, Tri::half, Tri::half},
                            {Tri::one, Tri::half, Tri::zero}};
    const Tri imp_t[3][3] = {{Tri::one, Tri::half, Tri::zero},
                             {Tri::one, Tri::half, Tri::zero},
                             {Tri::one, Tri::one, Tri::one}};
    const Tri snot_t[3] = {Tri::zero, Tri::zero, Tri::one};
    const Tri pneg_t[3] = {Tri::zero, Tri::half, Tri::one};
    const Tri circ_t[3] = {Tri::one, Tri::zero, Tri::one};

    int entries = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            require(tri_and(kTri[i], kTri[j]) == and_t[i][j], "conjunction table mismatch");
            require(tri_or(kTri[i], kTri[j]) == or_t[i][j], "disjunction table mismatch");
            require(tri_imp(kTri[i], kTri[j]) == imp_t[i][j], "implication table mismatch");
            entries += 3;
        }
        require(tri_snot(kTri[i]) == snot_t[i], "strong negation table mismatch");
        require(tri_pneg(kTri[i]) == pneg_t[i], "paraconsistent negation table mismatch");
        require(tri_circ(kTri[i]) == circ_t[i], "consistency operator table mismatch");
        entries += 3;
    }
    require(entries == 36, "entry count");
}

// ---------------------------------------------------------------------------
// 2. twist operations over one atom agree with the tables

void criterion_twist_matrix_agreement() {
    for (Tri t : kTri) require(twist_to_tri(tri_to_twist(t)) == t, "identification not bijective");
    for (Tri x : kTri) {
        TwistVal tx = tri_to_twist(x);
        require(twist_to_tri(t_snot(tx)) == tri_snot(x), "strong negation disagrees");
        require(twist_to_tri(t_neg(tx)) == tri_pneg(x), "paraconsistent negation disagrees");
        require(twist_to_tri(t_circ(tx)) == tri_circ(x), "consistency operator disagrees");
        for (Tri y : kTri) {
            TwistVal ty = tri_to_twist(y);
            require(twist_to_tri(t_and(tx, ty)) == tri_and(x, y), "conjunction disagrees");
            require(twist_to_tri(t_or(tx, ty)) == tri_or(x, y), "disjunction disagrees");
            require(twist_to_tri(t_imp(tx, ty)) == tri_imp(x, y), "implication disagrees");
        }
    }
}

// ---------------------------------------------------------------------------
// 3. all sixteen axiom schemas are sound; modus ponens preserves designation

void collect_metas(const PForm& f, std::vector<int>& out) {
    if (!f) return;
    if (f->kind == PKind::meta) {
        for (int m : out)
            if (m == f->meta) return;
        out.push_back(f->meta);
        return;
    }
    collect_metas(f->a, out);
    collect_metas(f->b, out);
}

PForm subst_meta(const PForm& f, const std::map<int, PForm>& m) {
    switch (f->kind) {
        case PKind::var: return f;
        case PKind::meta: return m.at(f->meta);
        case PKind::and_: return pand(subst_meta(f->a, m), subst_meta(f->b, m));
        case PKind::or_: return por(subst_meta(f->a, m), subst_meta(f->b, m));
        case PKind::imp: return pimp(subst_meta(f->a, m), subst_meta(f->b, m));
        case PKind::snot: return psnot(subst_meta(f->a, m));
        case PKind::pneg: return ppneg(subst_meta(f->a, m));
    }
    throw check_failure("unknown formula node");
}

void criterion_soundness() {
    const std::vector<std::string>& names = axiom_names();
    require(names.size() == 16, "expected sixteen axiom schemas");

    std::vector<Matrix> matrices{mpt0_matrix()};
    for (int n = 1; n <= 3; ++n) matrices.push_back(twist_matrix(make_powerset_algebra(n)));

    PForm vars[2] = {pvar("p"), pvar("q")};
    for (const std::string& name : names) {
        PForm pat = axiom_pattern(name);
        std::vector<int> metas;
        collect_metas(pat, metas);
        require(!metas.empty() && metas.size() <= 3, "schema arity out of range: " + name);
        for (unsigned combo = 0; combo < (1u << metas.size()); ++combo) {
            std::map<int, PForm> m;
            for (size_t i = 0; i < metas.size(); ++i) m[metas[i]] = vars[(combo >> i) & 1u];
            PForm inst = subst_meta(pat, m);
            for (const Matrix& mat : matrices)
                require(is_tautology(mat, inst).tautology,
                        name + " instance not a tautology: " + render_prop(inst));
        }
    }

    // modus ponens: designated x and designated x -> y force designated y
    for (Tri x : kTri)
        for (Tri y : kTri)
            if (tri_designated(x) && tri_designated(tri_imp(x, y)))
                require(tri_designated(y), "three-valued modus ponens leak");
    for (int n = 1; n <= 3; ++n) {
        std::vector<TwistVal> dom = twist_domain(make_powerset_algebra(n));
        for (const TwistVal& x : dom)
            for (const TwistVal& y : dom)
                if (is_designated(x) && is_designated(t_imp(x, y)))
                    require(is_designated(y), "twist modus ponens leak");
    }
}

// ---------------------------------------------------------------------------
// 4. paraconsistency: explosion fails, the consistency operator restores it

void criterion_paraconsistency() {
    Matrix m = mpt0_matrix();
    TautVerdict v = is_tautology(m, parse_prop("(p & !p) -> q"));
    require(!v.tautology, "explosion unexpectedly valid");
    require(v.vars == std::vector<std::string>{"p", "q"}, "countervaluation variables");
    BoolAlg a = make_powerset_algebra(1);
    require(v.countervaluation[0] == tv_half(a) && v.countervaluation[1] == tv_zero(a),
            "countervaluation is not (1/2, 0)");

    std::vector<PForm> premises{parse_prop("O p"), parse_prop("p"), parse_prop("!p")};
    require(matrix_consequence(m, premises, parse_prop("q")).tautology,
            "gentle explosion does not hold");
}

// ---------------------------------------------------------------------------
// 5. twist domain size is 3^n

void criterion_twist_domain_count() {
    std::uint64_t expect = 1;
    for (int n = 1; n <= 4; ++n) {
        expect *= 3;
        require(twist_domain(make_powerset_algebra(n)).size() == expect,
                "twist domain size at n=" + std::to_string(n));
    }
}

// ---------------------------------------------------------------------------
// 6. bounded-universe counts over one atom

void criterion_universe_counts() {
    BoolAlg a = make_powerset_algebra(1);
    UniverseStore s2(a);
    require(enumerate_rank(s2, 2, 1u << 20).size() == 4, "|V_2| != 4");
    UniverseStore s3(a);
    std::size_t v3 = enumerate_rank(s3, 3, 1u << 20).size();
    require(v3 == 256, "|V_3| != 256");
    // closed form: each level has (1 + |T|)^{previous level size} elements
    std::uint64_t predicted = 1;
    for (int i = 0; i < 4; ++i) predicted *= 4;
    require(v3 == predicted, "level formula disagrees");
}

// ---------------------------------------------------------------------------
// 7. no element is a member of itself

void criterion_regularity() {
    {
        BoolAlg a = make_powerset_algebra(1);
        UniverseStore st(a);
        std::vector<elem_id> ids = enumerate_rank(st, 3, 1u << 20);
        EvalContext ctx = make_ctx(st, Semantics::lpt0, ids);
        require(check_regularity(ctx, ids).pass, "self-membership at one atom");
    }
    {
        BoolAlg a = make_powerset_algebra(2);
        UniverseStore st(a);
        std::vector<elem_id> ids = enumerate_rank(st, 2, 1u << 20);
        EvalContext ctx = make_ctx(st, Semantics::lpt0, ids);
        require(check_regularity(ctx, ids).pass, "self-membership at two atoms");
    }
}

// ---------------------------------------------------------------------------
// 8. equality laws, exhaustively at small rank

void criterion_basic_identities() {
    BoolAlg a = make_powerset_algebra(1);
    UniverseStore st(a);
    std::vector<elem_id> all = enumerate_rank(st, 3, 1u << 20);
    std::vector<elem_id> small;
    for (elem_id id : all)
        if (st.rank(id) <= 2) small.push_back(id);
    EvalContext ctx = make_ctx(st, Semantics::lpt0, all);
    CheckReport r = check_basic_identities(ctx, all, small, 0, 0);
    require(r.pass, "identity laws: " + r.detail);

    CheckReport leibniz = run_suite_check("leibniz", CheckParams{});
    require(leibniz.pass, "pure substitutivity: " + leibniz.detail);
}

// ---------------------------------------------------------------------------
// 9. the half-weighted singleton is a designated inconsistency

void criterion_inconsistent_set() {
    for (int n = 1; n <= 3; ++n) {
        BoolAlg a = make_powerset_algebra(n);
        for (Semantics s : {Semantics::lpt0, Semantics::ps3}) {
            UniverseStore st(a);
            std::vector<elem_id> ids = enumerate_rank(st, 2, 1u << 20);
            EvalContext ctx = make_ctx(st, s, ids);
            WitnessConstruction w = build_witness("u-incons", ctx);
            require(w.pass, "witness failed at n=" + std::to_string(n));
            TwistVal self = wval(w, "u ~ u");
            if (s == Semantics::lpt0) {
                require(self == tv_half(a), "self-equality is not 1/2");
                require(wval(w, "(forall x . x = x) & !(forall x . x = x)") == tv_half(a),
                        "designated contradiction is not 1/2");
            } else {
                require(self == tv_one(a), "self-equality is not 1 under ps3");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// 10. substitutivity failure reproduces the exact value chain

void criterion_leibniz_failure() {
    for (int n = 1; n <= 3; ++n) {
        BoolAlg a = make_powerset_algebra(n);
        UniverseStore st(a);
        std::vector<elem_id> ids = enumerate_rank(st, 2, 1u << 20);
        EvalContext ctx = make_ctx(st, Semantics::lpt0, ids);
        WitnessConstruction w = build_witness("fail-leibniz", ctx);
        require(w.pass, "witness failed at n=" + std::to_string(n));
        require(wval(w, "w in u") == tv_half(a), "chain[0]");
        require(wval(w, "w in v") == tv_one(a), "chain[1]");
        require(wval(w, "u ~ v") == tv_half(a), "chain[2]");
        require(wval(w, "!(w in u)") == tv_half(a), "chain[3]");
        require(wval(w, "!(w in v)") == tv_zero(a), "chain[4]");
        require(wval(w, "(u ~ v) & !(w in u) -> !(w in v)") == tv_zero(a), "final value");
    }
}

// ---------------------------------------------------------------------------
// 11. bounded-quantifier normal forms: the failure and the pure-formula law

void criterion_bounded_quantifiers() {
    BoolAlg a = make_powerset_algebra(1);
    for (Semantics s : {Semantics::lpt0, Semantics::ps3}) {
        UniverseStore st(a);
        std::vector<elem_id> ids = enumerate_rank(st, 2, 1u << 20);
        EvalContext ctx = make_ctx(st, s, ids);
        WitnessConstruction w = build_witness("ebq", ctx);
        require(w.pass, "normal-form failure witness did not pass");
        require(ba_is_top(wval(w, "exists x in u . !(w in x)").z1), "existential lhs");
        require(ba_is_bottom(wval(w, "join over dom(u)").z1), "existential rhs");
        require(ba_is_bottom(wval(w, "forall x in u . ~!(w in x)").z1), "universal lhs");
        require(ba_is_top(wval(w, "meet over dom(u)").z1), "universal rhs");
    }
    CheckReport bq = run_suite_check("bq", CheckParams{});
    require(bq.pass, "pure normal forms: " + bq.detail);
}

// ---------------------------------------------------------------------------
// 12. mixing lemma draws and the maximum principle

void criterion_mixing_maximum() {
    CheckReport mixing = run_suite_check("mixing", CheckParams{});
    require(mixing.pass, "mixing draws: " + mixing.detail);

    CheckParams p;
    p.atoms = 2;
    p.rank = 2;
    CheckReport mpl = run_suite_check("maximum-principle", p);
    require(mpl.pass, "maximum principle: " + mpl.detail);
}

// ---------------------------------------------------------------------------
// 13. one implication satisfies P1-P3, the other fails P1 at (1, 1/2, 1/2)

void criterion_reasonable_implication() {
    for (int n = 1; n <= 2; ++n) {
        CheckParams p;
        p.atoms = n;
        CheckReport r = run_suite_check("reasonable-implication", p);
        require(r.pass, "implication conditions at n=" + std::to_string(n) + ": " + r.detail);
    }
    // the canonical counterexample, checked directly: at (1, 1/2, 1/2) the
    // meet lands below u but 1 is not below 1/2 -> 1/2
    BoolAlg a = make_powerset_algebra(1);
    TwistVal one = tv_one(a), half = tv_half(a);
    require(t_leq(t_and(one, half), half), "meet not below u");
    require(!t_leq(one, t_imp(half, half)), "residuation direction unexpectedly holds");
    ImplicationReport rep = check_reasonable_implication(a, Semantics::lpt0);
    require(!rep.holds && rep.condition == 1, "weak implication should fail P1");
    require(rep.z && *rep.z == one && rep.w && *rep.w == half && rep.u && *rep.u == half,
            "failure triple is not (1, 1/2, 1/2)");
    require(check_reasonable_implication(a, Semantics::ps3).holds, "strong implication fails");
}

// ---------------------------------------------------------------------------
// 14. canonical embeddings of hereditarily finite sets

void criterion_check_names() {
    CheckReport r = run_suite_check("check-names", CheckParams{});
    require(r.pass, r.detail);
}

// ---------------------------------------------------------------------------
// 15. set-theoretic axiom instances, both semantics, both small algebras

void criterion_zf_instances() {
    for (int n = 1; n <= 2; ++n) {
        BoolAlg a = make_powerset_algebra(n);
        for (Semantics s : {Semantics::lpt0, Semantics::ps3}) {
            UniverseStore st(a);
            std::vector<elem_id> ids = enumerate_rank(st, 2, 1u << 20);
            EvalContext ctx = make_ctx(st, s, ids);
            CheckReport r = zf_instance_checks(ctx, ids, ids);
            require(r.pass, "axiom instance failed at n=" + std::to_string(n) + ": " + r.detail);
        }
    }
}

// ---------------------------------------------------------------------------
// 16. the consistency predicate separates exact from inexact singletons

void criterion_consistency_predicate() {
    BoolAlg a = make_powerset_algebra(1);
    UniverseStore st(a);
    std::vector<elem_id> ids = enumerate_rank(st, 3, 1u << 20);
    EvalContext ctx = make_ctx(st, Semantics::lpt0, ids);

    elem_id e = st.empty_element();
    elem_id v = st.make_element({{e, tv_one(a)}});
    elem_id w = st.make_element({{e, tv_half(a)}});
    require(consistency_value(ctx, v) == tv_one(a), "exact singleton not consistent");
    require(consistency_value(ctx, w) == tv_zero(a), "inexact singleton not inconsistent");

    require(check_consistency_predicate(ctx, ids).pass, "predicate shape check failed");
}

// ---------------------------------------------------------------------------
// 17. repeated suite runs are byte-identical

std::string run_cli_capture(const std::string& args, int& exit_code) {
    std::string cmd = std::string(TWISTSET_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "cannot spawn the command-line tool");
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion_determinism() {
    int ec1 = -1, ec2 = -1;
    std::string a = run_cli_capture("suite --sample 500 --seed 7 --format json", ec1);
    std::string b = run_cli_capture("suite --sample 500 --seed 7 --format json", ec2);
    require(ec1 == 0 && ec2 == 0, "suite run failed");
    require(!a.empty(), "suite produced no output");
    require(a == b, "repeated runs differ");

    std::string c = run_cli_capture("witness ebq --format json", ec1);
    std::string d = run_cli_capture("witness ebq --format json", ec2);
    require(ec1 == 0 && ec2 == 0 && c == d, "witness output not reproducible");
}

// ---------------------------------------------------------------------------

struct Criterion {
    int id;
    const char* name;
    int limit_ms;
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "three-valued truth tables", 1000, criterion_truth_tables},
        {2, "twist/table agreement over one atom", 1000, criterion_twist_matrix_agreement},
        {3, "axiom soundness and modus ponens", 60000, criterion_soundness},
        {4, "paraconsistency and gentle explosion", 1000, criterion_paraconsistency},
        {5, "twist domain count 3^n", 5000, criterion_twist_domain_count},
        {6, "bounded universe counts", 5000, criterion_universe_counts},
        {7, "no self-membership", 30000, criterion_regularity},
        {8, "equality laws and pure substitutivity", 300000, criterion_basic_identities},
        {9, "designated inconsistent set", 10000, criterion_inconsistent_set},
        {10, "substitutivity failure value chain", 10000, criterion_leibniz_failure},
        {11, "bounded-quantifier normal forms", 60000, criterion_bounded_quantifiers},
        {12, "mixing and maximum principle", 60000, criterion_mixing_maximum},
        {13, "reasonable implication conditions", 5000, criterion_reasonable_implication},
        {14, "canonical embeddings", 60000, criterion_check_names},
        {15, "set-theoretic axiom instances", 300000, criterion_zf_instances},
        {16, "consistency predicate", 30000, criterion_consistency_predicate},
        {17, "byte-identical repeated runs", 300000, criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string reason;
        bool ok = true;
        try {
            c.run();
        } catch (const std::exception& e) {
            ok = false;
            reason = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (ok && ms > c.limit_ms) {
            ok = false;
            reason = "exceeded " + std::to_string(c.limit_ms) + " ms limit";
        }
        std::printf("%s %2d %-42s (%lld ms, limit %d)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    static_cast<long long>(ms), c.limit_ms, reason.empty() ? "" : " — ",
                    reason.c_str());
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d of %zu criteria FAILED\n", failures, criteria.size());
    return failures;
}

// twistset — command-line workbench for twist-valued set models.
//
// Subcommands:
//   algebra              describe the value algebra for --atoms
//   enumerate            build the bounded universe and dump it in store format
//   eval -e "<formula>"  evaluate a closed set-theoretic formula
//   taut -e "<formula>"  decide propositional tautology over the matrix
//   prove <file>         check a proof script
//   suite [name...]      run lab checks (all by default)
//   witness <name>       build a named witness construction
//
// Exit codes: 0 success / check passed, 1 check failed, 2 usage or parse
// error, 3 budget exceeded.  Identical argv + seed give byte-identical output.

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistset/boolalg.hpp"
#include "twistset/errors.hpp"
#include "twistset/evaluator.hpp"
#include "twistset/fol.hpp"
#include "twistset/lab.hpp"
#include "twistset/proplogic.hpp"
#include "twistset/twist.hpp"
#include "twistset/universe.hpp"

namespace {

using nlohmann::json;
using namespace twistset;

struct Config {
    CheckParams params;  // atoms, semantics, rank, budget, sample, seed
    std::string semantics_name = "lpt0";
    std::string format = "json";
    std::string store_path;
};

std::string mask_text(const BAElem& e) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%x", e.mask);
    return buf;
}

std::string mask_pair(const TwistVal& v) {
    return "(" + mask_text(v.z1) + "," + mask_text(v.z2) + ")";
}

// The three canonical values have stable names; everything else is shown as
// its coordinate masks.  Only used when n = 1, where every value is canonical.
std::string symbol_text(const BoolAlg& a, const TwistVal& v) {
    if (v == tv_one(a)) return "1";
    if (v == tv_zero(a)) return "0";
    if (v == tv_half(a)) return "1/2";
    return mask_pair(v);
}

std::string value_text(const BoolAlg& a, const TwistVal& v) {
    std::string s = mask_pair(v);
    if (a.n == 1) s += " = " + symbol_text(a, v);
    return s;
}

json value_json(const BoolAlg& a, const TwistVal& v) {
    json j;
    j["z1"] = mask_text(v.z1);
    j["z2"] = mask_text(v.z2);
    if (a.n == 1) j["symbol"] = symbol_text(a, v);
    return j;
}

json params_json(const Config& cfg) {
    json j;
    j["atoms"] = cfg.params.atoms;
    j["semantics"] = cfg.semantics_name;
    j["rank"] = cfg.params.rank;
    j["budget"] = cfg.params.budget;
    j["sample"] = cfg.params.sample;
    j["seed"] = cfg.params.seed;
    return j;
}

void emit(const std::string& s) { std::fputs(s.c_str(), stdout); }

void emit_json(const json& j) { emit(j.dump(2) + "\n"); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t pow3(int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

UniverseStore build_universe(const Config& cfg, std::vector<elem_id>& ids) {
    BoolAlg a = make_powerset_algebra(cfg.params.atoms);
    if (!cfg.store_path.empty()) {
        UniverseStore st = load_store(read_file(cfg.store_path), a);
        ids.resize(st.size());
        for (std::uint32_t i = 0; i < st.size(); ++i) ids[i] = i;
        return st;
    }
    UniverseStore st(a);
    ids = enumerate_rank(st, cfg.params.rank, cfg.params.budget);
    return st;
}

// --- subcommands ----------------------------------------------------------

int cmd_algebra(const Config& cfg) {
    BoolAlg a = make_powerset_algebra(cfg.params.atoms);
    std::uint64_t tsize = pow3(cfg.params.atoms);
    if (tsize > cfg.params.budget)
        throw budget_error("twist domain size exceeds budget", tsize);
    std::vector<TwistVal> dom = twist_domain(a);
    std::vector<TwistVal> designated;
    for (const TwistVal& v : dom)
        if (is_designated(v)) designated.push_back(v);

    if (cfg.format == "json") {
        json j;
        j["atoms"] = cfg.params.atoms;
        j["boolean_size"] = a.size();
        j["twist_size"] = dom.size();
        json vals = json::array();
        for (const TwistVal& v : dom) vals.push_back(value_json(a, v));
        j["values"] = vals;
        json des = json::array();
        for (const TwistVal& v : designated) des.push_back(value_json(a, v));
        j["designated"] = des;
        emit_json(j);
    } else {
        std::string out;
        out += "atoms: " + std::to_string(cfg.params.atoms) + "\n";
        out += "boolean algebra size: " + std::to_string(a.size()) + "\n";
        out += "twist domain size: " + std::to_string(dom.size()) + "\n";
        out += "values:";
        for (const TwistVal& v : dom) out += " " + mask_pair(v);
        out += "\ndesignated:";
        for (const TwistVal& v : designated) out += " " + mask_pair(v);
        out += "\n";
        emit(out);
    }
    return 0;
}

int cmd_enumerate(const Config& cfg) {
    BoolAlg a = make_powerset_algebra(cfg.params.atoms);
    UniverseStore st(a);
    enumerate_rank(st, cfg.params.rank, cfg.params.budget);
    std::string dump = dump_store(st);
    if (cfg.store_path.empty()) {
        emit(dump);
    } else {
        std::ofstream out(cfg.store_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write file: " + cfg.store_path);
        out << dump;
    }
    return 0;
}

int cmd_eval(const Config& cfg, const std::string& expr) {
    std::vector<elem_id> ids;
    UniverseStore st = build_universe(cfg, ids);
    FForm f = parse_formula(expr);
    std::set<std::string> fv = free_vars(f);
    if (!fv.empty()) {
        std::string names;
        for (const std::string& v : fv) names += (names.empty() ? "" : ", ") + v;
        throw std::invalid_argument("formula has free variables: " + names);
    }
    EvalContext ctx{&st, cfg.params.semantics, ids, true, {}};
    TwistVal v = val_formula(ctx, f, {});

    if (cfg.format == "json") {
        json j;
        j["formula"] = render(f);
        j["params"] = params_json(cfg);
        j["value"] = value_json(st.algebra(), v);
        j["designated"] = is_designated(v);
        emit_json(j);
    } else {
        emit(value_text(st.algebra(), v) + "\n");
    }
    return 0;
}

int cmd_taut(const Config& cfg, const std::string& expr) {
    PForm f = parse_prop(expr);
    BoolAlg a = make_powerset_algebra(cfg.params.atoms);
    Matrix m = cfg.params.atoms == 1 ? mpt0_matrix() : twist_matrix(a);
    TautVerdict v = is_tautology(m, f, cfg.params.budget);

    if (cfg.format == "json") {
        json j;
        j["formula"] = render_prop(f);
        j["atoms"] = cfg.params.atoms;
        j["tautology"] = v.tautology;
        if (v.tautology) {
            j["countervaluation"] = nullptr;
        } else {
            json cv;
            for (std::size_t i = 0; i < v.vars.size(); ++i)
                cv[v.vars[i]] = (a.n == 1) ? json(symbol_text(a, v.countervaluation[i]))
                                                 : value_json(a, v.countervaluation[i]);
            j["countervaluation"] = cv;
        }
        emit_json(j);
    } else {
        if (v.tautology) {
            emit("tautology\n");
        } else {
            std::string out = "not a tautology:";
            for (std::size_t i = 0; i < v.vars.size(); ++i) {
                out += " " + v.vars[i] + "=";
                out += (a.n == 1) ? symbol_text(a, v.countervaluation[i])
                                        : mask_pair(v.countervaluation[i]);
            }
            emit(out + "\n");
        }
    }
    return 0;  // a countervaluation is an answer, not a failure
}

int cmd_prove(const Config& cfg, const std::string& path) {
    ProofScript script = parse_proof_script(read_file(path));
    ProofVerdict v = check_proof(script);

    if (cfg.format == "json") {
        json j;
        j["file"] = path;
        j["lines"] = script.lines.size();
        j["valid"] = v.ok;
        if (v.ok) {
            j["first_bad_line"] = nullptr;
            j["reason"] = nullptr;
        } else {
            j["first_bad_line"] = v.first_bad_line;
            j["reason"] = v.reason;
        }
        emit_json(j);
    } else {
        if (v.ok) {
            emit("proof valid (" + std::to_string(script.lines.size()) + " lines)\n");
        } else {
            emit("proof invalid at line " + std::to_string(v.first_bad_line) + ": " +
                 v.reason + "\n");
        }
    }
    return v.ok ? 0 : 1;
}

int cmd_suite(const Config& cfg, const std::vector<std::string>& names) {
    std::vector<CheckReport> reports = run_suite(names, cfg.params);
    bool all_pass = true;
    for (const CheckReport& r : reports) all_pass = all_pass && r.pass;

    if (cfg.format == "json") {
        emit(reports_to_json(reports) + "\n");
    } else {
        std::string out;
        for (const CheckReport& r : reports) out += report_to_text(r) + "\n";
        emit(out);
    }
    return all_pass ? 0 : 1;
}

int cmd_witness(const Config& cfg, const std::string& name) {
    BoolAlg a = make_powerset_algebra(cfg.params.atoms);
    UniverseStore st(a);
    int base_rank = cfg.params.rank < 2 ? cfg.params.rank : 2;
    std::vector<elem_id> ids = enumerate_rank(st, base_rank, cfg.params.budget);
    EvalContext ctx{&st, cfg.params.semantics, ids, true, {}};
    WitnessConstruction w = build_witness(name, ctx);

    // With --store the extended universe is saved, so each printed id can be
    // fed back through `eval --store <file>` to re-derive the printed values.
    if (!cfg.store_path.empty()) {
        std::ofstream out(cfg.store_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write file: " + cfg.store_path);
        out << dump_store(st);
    }

    if (cfg.format == "json") {
        json j;
        j["witness"] = w.name;
        j["params"] = params_json(cfg);
        json elems = json::array();
        for (const auto& [label, id] : w.elements) {
            json e;
            e["label"] = label;
            e["id"] = id;
            elems.push_back(e);
        }
        j["elements"] = elems;
        json vals = json::array();
        for (const auto& [label, v] : w.values) {
            json e = value_json(a, v);
            e["label"] = label;
            vals.push_back(e);
        }
        j["values"] = vals;
        j["verdict"] = w.pass ? "pass" : "fail";
        j["note"] = w.note;
        emit_json(j);
    } else {
        std::string out = "witness " + w.name + ": " + (w.pass ? "pass" : "fail") + "\n";
        for (const auto& [label, id] : w.elements)
            out += "  " + label + " = element " + std::to_string(id) + "\n";
        for (const auto& [label, v] : w.values)
            out += "  " + label + " = " + value_text(a, v) + "\n";
        out += "  note: " + w.note + "\n";
        emit(out);
    }
    return w.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twist-valued set-theory workbench"};
    app.require_subcommand(1);

    Config cfg;
    std::string expr;
    std::string proof_path;
    std::string witness_name;
    std::vector<std::string> suite_names;

    app.add_option("--atoms", cfg.params.atoms, "number of atoms in the powerset algebra")
        ->check(CLI::Range(1, 16));
    app.add_option("--semantics", cfg.semantics_name, "implication semantics")
        ->check(CLI::IsMember({"lpt0", "ps3"}));
    app.add_option("--rank", cfg.params.rank, "maximum universe rank")->check(CLI::Range(1, 64));
    app.add_option("--budget", cfg.params.budget, "element / valuation budget");
    app.add_option("--sample", cfg.params.sample, "random sample count for lab checks");
    app.add_option("--seed", cfg.params.seed, "random seed for lab checks");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--store", cfg.store_path, "universe store file to load or write");

    CLI::App* sub_algebra = app.add_subcommand("algebra", "describe the value algebra");
    CLI::App* sub_enumerate =
        app.add_subcommand("enumerate", "build the bounded universe and dump it");
    CLI::App* sub_eval = app.add_subcommand("eval", "evaluate a closed formula");
    sub_eval->add_option("-e,--expr", expr, "formula text")->required();
    CLI::App* sub_taut = app.add_subcommand("taut", "decide propositional tautology");
    sub_taut->add_option("-e,--expr", expr, "formula text")->required();
    CLI::App* sub_prove = app.add_subcommand("prove", "check a proof script");
    sub_prove->add_option("file", proof_path, "proof script path")->required();
    CLI::App* sub_suite = app.add_subcommand("suite", "run lab checks");
    sub_suite->add_option("names", suite_names, "check names (default: all)");
    CLI::App* sub_witness = app.add_subcommand("witness", "build a witness construction");
    sub_witness->add_option("name", witness_name, "witness name")->required();

    for (CLI::App* s : {sub_algebra, sub_enumerate, sub_eval, sub_taut, sub_prove, sub_suite,
                        sub_witness})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cfg.params.semantics = cfg.semantics_name == "ps3" ? Semantics::ps3 : Semantics::lpt0;
        if (app.got_subcommand(sub_algebra)) return cmd_algebra(cfg);
        if (app.got_subcommand(sub_enumerate)) return cmd_enumerate(cfg);
        if (app.got_subcommand(sub_eval)) return cmd_eval(cfg, expr);
        if (app.got_subcommand(sub_taut)) return cmd_taut(cfg, expr);
        if (app.got_subcommand(sub_prove)) return cmd_prove(cfg, proof_path);
        if (app.got_subcommand(sub_suite)) return cmd_suite(cfg, suite_names);
        if (app.got_subcommand(sub_witness)) return cmd_witness(cfg, witness_name);
        std::fprintf(stderr, "error: no subcommand\n");
        return 2;
    } catch (const budget_error& e) {
        if (e.needed_overflows)
            std::fprintf(stderr, "error: %s (needed > 2^64)\n", e.what());
        else
            std::fprintf(stderr, "error: %s (needed %llu)\n", e.what(),
                         static_cast<unsigned long long>(e.needed));
        return 3;
    } catch (const parse_error& e) {
        if (e.line > 0)
            std::fprintf(stderr, "error: %s (line %d, column %d)\n", e.what(), e.line, e.column);
        else
            std::fprintf(stderr, "error: %s (column %d)\n", e.what(), e.column);
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

#include <benchmark/benchmark.h>

#include "twistset/boolalg.hpp"
#include "twistset/evaluator.hpp"
#include "twistset/fol.hpp"
#include "twistset/proplogic.hpp"
#include "twistset/twist.hpp"
#include "twistset/universe.hpp"

namespace {

using namespace twistset;

void BM_twist_ops(benchmark::State& state) {
    BoolAlg a = make_powerset_algebra(static_cast<int>(state.range(0)));
    std::vector<TwistVal> dom = twist_domain(a);
    for (auto _ : state) {
        for (const TwistVal& x : dom)
            for (const TwistVal& y : dom) {
                benchmark::DoNotOptimize(t_and(x, y));
                benchmark::DoNotOptimize(t_imp(x, y));
                benchmark::DoNotOptimize(t_neg(x));
            }
    }
    state.SetItemsProcessed(state.iterations() * dom.size() * dom.size() * 3);
}
BENCHMARK(BM_twist_ops)->Arg(1)->Arg(2)->Arg(4);

void BM_enumerate_rank3(benchmark::State& state) {
    BoolAlg a = make_powerset_algebra(1);
    for (auto _ : state) {
        UniverseStore st(a);
        benchmark::DoNotOptimize(enumerate_rank(st, 3, 1u << 20));
    }
}
BENCHMARK(BM_enumerate_rank3);

// equality of two rank-3 elements with a cold memo each iteration
void BM_val_eq_cold(benchmark::State& state) {
    BoolAlg a = make_powerset_algebra(1);
    UniverseStore st(a);
    std::vector<elem_id> ids = enumerate_rank(st, 3, 1u << 20);
    elem_id u = ids[ids.size() - 1];
    elem_id v = ids[ids.size() - 2];
    for (auto _ : state) {
        EvalContext ctx{&st, Semantics::lpt0, ids, true, {}};
        benchmark::DoNotOptimize(val_eq(ctx, u, v));
    }
}
BENCHMARK(BM_val_eq_cold);

// all-pairs equality over the full rank-3 universe, shared memo
void BM_val_eq_all_pairs(benchmark::State& state) {
    BoolAlg a = make_powerset_algebra(1);
    UniverseStore st(a);
    std::vector<elem_id> ids = enumerate_rank(st, 3, 1u << 20);
    for (auto _ : state) {
        EvalContext ctx{&st, Semantics::lpt0, ids, true, {}};
        for (elem_id u : ids)
            for (elem_id v : ids)
                if (u < v) benchmark::DoNotOptimize(val_eq(ctx, u, v));
    }
}
BENCHMARK(BM_val_eq_all_pairs)->Unit(benchmark::kMillisecond);

void BM_quantified_formula(benchmark::State& state) {
    BoolAlg a = make_powerset_algebra(1);
    UniverseStore st(a);
    std::vector<elem_id> ids = enumerate_rank(st, 3, 1u << 20);
    FForm f = parse_formula("forall x . exists y . x = y");
    for (auto _ : state) {
        EvalContext ctx{&st, Semantics::lpt0, ids, true, {}};
        benchmark::DoNotOptimize(val_formula(ctx, f));
    }
}
BENCHMARK(BM_quantified_formula)->Unit(benchmark::kMillisecond);

void BM_tautology_sweep(benchmark::State& state) {
    BoolAlg a = make_powerset_algebra(static_cast<int>(state.range(0)));
    Matrix m = twist_matrix(a);
    PForm f = parse_prop("(p -> (q -> r)) -> ((p -> q) -> (p -> r))");
    for (auto _ : state) benchmark::DoNotOptimize(is_tautology(m, f));
}
BENCHMARK(BM_tautology_sweep)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();

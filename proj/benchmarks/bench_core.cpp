#include <benchmark/benchmark.h>

#include "modo/diff_op.hpp"
#include "modo/expr.hpp"
#include "modo/kernel.hpp"
#include "modo/matrix.hpp"
#include "support/random_gen.hpp"

using namespace modo;

namespace {

VectorFunction column2(const char* top, const char* bottom) {
    Matrix c(2, 1);
    c(0, 0) = parse_rational_function(top);
    c(1, 0) = parse_rational_function(bottom);
    return c;
}

KernelProblem example_problem() {
    return KernelProblem({column2("x^3", "-x^3"), column2("x^2", "0"),
                          column2("0", "x"), column2("1", "0")});
}

void bench_kernel_operator_example(benchmark::State& state) {
    KernelProblem p = example_problem();
    for (auto _ : state) benchmark::DoNotOptimize(kernel_operator(p));
}
BENCHMARK(bench_kernel_operator_example);

void bench_kernel_operator_random(benchmark::State& state) {
    testgen::Rng rng(42);
    auto n = static_cast<std::size_t>(state.range(0));
    auto m = static_cast<std::size_t>(state.range(1));
    KernelProblem p = testgen::rand_regular_problem(rng, n, m, 3);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_operator(p));
}
BENCHMARK(bench_kernel_operator_random)->Args({2, 2})->Args({3, 2})->Args({3, 3});

void bench_right_divide(benchmark::State& state) {
    testgen::Rng rng(43);
    DiffOp k = testgen::rand_monic_operator(rng, 2, 2);
    DiffOp q = testgen::rand_operator(rng, 2, 2);
    DiffOp l = q * k;
    for (auto _ : state) benchmark::DoNotOptimize(right_divide(l, k));
}
BENCHMARK(bench_right_divide);

void bench_matrix_inverse(benchmark::State& state) {
    testgen::Rng rng(44);
    auto n = static_cast<std::size_t>(state.range(0));
    Matrix a = testgen::rand_polynomial_matrix(rng, n, n, 3);
    while (a.determinant().is_zero()) a = testgen::rand_polynomial_matrix(rng, n, n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(bench_matrix_inverse)->Arg(4)->Arg(6);

void bench_operator_product(benchmark::State& state) {
    testgen::Rng rng(45);
    DiffOp a = testgen::rand_operator(rng, 3, 3);
    DiffOp b = testgen::rand_operator(rng, 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bench_operator_product);

}  // namespace

BENCHMARK_MAIN();

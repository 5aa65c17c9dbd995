// Serial vs OpenMP timings for the data-parallel kernels.
//   bench_kernels [repeats]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "mzvfrac/closed_form.hpp"
#include "mzvfrac/mzv_numeric.hpp"

using namespace mzvfrac;

namespace {

double time_ms(const std::function<void()>& f, int repeats) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

void row(const std::string& name, double serial, double parallel) {
    std::cout << name << "\tserial " << serial << " ms\tparallel " << parallel << " ms\tspeedup "
              << serial / parallel << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    volatile double sink = 0;

    const StarPair p({3, 2, 2}, {Variable("u1"), Variable("u2"), Variable("u3")});
    const StarPair q({2, 3, 2}, {Variable("v1"), Variable("v2"), Variable("v3")});
    std::size_t terms = 0;
    row("closed_form 3x3 weight 14",
        time_ms([&] { terms = closed_form_product_serial(p, q).size(); }, repeats),
        time_ms([&] { terms = closed_form_product(p, q).size(); }, repeats));

    const TruncationSpec big(1000000);
    const Composition s{2, 1, 1};
    row("zeta_truncated (2,1,1) N=1e6",
        time_ms([&] { sink = serial::zeta_truncated(s, big); }, repeats),
        time_ms([&] { sink = zeta_truncated(s, big); }, repeats));

    const StarPair f({2, 1, 1}, {Variable("a"), Variable("b"), Variable("c")});
    row("fraction_sum_truncated (2,1,1) N=1e6",
        time_ms([&] { sink = serial::fraction_sum_truncated(f, big); }, repeats),
        time_ms([&] { sink = fraction_sum_truncated(f, big); }, repeats));

    std::cout << "(" << terms << " terms)\n";
    return 0;
}

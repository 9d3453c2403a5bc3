// Compares the serial reference kernels against the OpenMP paths: dense
// complex products across dimensions, and a full grid sweep. The parallel
// kernels must reproduce the serial results exactly; this also reports the
// speedup actually achieved on this machine.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <random>

#include "uncdyn/scenario_io.hpp"
#include "uncdyn/verifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace uncdyn;

namespace {

ComplexMatrix random_matrix(std::size_t dim, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = complexd(dist(rng), dist(rng));
    return m;
}

template <typename F>
double best_seconds(F&& body, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

void bench_mat_mul() {
    std::mt19937 rng(12345);
    std::printf("dense product, serial vs parallel kernel\n");
    std::printf("%8s %12s %12s %9s %10s\n", "dim", "serial [s]", "parallel [s]", "speedup",
                "max|diff|");
    for (std::size_t dim : {32, 64, 96, 128, 192, 256}) {
        const ComplexMatrix a = random_matrix(dim, rng);
        const ComplexMatrix b = random_matrix(dim, rng);
        const int reps = dim <= 96 ? 20 : 5;

        ComplexMatrix serial_out(dim), parallel_out(dim);
        const double t_serial = best_seconds([&] { serial_out = mat_mul_serial(a, b); }, reps);
        const double t_parallel = best_seconds([&] { parallel_out = mat_mul(a, b); }, reps);
        const double diff = max_abs(serial_out - parallel_out);
        std::printf("%8zu %12.3e %12.3e %9.2f %10.1e\n", dim, t_serial, t_parallel,
                    t_serial / t_parallel, diff);
    }
}

void bench_sweep() {
    Scenario scenario;
    scenario.kind = ModelKind::oscillator;
    scenario.oscillator.fock_dim = 32;
    scenario.pair = ObservablePair{Observable::X, Observable::P, ModelKind::oscillator};
    scenario.t1_grid = GridSpec{0.0, 2.0 * std::numbers::pi, 41};
    scenario.t2_grid = GridSpec{0.0, 2.0 * std::numbers::pi, 41};

    std::printf("\noscillator sweep, fock_dim=32, 41x41 grid\n");
    SweepReport serial_report, parallel_report;
    const double t_serial = best_seconds([&] { serial_report = run_sweep(scenario, false); }, 3);
    const double t_parallel = best_seconds([&] { parallel_report = run_sweep(scenario, true); }, 3);

    double diff = 0.0;
    for (std::size_t k = 0; k < serial_report.records.size(); ++k) {
        diff = std::max(diff, std::abs(serial_report.records[k].slack -
                                       parallel_report.records[k].slack));
    }
    std::printf("%8s %12.3e %12.3e %9.2f %10.1e\n", "sweep", t_serial, t_parallel,
                t_serial / t_parallel, diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n\n");
#endif
    bench_mat_mul();
    bench_sweep();
    return 0;
}

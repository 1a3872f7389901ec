// Compares the serial reference kernels against the OpenMP ones and
// checks that both produce identical results while timing them.
//
//   gextreme_bench [samples] [grid_points]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gextreme/diagnostics.hpp"
#include "gextreme/mc_sim.hpp"
#include "gextreme/normalization.hpp"
#include "gextreme/tail_approx.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    const std::int64_t samples = argc > 1 ? std::atoll(argv[1]) : 2000000;
    const std::int64_t grid_points = argc > 2 ? std::atoll(argv[2]) : 20000;

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("kernel,serial_s,parallel_s,speedup,threads,identical\n");

    const auto p = gextreme::make_norm(1000000);

    {
        auto t0 = Clock::now();
        const auto ser = gextreme::estimate_tail_serial(p, 0.2, samples, 42);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const auto par = gextreme::estimate_tail(p, 0.2, samples, 42);
        const double tp = seconds_since(t0);
        std::printf("estimate_tail,%.3f,%.3f,%.2f,%d,%s\n", ts, tp, ts / tp,
                    threads, ser.hits == par.hits ? "yes" : "NO");
    }

    {
        std::vector<double> xs;
        xs.reserve(grid_points);
        for (std::int64_t i = 0; i < grid_points; ++i)
            xs.push_back(5.0 * static_cast<double>(i) /
                         static_cast<double>(grid_points - 1));
        auto t0 = Clock::now();
        const auto ser = gextreme::compare_grid_serial(p, xs);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const auto par = gextreme::compare_grid(p, xs);
        const double tp = seconds_since(t0);
        bool same = ser.size() == par.size();
        for (std::size_t i = 0; same && i < ser.size(); ++i)
            same = ser[i].log_exact.value == par[i].log_exact.value &&
                   ser[i].log_gumbel.value == par[i].log_gumbel.value &&
                   ser[i].log_ldp.value == par[i].log_ldp.value;
        std::printf("compare_grid,%.3f,%.3f,%.2f,%d,%s\n", ts, tp, ts / tp,
                    threads, same ? "yes" : "NO");
    }

    {
        auto t0 = Clock::now();
        const double ser =
            gextreme::density_rate_error_serial(1000000000000, 3.0, 1e-5);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const double par = gextreme::density_rate_error(1000000000000, 3.0, 1e-5);
        const double tp = seconds_since(t0);
        std::printf("density_rate_error,%.3f,%.3f,%.2f,%d,%s\n", ts, tp,
                    ts / tp, threads, ser == par ? "yes" : "NO");
    }

    return 0;
}

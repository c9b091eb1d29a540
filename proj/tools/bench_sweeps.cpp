// Times the agreement sweeps, serial versus OpenMP, on growing workloads.
// The two must produce identical results; this tool reports the speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "gtcount/sweeps.hpp"

using namespace gtc;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::int64_t max_first = argc > 1 ? std::atoll(argv[1]) : 9;
    std::size_t k_max = argc > 2 ? static_cast<std::size_t>(std::atoll(argv[2])) : 3;

    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%-34s %10s %10s %8s\n", "workload", "serial ms", "openmp ms", "speedup");

    for (std::int64_t first = 5; first <= max_first; ++first) {
        const auto xs = decreasing_rows(1, k_max, first);
        std::vector<HalvedAgreement> serial, parallel;
        const double ts = time_ms([&] { serial = halved_agreement_sweep_serial(xs); });
        const double tp = time_ms([&] { parallel = halved_agreement_sweep_parallel(xs); });
        bool same = serial.size() == parallel.size();
        for (std::size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].x == parallel[i].x && serial[i].rows == parallel[i].rows &&
                   serial[i].bruteforce == parallel[i].bruteforce &&
                   serial[i].recursion == parallel[i].recursion &&
                   serial[i].formula == parallel[i].formula &&
                   serial[i].determinant == parallel[i].determinant;
        if (!same) {
            std::fprintf(stderr, "serial and parallel sweeps disagree\n");
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "halved rows, k<=%zu, x1<=%lld (%zu)", k_max,
                      static_cast<long long>(first), xs.size());
        std::printf("%-34s %10.1f %10.1f %7.2fx\n", label, ts, tp, ts / tp);
    }

    {
        const auto us = increasing_rows(1, 4, 8);
        std::vector<GtAgreement> serial, parallel;
        const double ts = time_ms([&] { serial = gt_agreement_sweep_serial(us); });
        const double tp = time_ms([&] { parallel = gt_agreement_sweep_parallel(us); });
        bool same = serial.size() == parallel.size();
        for (std::size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].u == parallel[i].u && serial[i].dp == parallel[i].dp &&
                   serial[i].formula == parallel[i].formula;
        if (!same) {
            std::fprintf(stderr, "serial and parallel sweeps disagree\n");
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "GT rows, k<=4, entries<=8 (%zu)", us.size());
        std::printf("%-34s %10.1f %10.1f %7.2fx\n", label, ts, tp, ts / tp);
    }
    return 0;
}

// Times the verification kernels in both execution modes and reports the
// speedup. Results are compared for equality as a safety net.

#include <omp.h>

#include <cstdio>
#include <string>

#include "symrep/verify.hpp"

using namespace symrep;

namespace {

template <typename Kernel>
void report(const std::string& name, Kernel kernel) {
    double t0 = omp_get_wtime();
    auto serial = kernel(Exec::serial);
    double t1 = omp_get_wtime();
    auto parallel = kernel(Exec::parallel);
    double t2 = omp_get_wtime();

    double ts = t1 - t0, tp = t2 - t1;
    bool same = serial == parallel;
    std::printf("%-34s %9.3fs %9.3fs %7.2fx   %s\n", name.c_str(), ts, tp,
                tp > 0 ? ts / tp : 0.0, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("verification kernels, %d thread(s)\n", omp_get_max_threads());
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    report("ratio bound, weight 11", [](Exec exec) {
        return verify_kostka_inequality(11, exec);
    });
    report("degree slice bound, n=11 d=6", [](Exec exec) {
        return verify_main_inequality(11, 6, exec);
    });
    report("dimension grid, degrees 2..7", [](Exec exec) {
        return verify_bound_grid(2, 7, 12, exec);
    });
    report("factorial inequality, 30x8x8", [](Exec exec) {
        return verify_elementary_inequality(30, 8, 8, exec);
    });
    return 0;
}

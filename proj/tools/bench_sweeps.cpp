// Times the serial reference kernels against the OpenMP kernels on the
// heavy sweeps and reports the speedup. Not part of the test suite.

#include "m1n/sweeps.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using m1n::sweeps::Exec;
using m1n::sweeps::SweepResult;

namespace {

template <typename Fn>
double seconds(Fn&& fn, SweepResult& result) {
    auto start = std::chrono::steady_clock::now();
    result = fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

template <typename Fn>
void bench(const char* name, Fn&& fn) {
    SweepResult serial_result, parallel_result;
    double ts = seconds([&] { return fn(Exec::serial); }, serial_result);
    double tp = seconds([&] { return fn(Exec::parallel); }, parallel_result);
    const char* agree =
        (serial_result.checked == parallel_result.checked &&
         serial_result.failures == parallel_result.failures)
            ? "agree"
            : "DISAGREE";
    std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  (%llu checks, %s)\n", name, ts,
                tp, tp > 0 ? ts / tp : 0.0, serial_result.checked, agree);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled; both columns run serially\n");
#endif
    bench("certificate-pairing (60)", [](Exec e) { return m1n::sweeps::certificate_pairing_sweep(60, e); });
    bench("sigma-identity (2*10^5)", [](Exec e) { return m1n::sweeps::sigma_identity_sweep(200000, e); });
    bench("sigma-order-oracle (200)", [](Exec e) { return m1n::sweeps::sigma_order_oracle_sweep(200, e); });
    bench("decomposition (6, 10^4)",
          [](Exec e) { return m1n::sweeps::decompose_sweep(6, 10000, m1n::kDefaultSeed, e); });
    bench("monodromy-orbits (300)", [](Exec e) { return m1n::sweeps::monodromy_sweep(300, e); });
    bench("signature-reduction (1000)", [](Exec e) { return m1n::sweeps::reduction_sweep(1000, e); });
    bench("pullback-coherence (7,10)",
          [](Exec e) { return m1n::sweeps::pullback_agreement_sweep(7, 10, e); });
    bench("sym-implication (10^4)",
          [](Exec e) { return m1n::sweeps::sym_implication_sweep(3, 10, 10000, m1n::kDefaultSeed, e); });
    return 0;
}

// Compares the OpenMP kernels against their serial reference implementations:
// the lattice-point box scan and the signed colored-permutation census.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crossehr/colored.hpp"
#include "crossehr/words.hpp"

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_ms(F&& f) {
  double t0 = now_ms();
  f();
  return now_ms() - t0;
}

void row(const char* kernel, const std::string& params, double serial_ms, double parallel_ms,
         bool equal) {
  std::printf("%-16s %-18s %10.1f %10.1f %8.2fx   %s\n", kernel, params.c_str(), serial_ms,
              parallel_ms, serial_ms / parallel_ms, equal ? "equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int lat_d = 7, lat_k = 7;
  long lat_n = 5;
  int cen_d = 9, cen_k = 9;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    long v = std::stol(argv[i + 1]);
    if (flag == "--lattice-d") lat_d = static_cast<int>(v);
    else if (flag == "--lattice-k") lat_k = static_cast<int>(v);
    else if (flag == "--lattice-n") lat_n = v;
    else if (flag == "--census-d") cen_d = static_cast<int>(v);
    else if (flag == "--census-k") cen_k = static_cast<int>(v);
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-16s %-18s %10s %10s %9s\n", "kernel", "params", "serial", "openmp", "speedup");

  {
    crossehr::Int serial, parallel;
    double ts = time_ms([&] { serial = crossehr::count_lattice_points_serial(lat_d, lat_k, lat_n); });
    double tp = time_ms([&] { parallel = crossehr::count_lattice_points(lat_d, lat_k, lat_n); });
    std::string params = "d=" + std::to_string(lat_d) + " k=" + std::to_string(lat_k) +
                         " n=" + std::to_string(lat_n);
    row("lattice-count", params, ts, tp, serial == parallel);
  }

  {
    crossehr::SignedCensus serial, parallel;
    double ts = time_ms([&] { serial = crossehr::signed_census_serial(cen_d, cen_k); });
    double tp = time_ms([&] { parallel = crossehr::signed_census(cen_d, cen_k); });
    bool equal = serial.signed_sum == parallel.signed_sum &&
                 serial.positives == parallel.positives && serial.negatives == parallel.negatives;
    std::string params = "d=" + std::to_string(cen_d) + " k=" + std::to_string(cen_k);
    row("signed-census", params, ts, tp, equal);
  }
  return 0;
}

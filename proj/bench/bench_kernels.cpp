// Times the OpenMP kernels against the serial reference on one problem size
// and checks that both produce bitwise-identical output (each output element
// is accumulated in the same order regardless of threading).

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "regpath/kernels.hpp"
#include "regpath/random.hpp"

using namespace regpath;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& fn, int reps) {
  fn();  // warm up
  const auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

bool bitwise_equal(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = 4000, p = 600;
  int reps = 20;
  if (argc > 1) n = std::stoull(argv[1]);
  if (argc > 2) p = std::stoull(argv[2]);
  if (argc > 3) reps = std::stoi(argv[3]);

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif
  std::printf("problem: %zu x %zu, %d reps\n\n", n, p, reps);

  RandomStream rng(12345);
  Matrix x(n, p);
  for (double& v : x.data) v = rng.next_normal();
  Vector beta = rng.normals(p);
  Vector w = rng.normals(n);
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < p; j += 8) active.push_back(j);
  Vector va = rng.normals(active.size());
  std::vector<std::uint8_t> mask(n, 0);
  for (std::size_t i = 0; i < n; i += 2) mask[i] = 1;

  Vector out_ref, out_par;
  Matrix gram_ref, gram_par;

  struct Row {
    const char* name;
    double serial_ms;
    double omp_ms;
    bool identical;
  };
  std::vector<Row> rows;

  rows.push_back({"matvec",
                  time_ms([&] { kernels::ref::matvec(x, beta, out_ref); }, reps),
                  time_ms([&] { kernels::matvec(x, beta, out_par); }, reps),
                  bitwise_equal(out_ref, out_par)});
  rows.push_back({"matvec_t",
                  time_ms([&] { kernels::ref::matvec_t(x, w, out_ref); }, reps),
                  time_ms([&] { kernels::matvec_t(x, w, out_par); }, reps),
                  bitwise_equal(out_ref, out_par)});
  rows.push_back({"matvec_t_masked",
                  time_ms([&] { kernels::ref::matvec_t_masked(x, w, mask, out_ref); }, reps),
                  time_ms([&] { kernels::matvec_t_masked(x, w, mask, out_par); }, reps),
                  bitwise_equal(out_ref, out_par)});
  rows.push_back({"matvec_active",
                  time_ms([&] { kernels::ref::matvec_active(x, active, va, out_ref); }, reps),
                  time_ms([&] { kernels::matvec_active(x, active, va, out_par); }, reps),
                  bitwise_equal(out_ref, out_par)});
  rows.push_back({"gram",
                  time_ms([&] { kernels::ref::gram(x, active, mask, 2.0, gram_ref); }, reps),
                  time_ms([&] { kernels::gram(x, active, mask, 2.0, gram_par); }, reps),
                  bitwise_equal(gram_ref.data, gram_par.data)});

  std::printf("%-16s %12s %12s %9s %10s\n", "kernel", "serial (ms)", "omp (ms)", "speedup",
              "bitwise");
  bool all_identical = true;
  for (const Row& r : rows) {
    std::printf("%-16s %12.3f %12.3f %8.2fx %10s\n", r.name, r.serial_ms, r.omp_ms,
                r.serial_ms / r.omp_ms, r.identical ? "equal" : "DIFFER");
    all_identical = all_identical && r.identical;
  }
  if (!all_identical) {
    std::printf("\nFAIL: parallel kernels diverged from the serial reference\n");
    return 1;
  }
  return 0;
}

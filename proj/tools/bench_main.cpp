// Timing comparison between the OpenMP code paths and their serial
// references.  Each row reports wall time for both and the speedup; the
// equality of results is asserted separately in test_parallel.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hecke/cartan.hpp"
#include "hecke/kronecker.hpp"
#include "hecke/satake.hpp"
#include "hecke/spectral.hpp"
#include "hecke/weyl.hpp"

namespace {

double seconds(const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-34s %9.3fs %9.3fs %6.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif
  std::printf("%-34s %10s %10s %7s\n", "kernel", "serial", "parallel", "speedup");

  using namespace hecke;

  row("satake family n=2 p=3 radius 5",
      seconds([] { SatakeFamily fam(2, 3, 5, false); }),
      seconds([] { SatakeFamily fam(2, 3, 5, true); }));

  row("satake family n=3 p=2 radius 2",
      seconds([] { SatakeFamily fam(3, 2, 2, false); }),
      seconds([] { SatakeFamily fam(3, 2, 2, true); }));

  {
    QuadratureGrid grid(2, 2, 8192);
    TorusFunction chi = satake_chi(Coweight({3, -3}), 2);
    row("plancherel pair n=2 R=8192",
        seconds([&] { plancherel_pair(chi, chi, grid, false); }),
        seconds([&] { plancherel_pair(chi, chi, grid, true); }));
    row("inverse transform n=2 R=8192",
        seconds([&] { inverse_transform(chi, Coweight({3, -3}), grid, false); }),
        seconds([&] { inverse_transform(chi, Coweight({3, -3}), grid, true); }));
  }

  row("quadrature grid n=3 p=2 R=96",
      seconds([] { QuadratureGrid grid(3, 2, 96, false); }),
      seconds([] { QuadratureGrid grid(3, 2, 96, true); }));

  {
    std::vector<double> alpha{0.30103000, 0.43429448, 0.56633813};
    row("kronecker scan m=3 window 3e6",
        seconds([&] { best_in_window(alpha, 1, 3000000, false); }),
        seconds([&] { best_in_window(alpha, 1, 3000000, true); }));
  }

  {
    Coweight lam({2, -2}), mu({1, -1});
    row("coset convolution vs reference",
        seconds([&] { double_coset_convolve_reference(lam, mu, 3); }),
        seconds([&] { double_coset_convolve(lam, mu, 3); }));
  }

  return 0;
}

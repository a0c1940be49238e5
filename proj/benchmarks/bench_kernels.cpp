// Compares the parallel enumeration and grid-scan kernels against their
// serial reference implementations, asserting identical results.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "weil/enumerate.hpp"
#include "weil/orbit.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace weil;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <class F>
double timed(F&& f, int repeats) {
  const double start = now_ms();
  for (int r = 0; r < repeats; ++r) f();
  return (now_ms() - start) / repeats;
}

SL2Input rank7_input() {
  QMat g(7, 7);
  g(0, 4) = g(4, 0) = g(1, 5) = g(5, 1) = Rational(-1);
  g(2, 2) = g(3, 3) = g(6, 6) = Rational(1);
  QMat n(7, 7);
  n(2, 0) = n(3, 1) = n(4, 2) = n(5, 3) = Rational(2);
  QMat y(7, 7);
  y(0, 0) = y(1, 1) = Rational(2);
  y(4, 4) = y(5, 5) = Rational(-2);
  SL2Input in{PolarizedLattice(2, g), n, y, {}};
  const auto e = [](int k) {
    GVec v(7);
    v[std::size_t(k)] = GaussRational(1);
    return v;
  };
  const auto ei = [](int k, int l) {
    GVec v(7);
    v[std::size_t(k)] = GaussRational(1);
    v[std::size_t(l)] = GaussRational::i();
    return v;
  };
  in.f[3] = {ei(0, 1)};
  in.f[2] = {ei(0, 1), ei(2, 3)};
  in.f[1] = {e(0), e(1), ei(2, 3), ei(4, 5), e(6)};
  in.f[0] = {e(0), e(1), e(2), e(3), ei(4, 5), e(6)};
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp: disabled (serial build)\n";
#endif

  {
    QMat g = QMat::identity(4);
    g(0, 1) = g(1, 0) = Rational(1, 2L);
    const HodgeNormForm form{g};
    const Int q(120);
    std::vector<IVec> parallel_out, serial_out;
    const double tp = timed([&] { parallel_out = enumerate_norm(form, q); }, repeats);
    const double ts = timed([&] { serial_out = enumerate_norm_serial(form, q); }, repeats);
    if (parallel_out != serial_out) {
      std::cerr << "enumeration mismatch between parallel and serial kernels\n";
      return 1;
    }
    std::cout << "enumerate rank-4 q=120: " << parallel_out.size() << " vectors, parallel "
              << tp << " ms, serial " << ts << " ms\n";
  }

  {
    const auto data = SL2OrbitData::validate(rank7_input());
    QVec v(7);
    v[2] = Rational(1);
    v[4] = Rational(1);
    GridSpec grid;
    for (Rational x(-4); x <= Rational(4); x += Rational(1, 8L)) grid.xs.push_back(x);
    for (Rational s(1, 4L); s <= Rational(12); s += Rational(1, 4L)) grid.ss.push_back(s);
    std::vector<GridRow> parallel_out, serial_out;
    const double tp = timed([&] { parallel_out = scan_grid(data, v, grid); }, repeats);
    const double ts = timed([&] { serial_out = scan_grid_serial(data, v, grid); }, repeats);
    if (parallel_out != serial_out) {
      std::cerr << "grid scan mismatch between parallel and serial kernels\n";
      return 1;
    }
    std::size_t hits = 0;
    for (const auto& row : parallel_out) hits += row.selfdual ? 1 : 0;
    std::cout << "orbit scan " << grid.xs.size() << "x" << grid.ss.size() << ": " << hits
              << " self-dual nodes, parallel " << tp << " ms, serial " << ts << " ms\n";
  }

  std::cout << "kernels agree\n";
  return 0;
}

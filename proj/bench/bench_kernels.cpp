// Timing comparison between the serial reference path and the OpenMP path
// for the sweep kernels: projection, algebra pair checks, lattice
// generation, and the randomized verification sweeps.

#include <chrono>
#include <cstdio>
#include <functional>

#include "theoria/algebra.hpp"
#include "theoria/gallery.hpp"
#include "theoria/lattice.hpp"
#include "theoria/oracle.hpp"
#include "theoria/verify.hpp"

using namespace theoria;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn, int reps = 3) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    fn();
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

void row(const char* name, const std::function<void(par::Mode)>& kernel) {
  double serial = time_of([&] { kernel(par::Mode::Serial); });
  double openmp = time_of([&] { kernel(par::Mode::OpenMP); });
  std::printf("%-32s serial %8.3f ms   openmp %8.3f ms   speedup %.2fx\n", name, serial * 1e3,
              openmp * 1e3, openmp > 0 ? serial / openmp : 0.0);
}

}  // namespace

int main() {
  Family arrays = make_gallery_case("remark2.2").families[0].second;
  row("oracle projection depth 16", [&](par::Mode m) { project(arrays, 16, m); });

  Family fan0 = make_gallery_case("fan0").families[0].second;
  BooleanAlgebra alg = build_algebra(fan0, 10);
  row("algebra iso pair sweep 2^10", [&](par::Mode m) { iso_check(alg, m); });

  GalleryCase fp = make_fan_pair();
  std::vector<LatticeElement> gens{LatticeElement::from_closed(fp.families[0].second),
                                   LatticeElement::from_closed(fp.families[1].second),
                                   LatticeElement::close_of(Family::of_points(
                                       {TheoryPoint::parse("11~0"), TheoryPoint::parse("111~0")}))};
  row("lattice generation (3 gens)",
      [&](par::Mode m) { generate_lattice(gens, LatticeOps::JoinMeetPrime, 4096, m); });

  row("distributivity sweep x300", [&](par::Mode m) {
    VerifyOptions opt;
    opt.seeds = 300;
    opt.mode = m;
    run_suite("distributivity", opt);
  });

  row("oracle agreement sweep x500", [&](par::Mode m) {
    VerifyOptions opt;
    opt.seeds = 500;
    opt.mode = m;
    run_suite("oracle", opt);
  });
  return 0;
}

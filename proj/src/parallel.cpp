#include "theoria/parallel.hpp"

#include <cstdlib>
#include <exception>

namespace theoria::par {

Mode mode_from_env() {
  const char* s = std::getenv("THEORIA_SERIAL");
  if (s && s[0] == '1') return Mode::Serial;
  return Mode::OpenMP;
}

Mode& default_mode() {
  static Mode mode = mode_from_env();
  return mode;
}

namespace {

// Exceptions may not escape an OpenMP region; record them per index.
struct Slot {
  unsigned char failed = 0;
  std::string message;
};

std::vector<SweepFailure> collect(const std::vector<Slot>& slots) {
  std::vector<SweepFailure> out;
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (slots[i].failed) out.push_back({i, slots[i].message});
  return out;
}

}  // namespace

std::vector<SweepFailure> sweep_failures(std::size_t n, const std::function<bool(std::size_t)>& check,
                                         Mode mode) {
  std::vector<Slot> slots(n);
  auto run_one = [&](std::size_t i) {
    try {
      if (!check(i)) slots[i].failed = 1;
    } catch (const std::exception& e) {
      slots[i].failed = 1;
      slots[i].message = e.what();
    }
  };
  if (mode == Mode::Serial) {
    for (std::size_t i = 0; i < n; ++i) run_one(i);
    return collect(slots);
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) run_one(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) run_one(i);
#endif
  return collect(slots);
}

bool sweep_all(std::size_t n, const std::function<bool(std::size_t)>& check, Mode mode) {
  return sweep_failures(n, check, mode).empty();
}

}  // namespace theoria::par

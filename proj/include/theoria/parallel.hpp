#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace theoria::par {

enum class Mode { Serial, OpenMP };

/// Process-wide default; the CLI and THEORIA_SERIAL=1 switch it.
Mode& default_mode();
Mode mode_from_env();

struct SweepFailure {
  std::size_t index;
  std::string message;  // empty: predicate false; else the thrown error
};

/// Runs check(i) for i in [0, n) and returns the failing indices in order.
/// The serial path is the reference; the OpenMP path must produce the same
/// result for order-independent checks.
std::vector<SweepFailure> sweep_failures(std::size_t n, const std::function<bool(std::size_t)>& check,
                                         Mode mode);
inline std::vector<SweepFailure> sweep_failures(std::size_t n,
                                                const std::function<bool(std::size_t)>& check) {
  return sweep_failures(n, check, default_mode());
}

bool sweep_all(std::size_t n, const std::function<bool(std::size_t)>& check, Mode mode);
inline bool sweep_all(std::size_t n, const std::function<bool(std::size_t)>& check) {
  return sweep_all(n, check, default_mode());
}

/// Deterministic indexed map: out[i] = fn(i) regardless of schedule.
template <class T>
std::vector<T> map_indexed(std::size_t n, const std::function<T(std::size_t)>& fn, Mode mode) {
  std::vector<T> out(n);
  if (mode == Mode::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) out[i] = fn(i);
#else
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
#endif
  return out;
}

template <class T>
std::vector<T> map_indexed(std::size_t n, const std::function<T(std::size_t)>& fn) {
  return map_indexed<T>(n, fn, default_mode());
}

}  // namespace theoria::par

#pragma once

#include <cmath>
#include <cstdint>
#include <exception>
#include <vector>

// Grid-sweep kernels. Every sweep writes to a fixed slot (or reduces with
// max, which is exact in floating point), so serial and parallel execution
// produce identical results. The serial path is the reference used in tests;
// tools/bench_sweep compares the two.

namespace breather::sweep {

enum class Exec { serial, parallel };

namespace detail {

// An exception escaping an OpenMP region is fatal; capture the first one
// and rethrow after the join.
template <class Body>
void run(std::int64_t n, Exec mode, Body&& body) {
  if (mode == Exec::serial) {
    for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    return;
  }
  std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) shared(err)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(breather_sweep_err)
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace detail

template <class F>
void for_each(std::int64_t n, F&& f, Exec mode = Exec::parallel) {
  detail::run(n, mode, [&](std::size_t i) { f(i); });
}

template <class F>
std::vector<double> map(std::int64_t n, F&& f, Exec mode = Exec::parallel) {
  std::vector<double> out(static_cast<std::size_t>(n));
  detail::run(n, mode, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

template <class F>
double max_abs(std::int64_t n, F&& f, Exec mode = Exec::parallel) {
  std::vector<double> vals = map(n, [&](std::size_t i) { return std::abs(f(i)); }, mode);
  double best = 0.0;
  for (double v : vals)
    if (v > best) best = v;
  return best;
}

}  // namespace breather::sweep

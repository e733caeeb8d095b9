#pragma once

#include <complex>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "mrhweno/fields.hpp"

namespace mrhweno {

inline void lincomb(double& out, double a, double x, double b, double y, double c, double z) {
  out = a * x + b * y + c * z;
}

inline void lincomb(std::complex<double>& out, double a, std::complex<double> x, double b,
                    std::complex<double> y, double c, std::complex<double> z) {
  out = a * x + b * y + c * z;
}

// Scratch storage of the three-stage scheme.
template <class State>
struct RK3Workspace {
  State rhs{};
  State stage{};
};

// Third-order TVD Runge-Kutta step. `rhs(u, t, du)` evaluates L(u) into du and may overwrite
// u (boundary fill, moment modification), which then enters the convex combinations.
template <class State, class Rhs>
void rk3_step(State& u, double t, double dt, Rhs&& rhs, RK3Workspace<State>& ws) {
  State& k = ws.rhs;
  State& s = ws.stage;
  rhs(u, t, k);
  lincomb(s, 1.0, u, dt, k, 0.0, k);
  rhs(s, t + dt, k);
  lincomb(s, 0.75, u, 0.25, s, 0.25 * dt, k);
  rhs(s, t + 0.5 * dt, k);
  lincomb(u, 1.0 / 3.0, u, 2.0 / 3.0, s, 2.0 / 3.0 * dt, k);
}

template <class State, class Rhs>
void rk3_step(State& u, double t, double dt, Rhs&& rhs) {
  RK3Workspace<State> ws{u, u};
  rk3_step(u, t, dt, rhs, ws);
}

// Runs f(i) for i in [begin, end) on up to `threads` threads. The first exception thrown by
// any worker is rethrown on the calling thread after all workers finish.
template <class F>
void parallel_for(int begin, int end, int threads, F&& f) {
  const int count = end - begin;
  if (count <= 0) return;
  if (threads <= 1 || count < 2 * threads) {
    for (int i = begin; i < end; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    const int lo = begin + static_cast<int>(static_cast<long>(count) * t / threads);
    const int hi = begin + static_cast<int>(static_cast<long>(count) * (t + 1) / threads);
    pool.emplace_back([&, lo, hi, t] {
      try {
        for (int i = lo; i < hi; ++i) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mrhweno

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "mrhweno/grid.hpp"

namespace mrhweno {

// Conserved state with up to four components; unused trailing components stay zero.
using StateVec = std::array<double, 4>;

// Zeroth (u) and first x-moments (v) of every conserved variable, with two ghost layers per side.
class MomentField1D {
 public:
  MomentField1D() = default;
  MomentField1D(int nvars, int n)
      : nvars_(nvars), n_(n), stride_(n + 2 * kGhostLayers),
        u_(static_cast<std::size_t>(nvars) * stride_, 0.0),
        v_(static_cast<std::size_t>(nvars) * stride_, 0.0) {}

  int nvars() const { return nvars_; }
  int n() const { return n_; }
  int stride() const { return stride_; }

  // Storage position of cell i (i may be -2..n+1).
  int cell(int i) const { return i + kGhostLayers; }
  std::size_t at(int var, int i) const {
    return static_cast<std::size_t>(var) * stride_ + cell(i);
  }

  double& u(int var, int i) { return u_[at(var, i)]; }
  double u(int var, int i) const { return u_[at(var, i)]; }
  double& v(int var, int i) { return v_[at(var, i)]; }
  double v(int var, int i) const { return v_[at(var, i)]; }

  std::vector<double>& u_data() { return u_; }
  const std::vector<double>& u_data() const { return u_; }
  std::vector<double>& v_data() { return v_; }
  const std::vector<double>& v_data() const { return v_; }

 private:
  int nvars_ = 0;
  int n_ = 0;
  int stride_ = 0;
  std::vector<double> u_;
  std::vector<double> v_;
};

// Zeroth (u), first x- (v) and first y-moments (w) on a 2D grid with two ghost layers.
class MomentField2D {
 public:
  MomentField2D() = default;
  MomentField2D(int nvars, int nx, int ny)
      : nvars_(nvars), nx_(nx), ny_(ny), sx_(nx + 2 * kGhostLayers),
        sy_(ny + 2 * kGhostLayers), cells_(sx_ * sy_),
        u_(static_cast<std::size_t>(nvars) * cells_, 0.0),
        v_(static_cast<std::size_t>(nvars) * cells_, 0.0),
        w_(static_cast<std::size_t>(nvars) * cells_, 0.0) {}

  int nvars() const { return nvars_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int sx() const { return sx_; }
  int sy() const { return sy_; }
  int cells() const { return cells_; }

  int cell(int i, int j) const { return (i + kGhostLayers) + (j + kGhostLayers) * sx_; }
  int ci(int c) const { return c % sx_ - kGhostLayers; }
  int cj(int c) const { return c / sx_ - kGhostLayers; }
  std::size_t at(int var, int c) const { return static_cast<std::size_t>(var) * cells_ + c; }

  double& u(int var, int c) { return u_[at(var, c)]; }
  double u(int var, int c) const { return u_[at(var, c)]; }
  double& v(int var, int c) { return v_[at(var, c)]; }
  double v(int var, int c) const { return v_[at(var, c)]; }
  double& w(int var, int c) { return w_[at(var, c)]; }
  double w(int var, int c) const { return w_[at(var, c)]; }

  std::vector<double>& u_data() { return u_; }
  const std::vector<double>& u_data() const { return u_; }
  std::vector<double>& v_data() { return v_; }
  const std::vector<double>& v_data() const { return v_; }
  std::vector<double>& w_data() { return w_; }
  const std::vector<double>& w_data() const { return w_; }

 private:
  int nvars_ = 0;
  int nx_ = 0;
  int ny_ = 0;
  int sx_ = 0;
  int sy_ = 0;
  int cells_ = 0;
  std::vector<double> u_;
  std::vector<double> v_;
  std::vector<double> w_;
};

namespace detail {
inline void lincomb(std::vector<double>& out, double a, const std::vector<double>& x, double b,
                    const std::vector<double>& y, double c, const std::vector<double>& z) {
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) out[k] = a * x[k] + b * y[k] + c * z[k];
}
}  // namespace detail

// out = a*x + b*y + c*z over every stored moment.
inline void lincomb(MomentField1D& out, double a, const MomentField1D& x, double b,
                    const MomentField1D& y, double c, const MomentField1D& z) {
  detail::lincomb(out.u_data(), a, x.u_data(), b, y.u_data(), c, z.u_data());
  detail::lincomb(out.v_data(), a, x.v_data(), b, y.v_data(), c, z.v_data());
}

inline void lincomb(MomentField2D& out, double a, const MomentField2D& x, double b,
                    const MomentField2D& y, double c, const MomentField2D& z) {
  detail::lincomb(out.u_data(), a, x.u_data(), b, y.u_data(), c, z.u_data());
  detail::lincomb(out.v_data(), a, x.v_data(), b, y.v_data(), c, z.v_data());
  detail::lincomb(out.w_data(), a, x.w_data(), b, y.w_data(), c, z.w_data());
}

}  // namespace mrhweno

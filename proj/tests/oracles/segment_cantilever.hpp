#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "moems/cantilever.hpp"
#include "moems/constants.hpp"

namespace oracle {

// Cantilever discretized into rigid segments joined by torsion springs
// k_j = E' I(s_j) / ds. Each segment is a tilted plate over the dielectric,
// evaluated at its midpoint. Equilibria come from Newton on the energy
// gradient; the pulldown voltage is the largest V with a stable one.
class SegmentCantilever {
 public:
  SegmentCantilever(const moems::CantileverGeometry& cant, const moems::MaterialProps& props,
                    double kappa, int segments = 50)
      : cant_(cant), n_(segments), ds_(cant.length / segments) {
    const double ep = props.youngs_modulus / (1.0 - props.poisson);
    const double t = cant.structural_thickness;
    phi0_ = Eigen::VectorXd::Constant(n_, kappa * ds_);
    phi0_[0] = 0.5 * kappa * ds_;
    k_.resize(n_);
    w_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      k_[j] = ep * cant.width_at(j * ds_) * t * t * t / 12.0 / ds_;
      w_[j] = cant.width_at((j + 0.5) * ds_);
    }
  }

  Eigen::VectorXd rest() const { return phi0_; }

  double tip_height(const Eigen::VectorXd& phi) const {
    double th = 0.0, y = 0.0;
    for (int j = 0; j < n_; ++j) {
      th += phi[j];
      y += ds_ * std::sin(th);
    }
    return y;
  }

  Eigen::VectorXd gradient(const Eigen::VectorXd& phi, double v) const {
    const double series = cant_.dielectric_thickness / cant_.dielectric_rel_permittivity;
    std::vector<double> th(n_), direct(n_), dh(n_);
    double angle = 0.0, y = 0.0;
    for (int j = 0; j < n_; ++j) {
      angle += phi[j];
      th[j] = angle;
      const double hm = y + 0.5 * ds_ * std::sin(angle);
      const double gap = cant_.air_gap + hm + series;
      const double e = moems::kVacuumPermittivity * w_[j] * ds_;
      direct[j] = -e * std::sin(angle) / gap;
      dh[j] = -e * std::cos(angle) / (gap * gap);
      y += ds_ * std::sin(angle);
    }
    std::vector<double> dth(n_);
    double suffix = 0.0;
    for (int k = n_ - 1; k >= 0; --k) {
      dth[k] = direct[k] + ds_ * std::cos(th[k]) * (0.5 * dh[k] + suffix);
      suffix += dh[k];
    }
    Eigen::VectorXd g(n_);
    double acc = 0.0;
    for (int i = n_ - 1; i >= 0; --i) {
      acc += dth[i];
      g[i] = k_[i] * (phi[i] - phi0_[i]) - 0.5 * v * v * acc;
    }
    return g;
  }

  // Newton from `x`. Returns false on contact, divergence or an unstable
  // (saddle) equilibrium.
  bool solve(double v, Eigen::VectorXd& x) const {
    Eigen::VectorXd cur = x;
    for (int it = 0; it < 80; ++it) {
      const Eigen::VectorXd g = gradient(cur, v);
      const Eigen::MatrixXd h = hessian(cur, v);
      const Eigen::VectorXd dx = h.ldlt().solve(-g);
      if (!dx.allFinite()) return false;
      cur += dx;
      if (min_node_height(cur) <= 0.0) return false;
      if (dx.lpNorm<Eigen::Infinity>() < 1e-13) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hessian(cur, v));
        if (eig.eigenvalues().minCoeff() <= 0.0) return false;
        x = cur;
        return true;
      }
    }
    return false;
  }

  double pulldown_voltage(double v_start = 1.0) const {
    Eigen::VectorXd x = phi0_;
    double lo = 0.0, hi = v_start;
    for (;;) {
      Eigen::VectorXd trial = x;
      if (!solve(hi, trial)) break;
      lo = hi;
      x = trial;
      hi *= 1.3;
    }
    for (int i = 0; i < 40; ++i) {
      const double mid = 0.5 * (lo + hi);
      Eigen::VectorXd trial = x;
      if (solve(mid, trial)) {
        lo = mid;
        x = trial;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

 private:
  Eigen::MatrixXd hessian(const Eigen::VectorXd& phi, double v) const {
    Eigen::MatrixXd h(n_, n_);
    const double step = 1e-9;
    for (int k = 0; k < n_; ++k) {
      Eigen::VectorXd a = phi, b = phi;
      a[k] += step;
      b[k] -= step;
      h.col(k) = (gradient(a, v) - gradient(b, v)) / (2.0 * step);
    }
    return 0.5 * (h + h.transpose());
  }

  double min_node_height(const Eigen::VectorXd& phi) const {
    double th = 0.0, y = 0.0, m = cant_.air_gap;
    for (int j = 0; j < n_; ++j) {
      th += phi[j];
      y += ds_ * std::sin(th);
      m = std::min(m, cant_.air_gap + y);
    }
    return m;
  }

  moems::CantileverGeometry cant_;
  int n_;
  double ds_;
  Eigen::VectorXd phi0_;
  std::vector<double> k_;
  std::vector<double> w_;
};

}  // namespace oracle

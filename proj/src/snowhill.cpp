#include "ac4mpc/snowhill.hpp"

#include <cmath>
#include <stdexcept>

namespace ac4mpc {

double a_res(double p, const DynamicsConfig& cfg) {
  const double z = p - cfg.hill_center;
  if (std::abs(z) >= cfg.hill_halfwidth) return 0.0;
  return -cfg.a_hill * 0.5 * (1.0 + std::cos(M_PI * z / cfg.hill_halfwidth));
}

double a_res_dp(double p, const DynamicsConfig& cfg) {
  const double z = p - cfg.hill_center;
  if (std::abs(z) >= cfg.hill_halfwidth) return 0.0;
  return cfg.a_hill * 0.5 * (M_PI / cfg.hill_halfwidth) * std::sin(M_PI * z / cfg.hill_halfwidth);
}

namespace {

inline Eigen::Vector2d ode_rhs(const Eigen::Vector2d& x, double u, const DynamicsConfig& cfg) {
  return Eigen::Vector2d(x[1], u + a_res(x[0], cfg));
}

// df/dx = [[0, 1], [a_res'(p), 0]]
inline Eigen::Matrix2d ode_jac(const Eigen::Vector2d& x, const DynamicsConfig& cfg) {
  Eigen::Matrix2d J;
  J << 0.0, 1.0, a_res_dp(x[0], cfg), 0.0;
  return J;
}

}  // namespace

State step(const State& s, Control u, const DynamicsConfig& cfg) {
  if (!s.finite() || !std::isfinite(u)) {
    throw std::invalid_argument("step: non-finite state or control");
  }
  const double h = cfg.t_d;
  const Eigen::Vector2d x = s.vec();
  const Eigen::Vector2d k1 = ode_rhs(x, u, cfg);
  const Eigen::Vector2d k2 = ode_rhs(x + 0.5 * h * k1, u, cfg);
  const Eigen::Vector2d k3 = ode_rhs(x + 0.5 * h * k2, u, cfg);
  const Eigen::Vector2d k4 = ode_rhs(x + h * k3, u, cfg);
  return State::from(x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

void step_jacobians(const State& s, Control u, const DynamicsConfig& cfg,
                    Eigen::Matrix2d& dF_ds, Eigen::Vector2d& dF_du) {
  const double h = cfg.t_d;
  const Eigen::Vector2d x = s.vec();
  const Eigen::Vector2d du(0.0, 1.0);  // df/du of the continuous dynamics
  const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();

  const Eigen::Vector2d k1 = ode_rhs(x, u, cfg);
  const Eigen::Matrix2d k1_x = ode_jac(x, cfg);
  const Eigen::Vector2d k1_u = du;

  const Eigen::Vector2d x2 = x + 0.5 * h * k1;
  const Eigen::Vector2d k2 = ode_rhs(x2, u, cfg);
  const Eigen::Matrix2d J2 = ode_jac(x2, cfg);
  const Eigen::Matrix2d k2_x = J2 * (I + 0.5 * h * k1_x);
  const Eigen::Vector2d k2_u = J2 * (0.5 * h * k1_u) + du;

  const Eigen::Vector2d x3 = x + 0.5 * h * k2;
  const Eigen::Vector2d k3 = ode_rhs(x3, u, cfg);
  const Eigen::Matrix2d J3 = ode_jac(x3, cfg);
  const Eigen::Matrix2d k3_x = J3 * (I + 0.5 * h * k2_x);
  const Eigen::Vector2d k3_u = J3 * (0.5 * h * k2_u) + du;

  const Eigen::Vector2d x4 = x + h * k3;
  const Eigen::Matrix2d J4 = ode_jac(x4, cfg);
  const Eigen::Matrix2d k4_x = J4 * (I + h * k3_x);
  const Eigen::Vector2d k4_u = J4 * (h * k3_u) + du;
  (void)k3;

  dF_ds = I + (h / 6.0) * (k1_x + 2.0 * k2_x + 2.0 * k3_x + k4_x);
  dF_du = (h / 6.0) * (k1_u + 2.0 * k2_u + 2.0 * k3_u + k4_u);
}

double stage_cost(const State& s, Control u, const CostConfig& cfg) {
  const Eigen::Vector2d x = s.vec();
  return std::sqrt(x.dot(cfg.Q * x) + 1.0) + cfg.r_control * u * u;
}

void stage_cost_derivatives(const State& s, Control u, const CostConfig& cfg,
                            Eigen::Vector2d& grad_s, Eigen::Matrix2d& hess_s,
                            double& grad_u, double& hess_u) {
  const Eigen::Vector2d x = s.vec();
  const Eigen::Vector2d Qx = cfg.Q * x;
  const double m = x.dot(Qx) + 1.0;
  const double r = std::sqrt(m);
  grad_s = Qx / r;
  hess_s = cfg.Q / r - (Qx * Qx.transpose()) / (m * r);
  grad_u = 2.0 * cfg.r_control * u;
  hess_u = 2.0 * cfg.r_control;
}

double penalty_cost(double c0, const Eigen::VectorXd& g, const Eigen::VectorXd& h,
                    const CostConfig& cfg) {
  if ((cfg.w_g.size() && cfg.w_g.minCoeff() < 0.0) || (cfg.w_h.size() && cfg.w_h.minCoeff() < 0.0)) {
    throw std::invalid_argument("penalty_cost: negative penalty weight");
  }
  if (g.size() != cfg.w_g.size() || h.size() != cfg.w_h.size()) {
    throw std::invalid_argument("penalty_cost: residual/weight size mismatch");
  }
  double c = c0;
  for (Eigen::Index i = 0; i < g.size(); ++i) c += cfg.w_g[i] * std::abs(g[i]);
  for (Eigen::Index i = 0; i < h.size(); ++i) c += cfg.w_h[i] * std::max(0.0, -h[i]);
  return c;
}

double huber(double x, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("huber: delta must be positive");
  const double a = std::abs(x);
  if (a <= delta) return 0.5 * x * x;
  return delta * (a - 0.5 * delta);
}

}  // namespace ac4mpc

#pragma once

#include <Eigen/Dense>

namespace ac4mpc {

/// Point-mass vehicle state on the slope.
struct State {
  double p{0.0};  // position [m]
  double v{0.0};  // velocity [m/s]

  Eigen::Vector2d vec() const { return Eigen::Vector2d(p, v); }
  static State from(const Eigen::Vector2d& x) { return State{x[0], x[1]}; }
  bool finite() const { return std::isfinite(p) && std::isfinite(v); }
};

/// Acceleration command [m/s^2]; controllers keep |u| <= 1.
using Control = double;

struct DynamicsConfig {
  double t_d{0.1};             // integration step [s]
  double a_hill{2.0};          // peak slope deceleration [m/s^2], above the control bound
  double hill_center{-5.0};    // [m]
  double hill_halfwidth{3.0};  // [m]
};

struct CostConfig {
  Eigen::Matrix2d Q{(Eigen::Matrix2d() << 1.0, 0.0, 0.0, 0.1).finished()};
  double r_control{0.1};
  double gamma{0.99};
  Eigen::VectorXd w_g;  // equality penalty weights, >= 0
  Eigen::VectorXd w_h;  // inequality penalty weights, >= 0
};

/// Slope force: raised-cosine bump of amplitude a_hill centered at
/// hill_center, zero outside +/- hill_halfwidth. C1 in p.
double a_res(double p, const DynamicsConfig& cfg);

/// d a_res / dp.
double a_res_dp(double p, const DynamicsConfig& cfg);

/// One RK4 step of p' = v, v' = u + a_res(p) with step t_d.
/// Throws std::invalid_argument on non-finite input.
State step(const State& s, Control u, const DynamicsConfig& cfg);

/// Exact Jacobians of the RK4 map (chain rule through the four stages).
void step_jacobians(const State& s, Control u, const DynamicsConfig& cfg,
                    Eigen::Matrix2d& dF_ds, Eigen::Vector2d& dF_du);

/// sqrt(s'Qs + 1) + r_control * u^2. Always >= 1, smooth.
double stage_cost(const State& s, Control u, const CostConfig& cfg);

/// Exact first and second derivatives of stage_cost. The state Hessian is
/// positive semidefinite for any PSD Q.
void stage_cost_derivatives(const State& s, Control u, const CostConfig& cfg,
                            Eigen::Vector2d& grad_s, Eigen::Matrix2d& hess_s,
                            double& grad_u, double& hess_u);

/// L1-penalty reformulated cost: c0 + w_g'|g| + w_h' max(0, -h).
/// Violations strictly increase cost.
double penalty_cost(double c0, const Eigen::VectorXd& g, const Eigen::VectorXd& h,
                    const CostConfig& cfg);

/// Huber function: x^2/2 inside |x| <= delta, linear continuation outside.
/// Throws std::invalid_argument for delta <= 0.
double huber(double x, double delta);

}  // namespace ac4mpc

#include "mudef/jacobi.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "mudef/errors.hpp"

namespace mudef {

namespace {

void require_positive_mu(const MuContext& ctx, const char* who) {
  if (!(ctx.mu() > 0)) {
    throw DomainError(std::string(who) + ": the eta_mu representation needs mu > 0");
  }
}

// Monic Jacobi recurrence p_{n+1} = (t - a_n) p_n - b_n p_{n-1}.
double recurrence_a(int n, double alpha, double beta) {
  if (n == 0) return (beta - alpha) / (alpha + beta + 2.0);
  const double s = 2.0 * n + alpha + beta;
  return (beta * beta - alpha * alpha) / (s * (s + 2.0));
}

double recurrence_b(int n, double alpha, double beta) {
  if (n == 1) {
    // (1 + alpha + beta) cancels; keeps alpha + beta = -1 well defined.
    const double s = 2.0 + alpha + beta;
    return 4.0 * (1.0 + alpha) * (1.0 + beta) / (s * s * (s + 1.0));
  }
  const double s = 2.0 * n + alpha + beta;
  return 4.0 * n * (n + alpha) * (n + beta) * (n + alpha + beta) /
         (s * s * (s + 1.0) * (s - 1.0));
}

}  // namespace

double jacobi_mass(double alpha, double beta) {
  return std::exp((alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                  std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
}

GaussRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: need at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("gauss_jacobi: exponents must exceed -1");
  }
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag(i) = recurrence_a(i, alpha, beta);
  for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(recurrence_b(i, alpha, beta));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw EvaluationError("gauss_jacobi: tridiagonal eigensolver failed");
  }
  const double mass = jacobi_mass(alpha, beta);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mass * v0 * v0;
  }
  return rule;
}

GaussRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

JacobiRule eta_rule(const MuContext& ctx, int n_nodes) {
  require_positive_mu(ctx, "eta_rule");
  if (n_nodes < 1) throw std::invalid_argument("eta_rule: need at least one node");
  const double alpha = ctx.mu() - 1.0;
  const double beta = ctx.mu();
  GaussRule g = gauss_jacobi(n_nodes, alpha, beta);
  JacobiRule rule;
  rule.raw_mass = jacobi_mass(alpha, beta);
  rule.nodes = std::move(g.nodes);
  rule.weights.resize(rule.nodes.size());
  for (std::size_t i = 0; i < rule.weights.size(); ++i) rule.weights[i] = g.weights[i] / rule.raw_mass;
  return rule;
}

double gauss_trig_error_bound(int n, double s) {
  const double as = std::abs(s);
  if (as == 0.0) return 0.0;
  const double log_bound = std::log(4.0) + 2.0 * n * std::log(as / 2.0) - std::lgamma(2.0 * n + 1.0);
  return std::exp(log_bound);
}

int eta_nodes_for(double s_max) {
  int n = 8;
  while (gauss_trig_error_bound(n, s_max) > 1e-18) ++n;
  return n;
}

std::complex<double> exp_mu_integral(std::complex<double> z, const MuContext& ctx,
                                     const JacobiRule& rule) {
  require_positive_mu(ctx, "exp_mu_integral");
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * std::exp(z * rule.nodes[i]);
  }
  return sum;
}

}  // namespace mudef

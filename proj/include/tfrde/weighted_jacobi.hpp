#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <vector>

#include "tfrde/timegrid.hpp"

namespace tfrde {

/// Orthonormal polynomials P_j on [0,1] for the probability weight
/// omega(x) = alpha (1-x)^(alpha-1), i.e. the Jacobi family with
/// parameters (alpha-1, 0) mapped to [0,1] and normalized so that
/// P_0 = 1 and every P_j has unit omega-norm and positive leading
/// coefficient.
class AlphaJacobiBasis {
 public:
  AlphaJacobiBasis(double alpha, int max_degree);

  double alpha() const { return alpha_; }
  int max_degree() const { return max_degree_; }

  double eval(int mu, double x) const;
  /// Fills out[0..upto] with P_0(x), ..., P_upto(x).
  void eval_all(int upto, double x, double* out) const;
  /// Values of P_mu, P_mu', ..., P_mu^(max_order) at x.
  std::vector<double> derivs_at(int mu, double x, int max_order) const;

  /// Monic three-term recurrence on [0,1]: p_{n+1} = (x - a_n) p_n - b_n p_{n-1}.
  const std::vector<double>& recurrence_a() const { return a_; }
  const std::vector<double>& recurrence_b() const { return b_; }

 private:
  double alpha_;
  int max_degree_;
  std::vector<double> a_;      // a_0 .. a_maxdeg
  std::vector<double> b_;      // b_0 (=1) .. b_maxdeg
  std::vector<double> sqrtb_;  // sqrt(b_n)
};

/// k-point Gauss-Jacobi rule for the weight of AlphaJacobiBasis:
/// nodes are the zeros of P_k, weights are positive and sum to 1.
struct QuadratureRule {
  int k = 0;
  std::vector<double> nodes;    // strictly increasing, in (0,1)
  std::vector<double> weights;  // positive
};

QuadratureRule gauss_rule(const AlphaJacobiBasis& basis, int k);

/// Riemann-Liouville integral I^alpha P_mu(c) for c in (0,1], via the exact
/// identity I^alpha P_mu(c) = c^alpha / Gamma(alpha+1) * sum_i b_i P_mu(c c_i)
/// (exact for mu <= 2k-1).
double frac_int_P(const AlphaJacobiBasis& basis, const QuadratureRule& rule, int mu,
                  double c);

/// J_mu^alpha(x) = 1/Gamma(alpha) * int_0^1 (x - tau)^(alpha-1) P_mu(tau) dtau
/// for x >= 1. Two regimes: an interior route below `series_switch` and a
/// binomial series in 1/x above it.
class JFunction {
 public:
  struct Options {
    double series_switch = 2.0;
    double series_tol = 1e-18;
    int max_terms = 200;
  };

  JFunction(std::shared_ptr<const AlphaJacobiBasis> basis, int max_mu,
            Options options = {});

  int max_mu() const { return max_mu_; }
  const Options& options() const { return options_; }

  double operator()(int mu, double x) const;
  /// Fills out[0..max_mu] with J_mu(x) for all mu at once.
  void eval_all(double x, double* out) const;

  /// The two routes individually (for consistency checks).
  void interior_all(double x, double* out) const;
  void series_all(double x, double* out) const;

 private:
  void edge_all(double x, double* out) const;  // 1 < x < 1 + edge threshold
  const std::vector<double>& legendre_points(int n) const;

  std::shared_ptr<const AlphaJacobiBasis> basis_;
  int max_mu_;
  Options options_;
  double inv_gamma_alpha_;
  double inv_gamma_alpha1_;
  // plain moments m[mu][m] = int_0^1 tau^m P_mu(tau) dtau, m <= max_terms+1
  std::vector<std::vector<double>> moments_;
  // Gauss-Legendre rules on [0,1] keyed by point count (lazy).
  mutable std::mutex gl_mutex_;
  mutable std::vector<std::pair<int, std::vector<double>>> gl_rules_;  // (n, x0 w0 x1 w1 ...)
};

/// Blended-iteration scalar: |mu*| where mu* minimizes
/// max_lambda |lambda - |mu||^2 / (2 |mu| |lambda|) over the spectrum,
/// ties resolved toward the smallest modulus.
double rho_param(const Eigen::MatrixXd& Xs);

/// Everything the FHBVM stepper precomputes for one (alpha, k, s, mesh):
/// quadrature rule, collocation matrices, the blended-iteration scalar and
/// the fractional-integral tables at the quadrature abscissae.
struct FhbvmTables {
  double alpha = 0.0;
  int k = 0;
  int s = 0;
  MixedMesh mesh;

  std::shared_ptr<const AlphaJacobiBasis> basis;
  std::shared_ptr<const JFunction> jfun;

  QuadratureRule rule;
  Eigen::MatrixXd Ps;        // k x s, P_mu(c_i)
  Eigen::MatrixXd Is_alpha;  // k x s, I^alpha P_mu(c_i)
  Eigen::MatrixXd OmegaPs;   // k x s, Omega * Ps
  Eigen::MatrixXd Xs_alpha;  // s x s, Ps^T Omega Is
  Eigen::MatrixXd rho_Xinv;  // s x s, rho_s * Xs^-1
  double rho_s = 0.0;
  double norm_PsT_Omega = 0.0;  // induced-infinity norms for the switching test
  double norm_Is = 0.0;

  // J tables at the quadrature abscissae, each k x s with (i, mu) layout:
  // uniform_J[l-1](i, mu) = J_mu(l + c_i),             l = 1 .. M-m-1
  // graded_J[l-1](i, mu)  = J_mu((r^l-1)/(r-1) + c_i r^l), l = 1 .. v-1
  // cross_J[idx(j, l)](i, mu) = J_mu of the mixed-mesh argument,
  //                             j = m .. M-1, l = 0 .. v-1
  std::vector<Eigen::MatrixXd> uniform_J;
  std::vector<Eigen::MatrixXd> graded_J;
  std::vector<Eigen::MatrixXd> cross_J;

  int cross_index(int j, int l) const { return (j - mesh.m) * mesh.v + l; }
  /// Argument of the cross-mesh J entry (paper indices j, l, node c).
  double cross_argument(int j, int l, double c) const;
};

FhbvmTables build_tables(std::shared_ptr<const AlphaJacobiBasis> basis, int k, int s,
                         const MixedMesh& mesh);

/// Text dump/load of the precomputed tables, one record per line with
/// 17 significant digits.
void dump_tables(const FhbvmTables& tables, std::ostream& os);
FhbvmTables load_tables(std::istream& is);

}  // namespace tfrde

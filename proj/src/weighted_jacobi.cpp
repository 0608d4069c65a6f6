#include "tfrde/weighted_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tfrde/errors.hpp"

namespace tfrde {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEdgeSwitch = 0.02;  // interior route splits off an edge layer below 1 + this
constexpr double kEdgeDelta = 0.02;   // width of the split-off layer at tau = 1
}  // namespace

// ---------------------------------------------------------------------------
// AlphaJacobiBasis
// ---------------------------------------------------------------------------

AlphaJacobiBasis::AlphaJacobiBasis(double alpha, int max_degree)
    : alpha_(alpha), max_degree_(max_degree) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("AlphaJacobiBasis: alpha in (0,1) required");
  if (max_degree < 0) throw std::invalid_argument("AlphaJacobiBasis: max_degree >= 0");

  // Monic Jacobi (alpha-1, 0) recurrence mapped from [-1,1] to [0,1]:
  // a~_n = (a_n + 1)/2, b~_n = b_n/4, with b~_0 = total weight mass = 1.
  const int n_coeff = max_degree + 1;
  a_.resize(n_coeff);
  b_.resize(n_coeff);
  a_[0] = 1.0 / (1.0 + alpha);
  b_[0] = 1.0;
  for (int n = 1; n < n_coeff; ++n) {
    const double am = -(alpha - 1.0) * (alpha - 1.0) /
                      ((2.0 * n + alpha - 1.0) * (2.0 * n + alpha + 1.0));
    a_[n] = 0.5 * (am + 1.0);
    const double nn = static_cast<double>(n);
    b_[n] = nn * nn * (nn + alpha - 1.0) * (nn + alpha - 1.0) /
            ((2.0 * nn + alpha - 1.0) * (2.0 * nn + alpha - 1.0) * (2.0 * nn + alpha) *
             (2.0 * nn + alpha - 2.0));
  }
  sqrtb_.resize(n_coeff);
  for (int n = 0; n < n_coeff; ++n) sqrtb_[n] = std::sqrt(b_[n]);
}

double AlphaJacobiBasis::eval(int mu, double x) const {
  if (mu < 0 || mu > max_degree_) throw std::out_of_range("AlphaJacobiBasis: bad mu");
  double pm = 0.0, p = 1.0;
  for (int n = 0; n < mu; ++n) {
    const double pn = ((x - a_[n]) * p - (n > 0 ? sqrtb_[n] * pm : 0.0)) / sqrtb_[n + 1];
    pm = p;
    p = pn;
  }
  return p;
}

void AlphaJacobiBasis::eval_all(int upto, double x, double* out) const {
  if (upto < 0 || upto > max_degree_) throw std::out_of_range("AlphaJacobiBasis: bad upto");
  out[0] = 1.0;
  if (upto == 0) return;
  double pm = 0.0, p = 1.0;
  for (int n = 0; n < upto; ++n) {
    const double pn = ((x - a_[n]) * p - (n > 0 ? sqrtb_[n] * pm : 0.0)) / sqrtb_[n + 1];
    pm = p;
    p = pn;
    out[n + 1] = p;
  }
}

std::vector<double> AlphaJacobiBasis::derivs_at(int mu, double x, int max_order) const {
  if (mu < 0 || mu > max_degree_) throw std::out_of_range("AlphaJacobiBasis: bad mu");
  const int q = max_order;
  // d[n][d]: dth derivative of P_n at x, via the differentiated recurrence.
  std::vector<std::vector<double>> tab(mu + 1, std::vector<double>(q + 1, 0.0));
  tab[0][0] = 1.0;
  for (int n = 0; n < mu; ++n) {
    for (int d = 0; d <= q; ++d) {
      double val = (x - a_[n]) * tab[n][d];
      if (d > 0) val += d * tab[n][d - 1];
      if (n > 0) val -= sqrtb_[n] * tab[n - 1][d];
      tab[n + 1][d] = val / sqrtb_[n + 1];
    }
  }
  return tab[mu];
}

// ---------------------------------------------------------------------------
// Gauss-Jacobi rule (Golub-Welsch on the symmetric tridiagonal recurrence)
// ---------------------------------------------------------------------------

QuadratureRule gauss_rule(const AlphaJacobiBasis& basis, int k) {
  if (k < 1) throw std::invalid_argument("gauss_rule: k >= 1 required");
  if (k > basis.max_degree())
    throw std::invalid_argument("gauss_rule: k exceeds basis max degree");

  Eigen::VectorXd diag(k), sub(std::max(k - 1, 0));
  for (int n = 0; n < k; ++n) diag[n] = basis.recurrence_a()[n];
  for (int n = 1; n < k; ++n) sub[n - 1] = std::sqrt(basis.recurrence_b()[n]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw SolverError("gauss_rule: tridiagonal eigensolver failed");

  QuadratureRule rule;
  rule.k = k;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  for (int i = 0; i < k; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = v0 * v0;  // total weight mass is 1
  }
  return rule;
}

double frac_int_P(const AlphaJacobiBasis& basis, const QuadratureRule& rule, int mu,
                  double c) {
  if (!(c > 0.0 && c <= 1.0))
    throw std::invalid_argument("frac_int_P: c in (0,1] required");
  if (mu > 2 * rule.k - 1)
    throw std::invalid_argument("frac_int_P: mu > 2k-1 breaks exactness");
  const double alpha = basis.alpha();
  double sum = 0.0;
  for (int i = 0; i < rule.k; ++i)
    sum += rule.weights[i] * basis.eval(mu, c * rule.nodes[i]);
  return std::pow(c, alpha) / std::tgamma(alpha + 1.0) * sum;
}

// ---------------------------------------------------------------------------
// JFunction
// ---------------------------------------------------------------------------

JFunction::JFunction(std::shared_ptr<const AlphaJacobiBasis> basis, int max_mu,
                     Options options)
    : basis_(std::move(basis)), max_mu_(max_mu), options_(options) {
  if (max_mu_ < 0 || max_mu_ > basis_->max_degree())
    throw std::invalid_argument("JFunction: bad max_mu");
  const double alpha = basis_->alpha();
  inv_gamma_alpha_ = 1.0 / std::tgamma(alpha);
  inv_gamma_alpha1_ = 1.0 / std::tgamma(alpha + 1.0);

  // Plain moments m_m(mu) = int_0^1 tau^m P_mu dtau, exact by Gauss-Legendre
  // of sufficient order (integrand degree m + mu).
  const int n_mom = options_.max_terms + 2;
  const int gl_n = (n_mom + max_mu_) / 2 + 6;
  const std::vector<double>& gl = legendre_points(gl_n);
  moments_.assign(max_mu_ + 1, std::vector<double>(n_mom, 0.0));
  std::vector<double> p(max_mu_ + 1);
  for (int g = 0; g < gl_n; ++g) {
    const double t = gl[2 * g], w = gl[2 * g + 1];
    basis_->eval_all(max_mu_, t, p.data());
    double pw = w;
    for (int mth = 0; mth < n_mom; ++mth) {
      for (int mu = 0; mu <= max_mu_; ++mu) moments_[mu][mth] += pw * p[mu];
      pw *= t;
    }
  }
}

namespace {
int round_up_gl_order(int n) {
  static constexpr int ladder[] = {48,  64,  96,   128,  192,  256,  384,
                                   512, 768, 1024, 1536, 2048, 3072, 4096};
  for (int v : ladder)
    if (n <= v) return v;
  return 4096;
}
}  // namespace

const std::vector<double>& JFunction::legendre_points(int n) const {
  std::lock_guard<std::mutex> lock(gl_mutex_);
  for (const auto& entry : gl_rules_)
    if (entry.first == n) return entry.second;

  // Newton iteration on P_n with Chebyshev initial guesses, mapped to [0,1].
  std::vector<double> flat(2 * n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double pm = 0.0, p = 1.0;
      for (int j = 0; j < n; ++j) {
        const double pn = ((2.0 * j + 1.0) * x * p - j * pm) / (j + 1.0);
        pm = p;
        p = pn;
      }
      dp = n * (x * p - pm) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double pm = 0.0, p = 1.0;
    for (int j = 0; j < n; ++j) {
      const double pn = ((2.0 * j + 1.0) * x * p - j * pm) / (j + 1.0);
      pm = p;
      p = pn;
    }
    dp = n * (x * p - pm) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    flat[2 * i] = 0.5 * (1.0 - x);  // map [-1,1] -> [0,1], descending x -> ascending t
    flat[2 * i + 1] = 0.5 * w;
    flat[2 * (n - 1 - i)] = 0.5 * (1.0 + x);
    flat[2 * (n - 1 - i) + 1] = 0.5 * w;
  }
  gl_rules_.emplace_back(n, std::move(flat));
  return gl_rules_.back().second;
}

double JFunction::operator()(int mu, double x) const {
  if (mu < 0 || mu > max_mu_) throw std::out_of_range("JFunction: bad mu");
  std::vector<double> out(max_mu_ + 1);
  eval_all(x, out.data());
  return out[mu];
}

void JFunction::eval_all(double x, double* out) const {
  if (!(x >= 1.0 - 1e-9)) throw std::invalid_argument("JFunction: x >= 1 required");
  x = std::max(x, 1.0);
  if (x - 1.0 <= 1e-13) {
    // J_mu(1) = delta_mu0 / Gamma(alpha+1)
    std::fill(out, out + max_mu_ + 1, 0.0);
    out[0] = inv_gamma_alpha1_;
    return;
  }
  if (x >= options_.series_switch) {
    series_all(x, out);
  } else {
    interior_all(x, out);
  }
}

void JFunction::series_all(double x, double* out) const {
  // (x - tau)^(alpha-1) = x^(alpha-1) sum_m g_m x^-m tau^m with
  // g_m = prod_{i<=m} (i - alpha)/i, combined with the exact plain moments.
  const double alpha = basis_->alpha();
  const int n = max_mu_ + 1;
  std::vector<double> sum(n, 0.0), peak(n, 0.0);
  double coef = 1.0;
  bool done = false;
  int mth = 0;
  for (; mth < options_.max_terms; ++mth) {
    done = true;
    for (int mu = 0; mu < n; ++mu) {
      const double term = coef * moments_[mu][mth];
      sum[mu] += term;
      peak[mu] = std::max(peak[mu], std::abs(term));
      if (std::abs(term) > options_.series_tol * std::max(peak[mu], 1e-280)) done = false;
    }
    if (done && mth > 2) break;
    coef *= (mth + 1.0 - alpha) / (mth + 1.0) / x;
    if (coef == 0.0) {  // underflow at very large arguments: series is exhausted
      done = true;
      break;
    }
  }
  if (!done)
    throw NonConvergentSeries("JFunction: binomial series did not reach tolerance at x=" +
                              std::to_string(x));
  const double front = std::exp((alpha - 1.0) * std::log(x)) * inv_gamma_alpha_;
  for (int mu = 0; mu < n; ++mu) out[mu] = front * sum[mu];
}

void JFunction::interior_all(double x, double* out) const {
  const double alpha = basis_->alpha();
  if (x - 1.0 < kEdgeSwitch) {
    edge_all(x, out);
    return;
  }
  // Direct Gauss-Legendre on [0,1]: the kernel is analytic there, with the
  // singularity at tau = x controlling the Bernstein ellipse of convergence.
  const double s0 = 2.0 * x - 1.0;
  const double rho = s0 + std::sqrt(s0 * s0 - 1.0);
  const int n = round_up_gl_order(
      static_cast<int>(std::ceil(max_mu_ / 2.0 + 24.0 / std::log(rho))) + 12);
  const std::vector<double>& gl = legendre_points(n);
  const int cnt = max_mu_ + 1;
  std::fill(out, out + cnt, 0.0);
  std::vector<double> p(cnt);
  for (int g = 0; g < n; ++g) {
    const double t = gl[2 * g];
    const double wk = gl[2 * g + 1] * std::pow(x - t, alpha - 1.0);
    basis_->eval_all(max_mu_, t, p.data());
    for (int mu = 0; mu < cnt; ++mu) out[mu] += wk * p[mu];
  }
  for (int mu = 0; mu < cnt; ++mu) out[mu] *= inv_gamma_alpha_;
}

void JFunction::edge_all(double x, double* out) const {
  // 1 < x < 1 + kEdgeSwitch. Split at tau = 1 - delta. The far part is a
  // smooth Gauss-Legendre integral; the near part expands P_mu around tau = 1
  // (finite Taylor sum) against int_0^delta (eps + s)^(alpha-1) s^n ds, whose
  // scaled form I_n = int_0^1 (e + w)^(alpha-1) w^n dw obeys the stable
  // forward recurrence I_n = ((1+e)^alpha - n e I_{n-1}) / (n + alpha).
  const double alpha = basis_->alpha();
  const double eps = x - 1.0;
  const double delta = kEdgeDelta;
  const int cnt = max_mu_ + 1;

  const double far_len = 1.0 - delta;
  const double s0 = (2.0 * x - far_len) / far_len;
  const double rho = s0 + std::sqrt(s0 * s0 - 1.0);
  int n = static_cast<int>(std::ceil(max_mu_ / 2.0 + 24.0 / std::log(rho))) + 12;
  n = std::min(n, 4096);
  const std::vector<double>& gl = legendre_points(n);
  std::fill(out, out + cnt, 0.0);
  std::vector<double> p(cnt);
  for (int g = 0; g < n; ++g) {
    const double t = far_len * gl[2 * g];
    const double wk = far_len * gl[2 * g + 1] * std::pow(x - t, alpha - 1.0);
    basis_->eval_all(max_mu_, t, p.data());
    for (int mu = 0; mu < cnt; ++mu) out[mu] += wk * p[mu];
  }

  const double e = eps / delta;
  const double top = std::pow(1.0 + e, alpha);
  std::vector<double> in(max_mu_ + 1);
  in[0] = (top - std::pow(e, alpha)) / alpha;
  for (int d = 1; d <= max_mu_; ++d) in[d] = (top - d * e * in[d - 1]) / (d + alpha);
  for (int mu = 0; mu < cnt; ++mu) {
    const std::vector<double> dv = basis_->derivs_at(mu, 1.0, mu);
    double near = 0.0, fact = 1.0, dpow = std::pow(delta, alpha);
    for (int d = 0; d <= mu; ++d) {
      // p_d = (-1)^d P^(d)(1)/d!, integrated term = p_d delta^(d+alpha) I_d
      near += ((d % 2 == 0) ? 1.0 : -1.0) * dv[d] / fact * dpow * in[d];
      fact *= (d + 1.0);
      dpow *= delta;
    }
    out[mu] += near;
  }
  for (int mu = 0; mu < cnt; ++mu) out[mu] *= inv_gamma_alpha_;
}

// ---------------------------------------------------------------------------
// rho parameter
// ---------------------------------------------------------------------------

double rho_param(const Eigen::MatrixXd& Xs) {
  if (Xs.rows() != Xs.cols() || Xs.rows() == 0)
    throw std::invalid_argument("rho_param: square matrix required");
  Eigen::EigenSolver<Eigen::MatrixXd> es(Xs);
  if (es.info() != Eigen::Success) throw SolverError("rho_param: eigensolver failed");
  const auto& ev = es.eigenvalues();
  const double scale = Xs.cwiseAbs().maxCoeff();
  for (int i = 0; i < ev.size(); ++i)
    if (std::abs(ev[i]) <= 1e-14 * std::max(scale, 1.0))
      throw ZeroEigenvalue("rho_param: spectrum contains a zero eigenvalue");

  double best_obj = std::numeric_limits<double>::infinity();
  double best_mod = 0.0;
  for (int i = 0; i < ev.size(); ++i) {
    const double mod = std::abs(ev[i]);
    double obj = 0.0;
    for (int j = 0; j < ev.size(); ++j) {
      const double num = std::norm(ev[j] - std::complex<double>(mod, 0.0));
      obj = std::max(obj, num / (2.0 * mod * std::abs(ev[j])));
    }
    const double tol = 1e-12 * (1.0 + std::abs(best_obj));
    if (obj < best_obj - tol || (std::abs(obj - best_obj) <= tol && mod < best_mod)) {
      best_obj = obj;
      best_mod = mod;
    }
  }
  return best_mod;
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

double FhbvmTables::cross_argument(int j, int l, double c) const {
  const double r = mesh.r;
  const double rv = std::pow(r, mesh.v);
  const double rl = std::pow(r, l);
  return ((j + c) * (rv - 1.0) - mesh.m * (rl - 1.0)) / (mesh.m * rl * (r - 1.0));
}

FhbvmTables build_tables(std::shared_ptr<const AlphaJacobiBasis> basis, int k, int s,
                         const MixedMesh& mesh) {
  if (k < s || s < 1) throw std::invalid_argument("build_tables: k >= s >= 1 required");
  if (basis->max_degree() < k)
    throw std::invalid_argument("build_tables: basis max degree must cover k");

  FhbvmTables t;
  t.alpha = basis->alpha();
  t.k = k;
  t.s = s;
  t.mesh = mesh;
  t.basis = basis;
  t.jfun = std::make_shared<JFunction>(basis, s - 1);
  t.rule = gauss_rule(*basis, k);

  t.Ps.resize(k, s);
  t.Is_alpha.resize(k, s);
  std::vector<double> p(s);
  for (int i = 0; i < k; ++i) {
    basis->eval_all(s - 1, t.rule.nodes[i], p.data());
    for (int mu = 0; mu < s; ++mu) t.Ps(i, mu) = p[mu];
    for (int mu = 0; mu < s; ++mu)
      t.Is_alpha(i, mu) = frac_int_P(*basis, t.rule, mu, t.rule.nodes[i]);
  }
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(t.rule.weights.data(), k);
  t.OmegaPs = w.asDiagonal() * t.Ps;
  t.Xs_alpha = t.Ps.transpose() * (w.asDiagonal() * t.Is_alpha);
  t.rho_s = rho_param(t.Xs_alpha);
  t.rho_Xinv = t.rho_s * t.Xs_alpha.inverse();
  t.norm_PsT_Omega = t.OmegaPs.cwiseAbs().colwise().sum().maxCoeff();
  t.norm_Is = t.Is_alpha.cwiseAbs().rowwise().sum().maxCoeff();

  std::vector<double> jrow(s);
  const auto fill = [&](double x, Eigen::MatrixXd& mat, int row) {
    t.jfun->eval_all(x, jrow.data());
    for (int mu = 0; mu < s; ++mu) mat(row, mu) = jrow[mu];
  };

  t.uniform_J.resize(std::max(mesh.M - mesh.m - 1, 0));
  for (int l = 1; l <= mesh.M - mesh.m - 1; ++l) {
    Eigen::MatrixXd& mat = t.uniform_J[l - 1];
    mat.resize(k, s);
    for (int i = 0; i < k; ++i) fill(l + t.rule.nodes[i], mat, i);
  }

  t.graded_J.resize(std::max(mesh.v - 1, 0));
  double rl = mesh.r;  // r^l
  for (int l = 1; l <= mesh.v - 1; ++l) {
    Eigen::MatrixXd& mat = t.graded_J[l - 1];
    mat.resize(k, s);
    const double base = (rl - 1.0) / (mesh.r - 1.0);
    for (int i = 0; i < k; ++i) fill(base + t.rule.nodes[i] * rl, mat, i);
    rl *= mesh.r;
  }

  if (mesh.M > mesh.m) {
    t.cross_J.resize((mesh.M - mesh.m) * mesh.v);
    for (int j = mesh.m; j <= mesh.M - 1; ++j) {
      for (int l = 0; l <= mesh.v - 1; ++l) {
        Eigen::MatrixXd& mat = t.cross_J[t.cross_index(j, l)];
        mat.resize(k, s);
        for (int i = 0; i < k; ++i) fill(t.cross_argument(j, l, t.rule.nodes[i]), mat, i);
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Table dump / load
// ---------------------------------------------------------------------------

namespace {

void put(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

void dump_matrix(std::ostream& os, const char* family, int index,
                 const Eigen::MatrixXd& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      os << family << ' ' << index << ' ' << i << ' ' << j << ' ';
      put(os, m(i, j));
      os << '\n';
    }
}

}  // namespace

void dump_tables(const FhbvmTables& t, std::ostream& os) {
  os << "tfrde-tables 1\n";
  os << "params ";
  put(os, t.alpha);
  os << ' ' << t.k << ' ' << t.s << ' ';
  put(os, t.mesh.T);
  os << ' ' << t.mesh.M << ' ' << t.mesh.m << ' ' << t.mesh.v << '\n';
  for (int i = 0; i < t.k; ++i) {
    os << "node " << i << ' ';
    put(os, t.rule.nodes[i]);
    os << ' ';
    put(os, t.rule.weights[i]);
    os << '\n';
  }
  dump_matrix(os, "Ps", 0, t.Ps);
  dump_matrix(os, "Is", 0, t.Is_alpha);
  dump_matrix(os, "Xs", 0, t.Xs_alpha);
  os << "rho ";
  put(os, t.rho_s);
  os << '\n';
  for (size_t l = 0; l < t.uniform_J.size(); ++l)
    dump_matrix(os, "uniformJ", static_cast<int>(l + 1), t.uniform_J[l]);
  for (size_t l = 0; l < t.graded_J.size(); ++l)
    dump_matrix(os, "gradedJ", static_cast<int>(l + 1), t.graded_J[l]);
  for (int j = t.mesh.m; j <= t.mesh.M - 1; ++j)
    for (int l = 0; l <= t.mesh.v - 1; ++l)
      dump_matrix(os, "crossJ", t.cross_index(j, l), t.cross_J[t.cross_index(j, l)]);
}

FhbvmTables load_tables(std::istream& is) {
  std::string tag;
  int version = 0;
  if (!(is >> tag >> version) || tag != "tfrde-tables" || version != 1)
    throw std::invalid_argument("load_tables: bad header");
  double alpha = 0.0, T = 0.0;
  int k = 0, s = 0, M = 0, m = 0, v = 0;
  if (!(is >> tag >> alpha >> k >> s >> T >> M >> m >> v) || tag != "params")
    throw std::invalid_argument("load_tables: bad params record");

  auto basis = std::make_shared<AlphaJacobiBasis>(alpha, std::max(k, s + 1));
  FhbvmTables t = build_tables(basis, k, s, MixedMesh::build(T, M, m, v));

  // Overwrite the recomputed values with the stored records (bit-exact reload).
  std::string family;
  while (is >> family) {
    if (family == "node") {
      int i;
      is >> i;
      is >> t.rule.nodes[i] >> t.rule.weights[i];
    } else if (family == "rho") {
      is >> t.rho_s;
    } else {
      int index, i, j;
      double value;
      is >> index >> i >> j >> value;
      if (family == "Ps")
        t.Ps(i, j) = value;
      else if (family == "Is")
        t.Is_alpha(i, j) = value;
      else if (family == "Xs")
        t.Xs_alpha(i, j) = value;
      else if (family == "uniformJ")
        t.uniform_J[index - 1](i, j) = value;
      else if (family == "gradedJ")
        t.graded_J[index - 1](i, j) = value;
      else if (family == "crossJ")
        t.cross_J[index](i, j) = value;
      else
        throw std::invalid_argument("load_tables: unknown family " + family);
    }
  }
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(t.rule.weights.data(), t.k);
  t.OmegaPs = w.asDiagonal() * t.Ps;
  t.rho_Xinv = t.rho_s * t.Xs_alpha.inverse();
  t.norm_PsT_Omega = t.OmegaPs.cwiseAbs().colwise().sum().maxCoeff();
  t.norm_Is = t.Is_alpha.cwiseAbs().rowwise().sum().maxCoeff();
  return t;
}

}  // namespace tfrde

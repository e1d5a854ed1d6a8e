#include "vizsos/certificates.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "vizsos/model.hpp"
#include "vizsos/reconstruct.hpp"

namespace vizsos {

namespace {

RadicalScalar rt(long k) { return RadicalScalar::sqrt_term(1, k); }
RadicalScalar rq(long num, long den = 1) {
  return RadicalScalar(make_rational(num, den));
}

NHPoly nh_poly(std::vector<RadicalScalar> ascending) {
  return NHPoly::from_coefficients(std::move(ascending));
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"d0",       "d1",       "d2",      "d3",     "d4",
          "ngm1-nh2", "ngm1-nh3", "appx-d1", "appx-d2"};
}

CertificateFamily catalog(const std::string& name) {
  CertificateFamily f;
  f.name = name;
  if (name == "d0") {
    f.kind = FamilyKind::DiagonalSigma;
    f.d = 0;
    f.alphas = {NHPoly()};
    return f;
  }
  if (name == "d1") {
    f.kind = FamilyKind::DiagonalSigma;
    f.d = 1;
    f.alphas = {nh_poly({rq(1), rq(-1)}),  // -(nH - 1)
                NHPoly(rq(1))};
    return f;
  }
  if (name == "d2") {
    f.kind = FamilyKind::DiagonalSigma;
    f.d = 2;
    // alpha0 = (nH-2)(nH + (1/2)(nH-1)sqrt(2))
    //        = nH^2 - 2nH + (1/2)(nH^2 - 3nH + 2)sqrt(2)
    NHPoly a0 = nh_poly({rt(2), rq(-2) + rq(-3, 2) * rt(2),
                         rq(1) + rq(1, 2) * rt(2)});
    // alpha1 = -((2nH-3) + (nH-2)sqrt(2))
    NHPoly a1 = nh_poly({rq(3) + rq(2) * rt(2), rq(-2) - rt(2)});
    NHPoly a2(rq(2) + rt(2));
    f.alphas = {a0, a1, a2};
    return f;
  }
  if (name == "d3") {
    f.kind = FamilyKind::DiagonalSigma;
    f.d = 3;
    RadicalScalar s2 = rt(2), s3 = rt(3);
    NHPoly a0 = nh_poly(
        {s3,
         rq(-11, 6) * s3 + rq(-3) * s2 + rq(-3, 2),
         rq(1) * s3 + rq(5, 2) * s2 + rq(2),
         rq(-1, 6) * s3 + rq(-1, 2) * s2 + rq(-1, 2)});
    NHPoly a1 = nh_poly(
        {rq(3) * s3 + rq(6) * s2 + rq(4),
         rq(-5, 2) * s3 + rq(-13, 2) * s2 + rq(-11, 2),
         rq(1, 2) * s3 + rq(3, 2) * s2 + rq(3, 2)});
    NHPoly a2 = nh_poly({rq(3) * s3 + rq(8) * s2 + rq(7),
                         -(s3 + rq(3) * s2 + rq(3))});
    NHPoly a3(s3 + rq(3) * s2 + rq(3));
    f.alphas = {a0, a1, a2, a3};
    return f;
  }
  if (name == "d4") {
    f.kind = FamilyKind::DiagonalSigma;
    f.d = 4;
    RadicalScalar s2 = rt(2), s3 = rt(3);
    NHPoly a0 = nh_poly(
        {rq(-2),
         rq(-4) * s3 + rq(-3) * s2 + rq(17, 6),
         rq(13, 3) * s3 + rq(19, 4) * s2 + rq(-7, 12),
         rq(-3, 2) * s3 + rq(-2) * s2 + rq(-1, 3),
         rq(1, 6) * s3 + rq(1, 4) * s2 + rq(1, 12)});
    NHPoly a1 = nh_poly(
        {rq(10) * s3 + rq(10) * s2 + rq(-3),
         rq(-83, 6) * s3 + rq(-99, 6) * s2 + rq(-1, 6),
         rq(11, 2) * s3 + rq(15, 2) * s2 + rq(3, 2),
         rq(-2, 3) * s3 + rq(-1) * s2 + rq(-1, 3)});
    NHPoly a2 = nh_poly(
        {rq(20) * s3 + rq(25) * s2 + rq(2),
         rq(-13) * s3 + rq(-18) * s2 + rq(-4),
         rq(2) * s3 + rq(3) * s2 + rq(1)});
    NHPoly a3 = nh_poly({rq(15) * s3 + rq(21) * s2 + rq(5),
                         rq(-4) * s3 + rq(-6) * s2 + rq(-2)});
    NHPoly a4(rq(4) * s3 + rq(6) * s2 + rq(2));
    f.alphas = {a0, a1, a2, a3, a4};
    return f;
  }
  if (name == "ngm1-nh2") {
    f.kind = FamilyKind::SigmaPlusS0;
    f.nH = 2;
    f.alpha_in_nG = nh_poly({rq(-1), rq(1)});  // nG - 1
    f.beta = rq(-1);
    f.gamma = rq(1);
    f.kappa = rq(0);
    f.lambda = rq(1);
    return f;
  }
  if (name == "ngm1-nh3") {
    f.kind = FamilyKind::SigmaPlusS0;
    f.nH = 3;
    f.alpha_in_nG = nh_poly({-rt(2), rt(2)});  // sqrt(2)(nG - 1)
    f.beta = rq(-2, 3) * rt(2);
    f.gamma = rq(1, 3) * rt(2);
    f.kappa = rq(1, 3);
    f.lambda = rq(-2, 3);
    return f;
  }
  if (name == "appx-d1") {
    f.kind = FamilyKind::AppendixD1;
    f.d = 1;
    return f;
  }
  if (name == "appx-d2") {
    f.kind = FamilyKind::AppendixD2;
    f.d = 2;
    return f;
  }
  throw ValidationError("unknown catalog family: " + name);
}

PhiSystem build_phi_system(int d) {
  if (d < 0 || d > 6)
    throw GuardError("build_phi_system guard: 0 <= d <= 6, got " +
                     std::to_string(d));
  PhiSystem sys;
  sys.d = d;
  sys.phi.assign(d + 1, {});
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= i; ++j) {
      ReducedSigmaForm form =
          reduce_canonical(SigmaPoly::sigma_product(i, j), d);
      NHPoly mult(i == j ? 1L : 2L);
      for (int k = 0; k <= d; ++k) {
        NHPoly c = form.phi[k] * mult;
        if (c.is_zero()) continue;
        auto key = std::make_pair(i, j);
        auto [it, inserted] = sys.phi[k].emplace(key, c);
        if (!inserted) it->second += c;
      }
    }
  }
  // f_viz reduces to -(n_H - d) sigma_0 + sigma_1 (with sigma_1 collapsing
  // into the constant for d = 0).
  SigmaPoly fviz;
  fviz.add_sigma(0, NHPoly(RadicalScalar(Rational(d))) - NHPoly::symbol());
  fviz.add_sigma(1, NHPoly(1L));
  ReducedSigmaForm r = reduce_canonical(fviz, d);
  sys.rhs = r.phi;
  return sys;
}

std::string SignPattern::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < signs.size(); ++i) {
    out << (signs[i] >= 0 ? "+" : "-") << "sqrt(" << (i + 1) << ")";
    if (i + 1 < signs.size()) out << " ";
  }
  if (signs.empty()) out << "(empty)";
  return out.str();
}

std::vector<SignPattern> SignPattern::all(int d) {
  std::vector<SignPattern> out;
  const size_t count = 1ull << d;
  for (size_t bits = 0; bits < count; ++bits) {
    SignPattern p;
    p.signs.resize(d);
    for (int i = 0; i < d; ++i) p.signs[i] = (bits >> i) & 1 ? -1 : 1;
    out.push_back(std::move(p));
  }
  return out;
}

RadicalScalar alpha_d_hypothesis(int d) {
  RadicalScalar sum;
  for (int i = 0; i < d; ++i) {
    long inner = 0;
    for (int j = 0; j <= d - i - 1; ++j) inner += 1 + i * j;
    sum += RadicalScalar::sqrt_term(Rational(inner), i + 1);
  }
  return sum;
}

namespace {

RadicalScalar alpha_d_seed(int d, const SignPattern& pattern) {
  RadicalScalar sum;
  for (int i = 0; i < d; ++i) {
    long inner = 0;
    for (int j = 0; j <= d - i - 1; ++j) inner += 1 + i * j;
    long sign = (i < static_cast<int>(pattern.signs.size()) &&
                 pattern.signs[i] < 0)
                    ? -1
                    : 1;
    sum += RadicalScalar::sqrt_term(Rational(sign * inner), i + 1);
  }
  return sum;
}

// The phi system with n_H substituted; all coefficients rational.
struct FixedSystem {
  int d;
  long nH;
  std::vector<std::vector<std::tuple<int, int, Rational>>> eqs;
  std::vector<Rational> rhs;
};

FixedSystem fix_system(const PhiSystem& sys, long nH) {
  FixedSystem fs;
  fs.d = sys.d;
  fs.nH = nH;
  fs.eqs.resize(sys.d + 1);
  fs.rhs.resize(sys.d + 1);
  Rational at(nH);
  for (int k = 0; k <= sys.d; ++k) {
    for (const auto& [ij, c] : sys.phi[k]) {
      Rational v = c.evaluate(at).as_rational();
      if (v != 0) fs.eqs[k].emplace_back(ij.first, ij.second, v);
    }
    fs.rhs[k] = sys.rhs[k].evaluate(at).as_rational();
  }
  return fs;
}

std::vector<double> evaluate_F(const FixedSystem& fs,
                               const std::vector<double>& a) {
  std::vector<double> F(fs.d + 1, 0.0);
  for (int k = 0; k <= fs.d; ++k) {
    double s = 0;
    for (const auto& [i, j, c] : fs.eqs[k]) s += c.get_d() * a[i] * a[j];
    F[k] = s - fs.rhs[k].get_d();
  }
  return F;
}

// J[k][m] = d phi_k / d a_m.
std::vector<std::vector<double>> evaluate_J(const FixedSystem& fs,
                                            const std::vector<double>& a) {
  std::vector<std::vector<double>> J(fs.d + 1,
                                     std::vector<double>(fs.d + 1, 0.0));
  for (int k = 0; k <= fs.d; ++k)
    for (const auto& [i, j, c] : fs.eqs[k]) {
      if (i == j) {
        J[k][i] += 2 * c.get_d() * a[i];
      } else {
        J[k][i] += c.get_d() * a[j];
        J[k][j] += c.get_d() * a[i];
      }
    }
  return J;
}

bool solve_linear(std::vector<std::vector<double>> A, std::vector<double> b,
                  std::vector<double>& x) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    if (std::abs(A[piv][col]) < 1e-13) return false;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      double f = A[r][col] / A[col][col];
      for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
    x[r] = s / A[r][r];
  }
  return true;
}

bool newton_double(const FixedSystem& fs, std::vector<double>& a) {
  for (int iter = 0; iter < 200; ++iter) {
    auto F = evaluate_F(fs, a);
    double norm = 0;
    for (double v : F) norm = std::max(norm, std::abs(v));
    if (norm < 1e-9) return true;
    auto J = evaluate_J(fs, a);
    std::vector<double> delta;
    for (double& v : F) v = -v;
    if (!solve_linear(J, F, delta)) return false;
    double step = 0;
    for (int i = 0; i <= fs.d; ++i) {
      a[i] += delta[i];
      step = std::max(step, std::abs(delta[i]));
    }
    if (!std::isfinite(step) || step > 1e12) return false;
  }
  return false;
}

std::vector<Rational> evaluate_F_exact(const FixedSystem& fs,
                                       const std::vector<Rational>& a) {
  std::vector<Rational> F(fs.d + 1, Rational(0));
  for (int k = 0; k <= fs.d; ++k) {
    Rational s = 0;
    for (const auto& [i, j, c] : fs.eqs[k]) s += c * a[i] * a[j];
    F[k] = s - fs.rhs[k];
  }
  return F;
}

bool solve_linear_exact(std::vector<std::vector<Rational>> A,
                        std::vector<Rational> b, std::vector<Rational>& x) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    double best = 0;
    for (int r = col; r < n; ++r) {
      double mag = std::abs(A[r][col].get_d());
      if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (piv < 0) return false;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      if (A[r][col] == 0) continue;
      Rational f = A[r][col] / A[col][col];
      for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, Rational(0));
  for (int r = n - 1; r >= 0; --r) {
    Rational s = b[r];
    for (int c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
    x[r] = s / A[r][r];
  }
  return true;
}

Rational round_to_bits(const Rational& v, int bits) {
  Integer scaled;
  Rational shifted = v * Rational(Integer(1) << bits) + Rational(1, 2);
  mpz_fdiv_q(scaled.get_mpz_t(), shifted.get_num_mpz_t(),
             shifted.get_den_mpz_t());
  Rational out(scaled);
  out /= Rational(Integer(1) << bits);
  return out;
}

std::vector<std::vector<Rational>> jacobian_exact(
    const FixedSystem& fs, const std::vector<Rational>& a) {
  std::vector<std::vector<Rational>> J(
      fs.d + 1, std::vector<Rational>(fs.d + 1, Rational(0)));
  for (int k = 0; k <= fs.d; ++k)
    for (const auto& [i, j, c] : fs.eqs[k]) {
      if (i == j) {
        J[k][i] += 2 * c * a[i];
      } else {
        J[k][i] += c * a[j];
        J[k][j] += c * a[i];
      }
    }
  return J;
}

Rational residual_norm(const std::vector<Rational>& F) {
  Rational worst = 0;
  for (const auto& v : F) {
    Rational av = v < 0 ? Rational(-v) : v;
    if (av > worst) worst = av;
  }
  return worst;
}

// Zero-residual Gauss-Newton on an overdetermined exact system: solves
// (A^T A) delta = -A^T F. Quadratic near a full-column-rank root.
bool gauss_newton_step(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& F,
                       std::vector<Rational>& delta) {
  const size_t rows = A.size();
  const size_t cols = A.empty() ? 0 : A[0].size();
  std::vector<std::vector<Rational>> N(cols,
                                       std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> rhs(cols, Rational(0));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t i = 0; i < cols; ++i) {
      if (A[r][i] == 0) continue;
      for (size_t j = i; j < cols; ++j) N[i][j] += A[r][i] * A[r][j];
      rhs[i] -= A[r][i] * F[r];
    }
  }
  for (size_t i = 0; i < cols; ++i)
    for (size_t j = 0; j < i; ++j) N[i][j] = N[j][i];
  return solve_linear_exact(std::move(N), std::move(rhs), delta);
}

// Exact refinement of a double seed to ~2^-220 accuracy. The roots of the
// phi system are typically tangential double roots (the Jacobian is singular
// there), so plain Newton only gains one bit per step; one round of
// kernel-vector deflation makes the augmented root regular and Gauss-Newton
// quadratic again.
bool refine_exact(const FixedSystem& fs, std::vector<Rational>& a) {
  const int bits = 420;
  const int n = fs.d + 1;
  Rational target = Rational(1, 1) / Rational(Integer(1) << 220);

  // Plain Newton first; it suffices when the root is regular.
  for (int step = 0; step < 4; ++step) {
    auto F = evaluate_F_exact(fs, a);
    if (residual_norm(F) <= target) return true;
    auto J = jacobian_exact(fs, a);
    for (auto& v : F) v = -v;
    std::vector<Rational> delta;
    if (!solve_linear_exact(J, F, delta)) break;
    Rational step_norm = residual_norm(delta);
    if (step_norm > Rational(1, 4)) break;  // diverging; leave to deflation
    for (int i = 0; i < n; ++i) a[i] = round_to_bits(a[i] + delta[i], bits);
  }
  if (residual_norm(evaluate_F_exact(fs, a)) <= target) return true;

  // Deflation: unknowns (x, v), equations F(x), J(x) v, v_anchor - 1 where
  // the anchor picks the dominant kernel component. The Hessians of the
  // quadratics are constant, which keeps the augmented Jacobian cheap.
  auto Jd = jacobian_exact(fs, a);
  Eigen::MatrixXd M(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) M(r, c) = Jd[r][c].get_d();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  Eigen::VectorXd v0 = svd.matrixV().col(n - 1);
  int anchor = 0;
  for (int i = 0; i < n; ++i)
    if (std::abs(v0[i]) > std::abs(v0[anchor])) anchor = i;
  v0 /= v0[anchor];

  std::vector<Rational> v(n);
  for (int i = 0; i < n; ++i) {
    Rational q;
    mpq_set_d(q.get_mpq_t(), v0[i]);
    v[i] = q;
  }

  for (int step = 0; step < 12; ++step) {
    auto F = evaluate_F_exact(fs, a);
    if (residual_norm(F) <= target) return true;
    auto J = jacobian_exact(fs, a);
    // Augmented residual [F; Jv; b^T v - 1].
    std::vector<Rational> R;
    R.reserve(2 * n + 1);
    for (int k = 0; k < n; ++k) R.push_back(F[k]);
    for (int k = 0; k < n; ++k) {
      Rational s = 0;
      for (int i = 0; i < n; ++i) s += J[k][i] * v[i];
      R.push_back(s);
    }
    R.push_back(v[anchor] - 1);

    // Augmented Jacobian [[J, 0]; [H(v), J]; [0, e_anchor^T]].
    std::vector<std::vector<Rational>> A(
        2 * n + 1, std::vector<Rational>(2 * n, Rational(0)));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) A[k][i] = J[k][i];
    for (int k = 0; k < n; ++k) {
      // d(Jv)_k/dx_m = sum_l Hess_k[m][l] v_l with constant Hessians.
      for (const auto& [i, j, c] : fs.eqs[k]) {
        if (i == j) {
          A[n + k][i] += 2 * c * v[i];
        } else {
          A[n + k][i] += c * v[j];
          A[n + k][j] += c * v[i];
        }
      }
      for (int i = 0; i < n; ++i) A[n + k][n + i] = J[k][i];
    }
    A[2 * n][n + anchor] = 1;

    std::vector<Rational> delta;
    if (!gauss_newton_step(A, R, delta)) return false;
    for (int i = 0; i < n; ++i) {
      a[i] = round_to_bits(a[i] + delta[i], bits);
      v[i] = round_to_bits(v[i] + delta[n + i], bits);
    }
  }
  return residual_norm(evaluate_F_exact(fs, a)) <= target;
}

bool exact_check(const FixedSystem& fs,
                 const std::vector<RadicalScalar>& alpha) {
  for (int k = 0; k <= fs.d; ++k) {
    RadicalScalar s;
    for (const auto& [i, j, c] : fs.eqs[k]) s += RadicalScalar(c) * alpha[i] * alpha[j];
    s -= RadicalScalar(fs.rhs[k]);
    if (!s.is_zero()) return false;
  }
  return true;
}

std::optional<std::vector<RadicalScalar>> reconstruct_vector(
    const std::vector<Rational>& a, const std::vector<long>& basis,
    long max_den) {
  std::vector<RadicalScalar> alpha;
  for (const auto& v : a) {
    auto r = reconstruct_radical_exact(v, basis, max_den, 256);
    if (!r) return std::nullopt;
    alpha.push_back(*r);
  }
  return alpha;
}

std::vector<double> structured_seed(int d, long nH,
                                    const SignPattern& pattern) {
  // alpha_{d-r} tracks (-1)^r nH^r / r! times alpha_d to leading order.
  std::vector<double> a(d + 1, 0.0);
  double lead = alpha_d_seed(d, pattern).to_double();
  if (d == 0) return a;
  double factor = 1.0;
  for (int r = 0; r <= d; ++r) {
    if (r > 0) factor *= -static_cast<double>(nH) / r;
    a[d - r] = factor * lead;
  }
  return a;
}

// Attempt one seed: Newton, exact refinement, reconstruction (with basis
// fallback), exact re-substitution check.
struct AttemptResult {
  bool converged = false;
  bool reconstructed = false;
  bool verified = false;
  std::vector<RadicalScalar> alpha;
};

// Exact refinement and reconstruction from an already Newton-converged
// double point.
AttemptResult attempt_from_converged(const FixedSystem& fs,
                                     const std::vector<double>& point,
                                     const SolveOptions& options) {
  const bool debug = std::getenv("VIZSOS_DEBUG_SOLVE") != nullptr;
  AttemptResult res;
  res.converged = true;
  std::vector<Rational> a;
  a.reserve(point.size());
  for (double v : point) {
    Rational q;
    mpq_set_d(q.get_mpq_t(), v);
    a.push_back(q);
  }
  if (!refine_exact(fs, a)) {
    if (debug) std::cerr << "[solve] refine_exact failed\n";
    return res;
  }
  if (debug) {
    std::cerr << "[solve] refined residual="
              << residual_norm(evaluate_F_exact(fs, a)).get_d() << " a=(";
    for (const auto& q : a) std::cerr << q.get_d() << ",";
    std::cerr << ")\n";
  }
  auto alpha = reconstruct_vector(a, options.basis, options.max_den);
  if (!alpha) alpha = reconstruct_vector(a, options.fallback_basis,
                                         options.max_den);
  if (!alpha) {
    if (debug) std::cerr << "[solve] reconstruction failed\n";
    return res;
  }
  res.reconstructed = true;
  if (!exact_check(fs, *alpha)) {
    if (debug) {
      std::cerr << "[solve] exact check failed for (";
      for (const auto& v : *alpha) std::cerr << v.to_string() << ", ";
      std::cerr << ")\n";
    }
    return res;
  }
  res.verified = true;
  res.alpha = std::move(*alpha);
  return res;
}

AttemptResult attempt(const FixedSystem& fs, std::vector<double> seed,
                      const SolveOptions& options) {
  if (!newton_double(fs, seed)) {
    if (std::getenv("VIZSOS_DEBUG_SOLVE") != nullptr)
      std::cerr << "[solve] newton_double failed\n";
    return AttemptResult{};
  }
  return attempt_from_converged(fs, seed, options);
}

std::vector<long> radicand_primes(const std::vector<RadicalScalar>& alpha) {
  std::set<long> primes;
  for (const auto& v : alpha)
    for (const auto& [m, q] : v.terms()) {
      long rest = m;
      for (long p = 2; p * p <= rest; ++p)
        while (rest % p == 0) {
          primes.insert(p);
          rest /= p;
        }
      if (rest > 1) primes.insert(rest);
    }
  return {primes.begin(), primes.end()};
}

}  // namespace

SolveOutcome solve_fixed_nH(const PhiSystem& sys, long nH,
                            const SignPattern& pattern,
                            const SolveOptions& options) {
  if (nH < sys.d + 1)
    throw ValidationError("solve_fixed_nH requires nH >= d+1 so kH >= 1");
  FixedSystem fs = fix_system(sys, nH);

  SolveOutcome out;
  bool any_converged = false;
  bool any_reconstructed = false;

  std::mt19937 rng(options.rng_seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  auto base = structured_seed(sys.d, nH, pattern);
  for (int trial = 0; trial < 1 + options.random_restarts / 8; ++trial) {
    std::vector<double> seed = base;
    if (trial > 0)
      for (auto& v : seed) v += noise(rng) * (0.2 * std::abs(v) + 0.5);
    AttemptResult res = attempt(fs, seed, options);
    any_converged |= res.converged;
    any_reconstructed |= res.reconstructed;
    if (res.verified) {
      out.status = SolveOutcome::Status::Found;
      out.alpha = std::move(res.alpha);
      out.detail = "pattern " + pattern.to_string();
      return out;
    }
  }
  if (any_converged && !any_reconstructed) {
    out.status = SolveOutcome::Status::ReconstructionFailure;
    out.detail = "Newton converged but no radical reconstruction passed the "
                 "exact re-substitution check";
  } else {
    out.status = SolveOutcome::Status::ReconstructionFailure;
    out.detail = any_converged
                     ? "reconstructed values failed the exact check"
                     : "Newton did not converge from this pattern seed";
  }
  return out;
}

std::vector<std::vector<RadicalScalar>> solve_all_fixed_nH(
    const PhiSystem& sys, long nH, const SolveOptions& options) {
  if (nH < sys.d + 1)
    throw ValidationError("solve_all_fixed_nH requires nH >= d+1");
  FixedSystem fs = fix_system(sys, nH);

  std::vector<std::vector<RadicalScalar>> found;
  auto push_unique = [&](const std::vector<RadicalScalar>& alpha) {
    for (const auto& known : found)
      if (known == alpha) return;
    found.push_back(alpha);
  };

  auto close_orbit = [&](const std::vector<RadicalScalar>& alpha) {
    // Global negation and every radical conjugation map solutions of the
    // rational system to solutions; verify anyway and keep the new ones.
    std::vector<std::vector<RadicalScalar>> orbit{alpha};
    for (long p : radicand_primes(alpha)) {
      size_t count = orbit.size();
      for (size_t i = 0; i < count; ++i) {
        std::vector<RadicalScalar> conj;
        for (const auto& v : orbit[i]) conj.push_back(v.conjugate(p));
        orbit.push_back(std::move(conj));
      }
    }
    {
      size_t count = orbit.size();
      for (size_t i = 0; i < count; ++i) {
        std::vector<RadicalScalar> neg;
        for (const auto& v : orbit[i]) neg.push_back(-v);
        orbit.push_back(std::move(neg));
      }
    }
    for (const auto& candidate : orbit)
      if (exact_check(fs, candidate)) push_unique(candidate);
  };

  std::mt19937 rng(options.rng_seed);
  std::normal_distribution<double> noise(0.0, 1.0);

  // Skip the expensive exact refinement when Newton lands on a root that is
  // already in the solution set.
  auto try_seed = [&](std::vector<double> seed) {
    if (!newton_double(fs, seed)) return false;
    for (const auto& known : found) {
      double dist = 0;
      for (size_t i = 0; i < known.size(); ++i)
        dist = std::max(dist, std::abs(known[i].to_double() - seed[i]));
      if (dist < 1e-5) return false;
    }
    AttemptResult res = attempt_from_converged(fs, seed, options);
    if (res.verified) {
      close_orbit(res.alpha);
      return true;
    }
    return false;
  };

  for (const auto& pattern : SignPattern::all(sys.d))
    try_seed(structured_seed(sys.d, nH, pattern));

  // Random restarts sweep up branches the structured seeds missed; stop
  // after a long quiet stretch.
  double magnitude = 1.0;
  for (double v : structured_seed(sys.d, nH, SignPattern::all(sys.d)[0]))
    magnitude = std::max(magnitude, std::abs(v));
  int quiet = 0;
  for (int trial = 0; trial < options.random_restarts && quiet < 80; ++trial) {
    std::vector<double> seed(sys.d + 1);
    for (auto& v : seed) v = noise(rng) * magnitude;
    size_t before = found.size();
    try_seed(seed);
    quiet = found.size() > before ? 0 : quiet + 1;
  }

  std::sort(found.begin(), found.end(),
            [](const std::vector<RadicalScalar>& a,
               const std::vector<RadicalScalar>& b) {
              for (size_t i = 0; i < a.size(); ++i) {
                double da = a[i].to_double(), db = b[i].to_double();
                if (da != db) return da < db;
              }
              return false;
            });
  return found;
}

namespace {

// The printed-family branch: every irrational coefficient of alpha_d
// non-negative, then the smallest positive rational part.
std::optional<std::vector<RadicalScalar>> select_branch(
    const std::vector<std::vector<RadicalScalar>>& solutions, int d) {
  std::vector<const std::vector<RadicalScalar>*> plus;
  for (const auto& s : solutions) {
    bool ok = true;
    for (const auto& [m, q] : s[d].terms())
      if (m > 1 && q < 0) ok = false;
    if (ok) plus.push_back(&s);
  }
  if (plus.empty()) return std::nullopt;
  const std::vector<RadicalScalar>* best = nullptr;
  for (const auto* s : plus) {
    Rational rp = (*s)[d].rational_part();
    if (rp <= 0) continue;
    if (!best || rp < (*best)[d].rational_part()) best = s;
  }
  if (!best) best = plus.front();
  return *best;
}

}  // namespace

CertificateFamily interpolate_family(int d, const InterpolateOptions& options) {
  if (d < 0 || d > 4)
    throw ValidationError("interpolate_family validated for d <= 4");
  PhiSystem sys = build_phi_system(d);
  long start = options.node_start > 0 ? options.node_start : d + 1;

  std::vector<Rational> nodes;
  std::vector<std::vector<RadicalScalar>> chosen;
  for (int t = 0; t <= d; ++t) {
    long m = start + t;
    auto solutions = solve_all_fixed_nH(sys, m, options.solve);
    auto branch = select_branch(solutions, d);
    if (!branch)
      throw VerificationError(
          "interpolate_family: no branch candidate at nH=" +
          std::to_string(m));
    nodes.emplace_back(m);
    chosen.push_back(std::move(*branch));
  }

  CertificateFamily family;
  family.kind = FamilyKind::DiagonalSigma;
  family.name = "generated-d" + std::to_string(d);
  family.d = d;
  for (int i = 0; i <= d; ++i) {
    std::vector<RadicalScalar> values;
    for (const auto& sol : chosen) values.push_back(sol[i]);
    NHPoly poly = interpolate(nodes, values);
    if (poly.degree() > d)
      throw VerificationError(
          "interpolate_family: coefficient degree exceeds d");
    family.alphas.push_back(std::move(poly));
  }

  if (!verify_family(family)) {
    // Branch inconsistency: name the first node whose alpha_d deviates from
    // the branch of the first node under sign structure.
    for (size_t t = 1; t < chosen.size(); ++t) {
      for (const auto& [m, q] : chosen[t][d].terms()) {
        Rational q0 = chosen[0][d].coefficient(m);
        if ((q < 0) != (q0 < 0))
          throw VerificationError(
              "interpolate_family: branch inconsistency at nH=" +
              std::to_string(start + static_cast<long>(t)));
      }
    }
    throw VerificationError(
        "interpolate_family: interpolated family failed symbolic "
        "verification");
  }
  return family;
}

HypothesisReport check_alpha_d_hypothesis(int d,
                                          const CertificateFamily& family) {
  if (family.kind != FamilyKind::DiagonalSigma ||
      static_cast<int>(family.alphas.size()) != d + 1)
    throw ValidationError("hypothesis check needs a diagonal-sigma family");
  HypothesisReport report;
  report.hypothesis = alpha_d_hypothesis(d);
  const NHPoly& ad = family.alphas[d];
  if (ad.degree() > 0)
    throw ValidationError("alpha_d should be constant in n_H");
  report.regenerated = ad.coefficient(0);
  std::set<long> radicands;
  for (const auto& [m, q] : report.hypothesis.terms()) radicands.insert(m);
  for (const auto& [m, q] : report.regenerated.terms()) radicands.insert(m);
  report.all_match = true;
  for (long m : radicands) {
    bool match =
        report.hypothesis.coefficient(m) == report.regenerated.coefficient(m);
    report.term_match[m] = match;
    report.all_match &= match;
  }
  return report;
}

RadicalScalar appendix_lambda(int nG, int g, int i) {
  if (g < 1 || g > nG || i < 1 || i > nG - 1)
    throw ValidationError("appendix_lambda indices out of range");
  if (i < nG - g) return RadicalScalar();
  if (i == nG - g)
    return RadicalScalar::sqrt_of_rational(
        Rational(nG * (nG - g)) / Rational(nG - g + 1));
  // i > nG - g: -lambda_{nG-i, i} / i, and nG - (nG-i) = i.
  RadicalScalar base = RadicalScalar::sqrt_of_rational(
      Rational(static_cast<long>(nG) * i) / Rational(i + 1));
  return base * RadicalScalar(Rational(-1, i));
}

namespace {

Polynomial sum_sigma_over_g(const VarRegistry& reg, OrderPtr order, int i) {
  Polynomial sum = Polynomial::zero(order);
  for (int g = 0; g < reg.params().nG; ++g)
    sum = sum + expand_sigma_instance(g, i, reg, order);
  return sum;
}

}  // namespace

Certificate instantiate(const CertificateFamily& family,
                        const ClassParams& params) {
  params.validate();
  VarRegistry reg(params);
  OrderPtr order = reg.default_order();
  Certificate cert;
  cert.params = params;
  cert.provenance = "catalog:" + family.name;

  switch (family.kind) {
    case FamilyKind::DiagonalSigma: {
      if (params.kG != params.nG || params.kH != params.nH - family.d)
        throw ValidationError(
            "diagonal-sigma family requires kG = nG and kH = nH - d");
      cert.degree = family.d;
      Rational at(params.nH);
      for (int g = 0; g < params.nG; ++g) {
        Polynomial s = Polynomial::zero(order);
        for (int i = 0; i <= family.d; ++i) {
          RadicalScalar c = family.alphas[i].evaluate(at);
          if (c.is_zero()) continue;
          s = s + expand_sigma_instance(g, i, reg, order).scaled(c);
        }
        cert.polys.push_back(std::move(s));
      }
      return cert;
    }
    case FamilyKind::SigmaPlusS0: {
      if (params.kG != params.nG - 1 || params.nH != family.nH ||
          params.kH != params.nH - 1)
        throw ValidationError(
            "family requires kG = nG - 1 and the family's fixed nH with "
            "kH = nH - 1");
      cert.degree = 2;
      RadicalScalar alpha = family.alpha_in_nG.evaluate(Rational(params.nG));
      Polynomial s0 = Polynomial::constant(order, alpha);
      s0 = s0 + sum_sigma_over_g(reg, order, 1).scaled(family.beta);
      s0 = s0 + sum_sigma_over_g(reg, order, 2).scaled(family.gamma);
      cert.polys.push_back(std::move(s0));
      for (int g = 0; g < params.nG; ++g) {
        Polynomial s =
            expand_sigma_instance(g, 1, reg, order).scaled(family.kappa) +
            expand_sigma_instance(g, 2, reg, order).scaled(family.lambda);
        cert.polys.push_back(std::move(s));
      }
      return cert;
    }
    case FamilyKind::AppendixD1: {
      if (params.kG != params.nG || params.kH != params.nH - 1)
        throw ValidationError("appx-d1 requires kG = nG and kH = nH - 1");
      cert.degree = 1;
      RadicalScalar inv_sqrt_nG =
          RadicalScalar::sqrt_of_rational(Rational(1, params.nG));
      for (int i = 1; i <= params.nG - 1; ++i) {
        Polynomial s = Polynomial::zero(order);
        for (int g = 1; g <= params.nG; ++g) {
          RadicalScalar lam = appendix_lambda(params.nG, g, i);
          if (lam.is_zero()) continue;
          s = s + expand_sigma_instance(g - 1, 1, reg, order).scaled(lam);
        }
        cert.polys.push_back(s.scaled(inv_sqrt_nG));
      }
      cert.polys.push_back(build_f_viz(reg, order).scaled(inv_sqrt_nG));
      return cert;
    }
    case FamilyKind::AppendixD2: {
      if (params.kG != params.nG || params.kH != params.nH - 2)
        throw ValidationError("appx-d2 requires kG = nG and kH = nH - 2");
      cert.degree = 2;
      CertificateFamily d2 = catalog("d2");
      Rational at(params.nH);
      RadicalScalar alpha = d2.alphas[0].evaluate(at);
      RadicalScalar beta = d2.alphas[1].evaluate(at);
      RadicalScalar gamma = d2.alphas[2].evaluate(at);
      RadicalScalar inv_sqrt_nG =
          RadicalScalar::sqrt_of_rational(Rational(1, params.nG));
      for (int i = 1; i <= params.nG - 1; ++i) {
        Polynomial s = Polynomial::zero(order);
        for (int g = 1; g <= params.nG; ++g) {
          RadicalScalar lam = appendix_lambda(params.nG, g, i);
          if (lam.is_zero()) continue;
          s = s + expand_sigma_instance(g - 1, 1, reg, order)
                      .scaled(lam * beta) +
              expand_sigma_instance(g - 1, 2, reg, order).scaled(lam * gamma);
        }
        cert.polys.push_back(s.scaled(inv_sqrt_nG));
      }
      Polynomial last = Polynomial::constant(
          order, alpha * RadicalScalar(Rational(params.nG)));
      last = last + sum_sigma_over_g(reg, order, 1).scaled(beta);
      last = last + sum_sigma_over_g(reg, order, 2).scaled(gamma);
      cert.polys.push_back(last.scaled(inv_sqrt_nG));
      return cert;
    }
  }
  throw StructuralError("unreachable family kind");
}

VerifyResult verify_exact(const Certificate& cert,
                          const VerifyOptions& options) {
  VarRegistry reg(cert.params);
  OrderPtr order = reg.default_order();
  GeneratorSet gens = build_I_viz(reg, order);
  BuchbergerOptions bo;
  bo.max_pairs = options.max_pairs;
  bo.source_hash = cert.params.to_string();
  GroebnerBasis gb = buchberger(gens, order, bo);

  Polynomial sum = Polynomial::zero(order);
  for (const auto& s : cert.polys) sum = sum + s * s;
  sum = sum - build_f_viz(reg, order);

  VerifyResult res;
  res.groebner_size = gb.size();
  res.residual = normal_form(sum, gb);
  res.ok = res.residual->is_zero();
  return res;
}

bool verify_family(const CertificateFamily& family) {
  if (family.kind != FamilyKind::DiagonalSigma)
    throw ValidationError("verify_family applies to diagonal-sigma families");
  PhiSystem sys = build_phi_system(family.d);
  for (int k = 0; k <= family.d; ++k) {
    NHPoly lhs;
    for (const auto& [ij, c] : sys.phi[k])
      lhs += c * family.alphas[ij.first] * family.alphas[ij.second];
    if (!(lhs == sys.rhs[k])) return false;
  }
  return true;
}

}  // namespace vizsos

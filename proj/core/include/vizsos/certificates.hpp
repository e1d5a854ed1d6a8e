#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vizsos/groebner.hpp"
#include "vizsos/nhpoly.hpp"
#include "vizsos/polynomial.hpp"
#include "vizsos/registry.hpp"
#include "vizsos/sigma.hpp"

namespace vizsos {

// A concrete certificate: f_viz == sum s_i^2 modulo the class ideal, with
// deg(s_i) <= degree.
struct Certificate {
  ClassParams params;
  int degree = 0;
  std::vector<Polynomial> polys;
  std::string provenance;  // "catalog:d2" | "generated" | ...
  std::string sign_pattern;
};

enum class FamilyKind {
  DiagonalSigma,  // s_g = sum_i alpha_i sigma_{g,i}; kG = nG, kH = nH - d
  SigmaPlusS0,    // s_0 over all g plus per-g rows; kG = nG-1, nH in {2,3}
  AppendixD1,     // lambda-generated rows; kG = nG, kH = nH-1
  AppendixD2,     // lambda/mu-generated rows; kG = nG, kH = nH-2
};

struct CertificateFamily {
  FamilyKind kind = FamilyKind::DiagonalSigma;
  std::string name;
  int d = 0;
  // DiagonalSigma: alpha_0..alpha_d as polynomials in n_H.
  std::vector<NHPoly> alphas;
  // SigmaPlusS0: fixed n_H, s0 coefficients (alpha polynomial in n_G), and
  // the per-g row coefficients s_g = kappa*sigma_1 + lambda*sigma_2.
  int nH = 0;
  NHPoly alpha_in_nG;
  RadicalScalar beta, gamma, kappa, lambda;
};

// The d+1 equations phi_i(alpha) = rhs_i from canonically reducing
// (sum alpha_i sigma_i)^2 and matching f_viz. phi[k] maps (i,j) with i >= j
// to the full coefficient of alpha_i*alpha_j (the factor 2 for i != j is
// folded in).
struct PhiSystem {
  int d = 0;
  std::vector<std::map<std::pair<int, int>, NHPoly>> phi;
  std::vector<NHPoly> rhs;
};

std::vector<std::string> catalog_names();
// name in {d0, d1, d2, d3, d4, ngm1-nh2, ngm1-nh3, appx-d1, appx-d2}.
CertificateFamily catalog(const std::string& name);

// Resource guard: 0 <= d <= 6.
PhiSystem build_phi_system(int d);

// Sign choices for sqrt(1)..sqrt(d); signs[i] is the sign of sqrt(i+1).
struct SignPattern {
  std::vector<int> signs;
  std::string to_string() const;
  static std::vector<SignPattern> all(int d);
};

struct SolveOutcome {
  enum class Status { Found, ReconstructionFailure, NoSolution };
  Status status = Status::NoSolution;
  std::vector<RadicalScalar> alpha;
  std::string detail;
};

struct SolveOptions {
  long max_den = 64;
  std::vector<long> basis = {2, 3, 6};
  std::vector<long> fallback_basis = {2, 3, 5, 6, 7, 10};
  int random_restarts = 400;
  unsigned rng_seed = 20240901;
};

// Newton from the pattern seed, radical reconstruction, exact
// re-substitution. Reconstruction failure is reported distinctly from
// nonexistence; NoSolution is only claimed after every restart fails the
// exact check.
SolveOutcome solve_fixed_nH(const PhiSystem& sys, long nH,
                            const SignPattern& pattern,
                            const SolveOptions& options = {});

// Every exact solution found at this n_H: all pattern seeds plus random
// restarts, closed under global negation and radical conjugation, deduped.
std::vector<std::vector<RadicalScalar>> solve_all_fixed_nH(
    const PhiSystem& sys, long nH, const SolveOptions& options = {});

struct InterpolateOptions {
  // Interpolation nodes default to d+1 consecutive n_H values from d+1.
  long node_start = 0;  // 0: use d+1
  SolveOptions solve;
};

// Solve at d+1 nodes on a consistent branch, Lagrange-interpolate each
// coefficient, then verify the family symbolically.
CertificateFamily interpolate_family(int d,
                                     const InterpolateOptions& options = {});

// The conjectured closed form for alpha_d (all-plus signs). A hypothesis,
// never asserted as ground truth.
RadicalScalar alpha_d_hypothesis(int d);

struct HypothesisReport {
  RadicalScalar hypothesis;
  RadicalScalar regenerated;
  bool all_match = false;
  // Per-radicand match/mismatch, keyed by squarefree radicand.
  std::map<long, bool> term_match;
};
HypothesisReport check_alpha_d_hypothesis(int d,
                                          const CertificateFamily& family);

Certificate instantiate(const CertificateFamily& family,
                        const ClassParams& params);

struct VerifyResult {
  bool ok = false;
  std::optional<Polynomial> residual;  // nonzero remainder on failure
  size_t groebner_size = 0;
};

struct VerifyOptions {
  uint64_t max_pairs = 20'000'000;
};

// NF(sum s_i^2 - f_viz, GB(I_viz)) == 0; the residual is returned on
// failure.
VerifyResult verify_exact(const Certificate& cert,
                          const VerifyOptions& options = {});

// Substituting the family coefficients into the phi system must give
// identities in n_H. Diagonal-sigma kind only.
bool verify_family(const CertificateFamily& family);

// Closed-form lambda of the appendix construction, 1-based g and i.
RadicalScalar appendix_lambda(int nG, int g, int i);

}  // namespace vizsos

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vizsos/certificates.hpp"
#include "vizsos/groebner.hpp"

namespace vizsos {

// Coefficient-matching feasibility problem: find X psd with
// NF(v^T X v) = NF(f). One constraint per standard monomial appearing in
// any NF(v_a v_b) or in NF(f).
struct SdpProblem {
  struct Constraint {
    Monomial monomial;
    // (a, b, w) with a <= b; <A,X> counts the off-diagonal twice.
    std::vector<std::tuple<int, int, Rational>> entries;
    Rational rhs;
  };

  int p = 0;
  std::vector<Monomial> v;
  std::vector<Constraint> constraints;
  OrderPtr order;
};

// The numeric arm is rational-input only; a non-rational f is unsupported.
SdpProblem assemble(
    const GroebnerBasis& gb, const Polynomial& f, int ell,
    const std::optional<std::vector<Monomial>>& keep = std::nullopt);

enum class SdpStatus { Feasible, InfeasibleHeuristic, IterationLimit };

std::string to_string(SdpStatus status);

struct SdpOptions {
  double tol = 1e-7;
  int max_iter = 100000;
  double rho = 1.0;
  double over_relax = 1.6;
  // Infeasibility is heuristic: declared when the best affine residual over
  // the psd cone stagnates above 1e3*tol for this many iterations.
  int stall_iters = 5000;
  enum class Objective { None, Trace } objective = Objective::None;
  double objective_weight = 1.0;
};

struct SdpSolution {
  Eigen::MatrixXd X;
  SdpStatus status = SdpStatus::IterationLimit;
  double residual = 0.0;
  double min_eigenvalue = 0.0;
  int iterations = 0;
};

SdpSolution solve(const SdpProblem& problem, const SdpOptions& options = {});

struct NumericCertificate {
  Eigen::MatrixXd S;  // t x p; rows are the s_i coefficient vectors
  std::vector<Monomial> v;
  Eigen::VectorXd spectrum;  // descending
  std::vector<int> removable_monomials;  // near-zero columns of S
};

// Eigendecompose, drop eigenvalues below eig_cut relative to the largest,
// S = D^{1/2} V^T. An eigenvalue below the negative cut is an inconsistency.
NumericCertificate extract(const SdpSolution& sol, const SdpProblem& problem,
                           double eig_cut = 1e-6);

struct RoundedGram {
  std::vector<std::vector<RadicalScalar>> X;
  std::vector<std::vector<double>> distance;
  double max_distance = 0.0;
};

// Per-entry nearest simple radical value with denominators <= max_den.
// Distances are reported, never silently accepted; exactness downstream is
// established only by certificate verification.
RoundedGram round_gram(const SdpSolution& sol,
                       const std::vector<long>& radicands, long max_den,
                       double noise = 1e-3);

// Exact LDL^T of the rounded Gram into certificate rows sqrt(d_k) (L^T v)_k.
// Pivots must be rational (their square roots stay in the ring).
Certificate exact_certificate_from_gram(const RoundedGram& gram,
                                        const SdpProblem& problem,
                                        const ClassParams& params);

struct GramGroup {
  std::string label;
  std::vector<int> columns;
  std::string tag;     // structural kind, e.g. "const" | "x" | "xx"
  std::string family;  // groups with equal family share the same g index
};

// The structure-hypothesis step of the methodology: tie Gram entries into
// equal-value classes keyed by (tag_i, tag_j, same family or not) and append
// the corresponding homogeneous equality constraints. Solving the extended
// problem lands on the block-patterned solution the ansatz describes.
void add_entry_symmetry(SdpProblem& problem,
                        const std::vector<GramGroup>& groups);

// Groups for the sigma-monomial ansatz: the constant monomial, one group of
// degree-1 monomials per g, and one group of degree-2 monomials per g.
std::vector<GramGroup> sigma_monomial_groups(const SdpProblem& problem,
                                             const VarRegistry& reg);

struct GramEquation {
  std::string lhs;  // "<a,b_1>" style
  RadicalScalar value;
};

// Block-constant readout of the exact Gram under a declared coefficient
// grouping; non-constant blocks are a shape mismatch.
std::vector<GramEquation> gram_inner_product_system(
    const RoundedGram& gram, const std::vector<GramGroup>& groups);

}  // namespace vizsos

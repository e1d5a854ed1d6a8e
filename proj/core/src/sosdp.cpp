#include "vizsos/sosdp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vizsos/model.hpp"
#include "vizsos/reconstruct.hpp"

namespace vizsos {

std::string to_string(SdpStatus status) {
  switch (status) {
    case SdpStatus::Feasible:
      return "feasible";
    case SdpStatus::InfeasibleHeuristic:
      return "infeasible-heuristic";
    case SdpStatus::IterationLimit:
      return "iteration-limit";
  }
  return "unknown";
}

SdpProblem assemble(const GroebnerBasis& gb, const Polynomial& f, int ell,
                    const std::optional<std::vector<Monomial>>& keep) {
  for (const auto& t : f.terms())
    if (!t.coeff.is_rational())
      throw ValidationError(
          "assemble: the numeric arm supports rational polynomials only");

  std::vector<Monomial> v = standard_monomials(gb, ell);
  if (keep) {
    std::vector<Monomial> filtered;
    for (const auto& m : v)
      for (const auto& k : *keep)
        if (m == k) {
          filtered.push_back(m);
          break;
        }
    v = std::move(filtered);
  }

  SdpProblem prob;
  prob.order = gb.order;
  prob.v = v;
  prob.p = static_cast<int>(v.size());

  struct Key {
    Monomial m;
  };
  auto cmp = [&](const Monomial& a, const Monomial& b) {
    return gb.order->less(a, b);
  };
  std::map<Monomial, SdpProblem::Constraint, decltype(cmp)> by_monomial(cmp);

  for (int a = 0; a < prob.p; ++a) {
    for (int b = a; b < prob.p; ++b) {
      Polynomial prod = Polynomial::from_terms(
          gb.order, {{v[a] * v[b], RadicalScalar(1)}});
      Polynomial nf = normal_form(prod, gb);
      for (const auto& t : nf.terms()) {
        auto& c = by_monomial[t.monomial];
        c.monomial = t.monomial;
        c.entries.emplace_back(a, b, t.coeff.as_rational());
      }
    }
  }
  Polynomial f_nf = normal_form(f, gb);
  for (const auto& t : f_nf.terms()) {
    auto& c = by_monomial[t.monomial];
    c.monomial = t.monomial;
    c.rhs = t.coeff.as_rational();
  }
  for (auto& [m, c] : by_monomial) prob.constraints.push_back(std::move(c));
  return prob;
}

namespace {

Eigen::VectorXd apply_constraints(const SdpProblem& prob,
                                  const Eigen::MatrixXd& X) {
  Eigen::VectorXd r(prob.constraints.size());
  for (size_t k = 0; k < prob.constraints.size(); ++k) {
    double s = 0;
    for (const auto& [a, b, w] : prob.constraints[k].entries)
      s += w.get_d() * (a == b ? X(a, a) : 2 * X(a, b));
    r[static_cast<int>(k)] = s;
  }
  return r;
}

}  // namespace

SdpSolution solve(const SdpProblem& prob, const SdpOptions& options) {
  const int p = prob.p;
  const int m = static_cast<int>(prob.constraints.size());
  if (p < 1) throw ValidationError("solve: empty monomial vector");

  Eigen::VectorXd b(m);
  for (int k = 0; k < m; ++k) b[k] = prob.constraints[k].rhs.get_d();

  // Gram matrix of the constraint functionals.
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
  {
    // Collect per matrix entry (a,b) the list of (constraint, weight).
    std::map<std::pair<int, int>, std::vector<std::pair<int, double>>> cells;
    for (int k = 0; k < m; ++k)
      for (const auto& [a, b2, w] : prob.constraints[k].entries)
        cells[{a, b2}].emplace_back(k, w.get_d());
    for (const auto& [cell, users] : cells) {
      double mult = cell.first == cell.second ? 1.0 : 2.0;
      for (const auto& [k1, w1] : users)
        for (const auto& [k2, w2] : users) M(k1, k2) += mult * w1 * w2;
    }
  }
  // Tied-entry constraints overlap the coefficient-matching ones, so the
  // Gram of constraint functionals can be rank-deficient; solve through a
  // rank-revealing decomposition (pseudo-inverse on consistent systems).
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> solver(M);

  auto project_affine = [&](const Eigen::MatrixXd& Y) {
    Eigen::VectorXd r = apply_constraints(prob, Y) - b;
    Eigen::VectorXd y = solver.solve(r);
    Eigen::MatrixXd X = Y;
    for (int k = 0; k < m; ++k) {
      for (const auto& [a, b2, w] : prob.constraints[k].entries) {
        double delta = y[k] * w.get_d();
        X(a, b2) -= delta;
        if (a != b2) X(b2, a) -= delta;
      }
    }
    return X;
  };

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(p, p);
  if (options.objective == SdpOptions::Objective::Trace)
    C = Eigen::MatrixXd::Identity(p, p) * options.objective_weight;

  Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(p, p);
  Eigen::MatrixXd U = Eigen::MatrixXd::Zero(p, p);

  SdpSolution sol;
  double best_residual = std::numeric_limits<double>::infinity();
  int stall = 0;
  double last_min_eig = 0.0;

  for (int iter = 1; iter <= options.max_iter; ++iter) {
    Eigen::MatrixXd X =
        project_affine(Z - U - C / options.rho);
    Eigen::MatrixXd Xr = options.over_relax * X +
                         (1.0 - options.over_relax) * Z;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Xr + U);
    Eigen::VectorXd lam = eig.eigenvalues();
    last_min_eig = lam.minCoeff();
    Eigen::VectorXd clamped = lam.cwiseMax(0.0);
    Z = eig.eigenvectors() * clamped.asDiagonal() *
        eig.eigenvectors().transpose();
    U += Xr - Z;

    double residual = (apply_constraints(prob, Z) - b).cwiseAbs().maxCoeff();
    if (residual <= options.tol) {
      sol.X = Z;
      sol.status = SdpStatus::Feasible;
      sol.residual = residual;
      sol.min_eigenvalue = 0.0;
      sol.iterations = iter;
      return sol;
    }
    if (residual < best_residual * (1.0 - 1e-3)) {
      best_residual = residual;
      stall = 0;
    } else {
      ++stall;
    }
    if (stall >= options.stall_iters && best_residual > 1e3 * options.tol) {
      sol.X = Z;
      sol.status = SdpStatus::InfeasibleHeuristic;
      sol.residual = best_residual;
      sol.min_eigenvalue = last_min_eig;
      sol.iterations = iter;
      return sol;
    }
  }
  sol.X = Z;
  sol.status = SdpStatus::IterationLimit;
  sol.residual = (apply_constraints(prob, Z) - b).cwiseAbs().maxCoeff();
  sol.min_eigenvalue = last_min_eig;
  sol.iterations = options.max_iter;
  return sol;
}

NumericCertificate extract(const SdpSolution& sol, const SdpProblem& problem,
                           double eig_cut) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sol.X);
  Eigen::VectorXd lam = eig.eigenvalues();
  const int p = static_cast<int>(lam.size());
  double lam_max = lam.maxCoeff();
  double cut = eig_cut * std::max(lam_max, 0.0);
  for (int i = 0; i < p; ++i)
    if (lam[i] < -cut - 1e-12)
      throw VerificationError(
          "extract: eigenvalue below the negative cut, X is not psd");

  NumericCertificate cert;
  cert.v = problem.v;
  cert.spectrum = Eigen::VectorXd(p);
  std::vector<int> kept;
  // SelfAdjointEigenSolver sorts ascending; report descending.
  for (int i = 0; i < p; ++i) cert.spectrum[i] = lam[p - 1 - i];
  for (int i = p - 1; i >= 0; --i)
    if (lam[i] > cut) kept.push_back(i);
  cert.S = Eigen::MatrixXd(kept.size(), p);
  for (size_t r = 0; r < kept.size(); ++r)
    cert.S.row(static_cast<int>(r)) =
        std::sqrt(lam[kept[r]]) * eig.eigenvectors().col(kept[r]).transpose();
  for (int c = 0; c < p; ++c) {
    double norm = kept.empty() ? 0.0 : cert.S.col(c).norm();
    if (norm <= std::sqrt(std::max(cut, 0.0)))
      cert.removable_monomials.push_back(c);
  }
  return cert;
}

RoundedGram round_gram(const SdpSolution& sol,
                       const std::vector<long>& radicands, long max_den,
                       double noise) {
  const int p = static_cast<int>(sol.X.rows());
  RoundedGram out;
  out.X.assign(p, std::vector<RadicalScalar>(p));
  out.distance.assign(p, std::vector<double>(p, 0.0));
  for (int a = 0; a < p; ++a)
    for (int b2 = a; b2 < p; ++b2) {
      RadicalCandidate c =
          reconstruct_radical(sol.X(a, b2), radicands, max_den, noise);
      out.X[a][b2] = c.value;
      out.X[b2][a] = c.value;
      out.distance[a][b2] = c.distance;
      out.distance[b2][a] = c.distance;
      out.max_distance = std::max(out.max_distance, c.distance);
    }
  return out;
}

Certificate exact_certificate_from_gram(const RoundedGram& gram,
                                        const SdpProblem& problem,
                                        const ClassParams& params) {
  const int p = static_cast<int>(gram.X.size());
  if (p != problem.p)
    throw StructuralError("gram dimension does not match the problem");

  // Exact LDL^T with zero-pivot skipping (psd: a zero pivot forces a zero
  // row). Pivots must be rational so their square roots stay in the ring.
  std::vector<std::vector<RadicalScalar>> A = gram.X;
  std::vector<std::vector<RadicalScalar>> L(
      p, std::vector<RadicalScalar>(p, RadicalScalar()));
  std::vector<Rational> d(p, Rational(0));
  for (int k = 0; k < p; ++k) L[k][k] = RadicalScalar(1);

  for (int k = 0; k < p; ++k) {
    RadicalScalar pivot = A[k][k];
    if (pivot.is_zero()) {
      for (int j = k + 1; j < p; ++j)
        if (!A[k][j].is_zero())
          throw VerificationError(
              "rounded Gram is not psd: zero pivot with nonzero row");
      continue;
    }
    if (!pivot.is_rational())
      throw VerificationError(
          "rounded Gram pivot is not rational; cannot take an exact square "
          "root in the ring");
    Rational dk = pivot.as_rational();
    if (dk < 0)
      throw VerificationError("rounded Gram is not psd: negative pivot");
    d[k] = dk;
    RadicalScalar inv(Rational(1) / dk);
    for (int i = k + 1; i < p; ++i) L[i][k] = A[i][k] * inv;
    for (int i = k + 1; i < p; ++i)
      for (int j = i; j < p; ++j) {
        RadicalScalar upd = L[i][k] * L[j][k] * RadicalScalar(dk);
        A[i][j] -= upd;
        A[j][i] = A[i][j];
      }
  }

  Certificate cert;
  cert.params = params;
  cert.provenance = "generated";
  int degree = 0;
  for (const auto& m : problem.v)
    degree = std::max<int>(degree, static_cast<int>(m.degree()));
  cert.degree = degree;
  for (int k = 0; k < p; ++k) {
    if (d[k] == 0) continue;
    RadicalScalar root = RadicalScalar::sqrt_of_rational(d[k]);
    std::vector<Polynomial::Term> terms;
    for (int i = k; i < p; ++i) {
      RadicalScalar c = L[i][k] * root;
      if (!c.is_zero()) terms.push_back({problem.v[i], c});
    }
    cert.polys.push_back(
        Polynomial::from_terms(problem.order, std::move(terms)));
  }
  return cert;
}

void add_entry_symmetry(SdpProblem& problem,
                        const std::vector<GramGroup>& groups) {
  std::map<std::string, std::pair<int, int>> representative;
  std::set<std::pair<int, int>> seen;
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    for (size_t gj = gi; gj < groups.size(); ++gj) {
      std::string ta = groups[gi].tag, tb = groups[gj].tag;
      bool same = groups[gi].family == groups[gj].family;
      if (ta > tb) std::swap(ta, tb);
      std::string key = ta + "|" + tb + "|" + (same ? "same" : "cross");
      for (int a0 : groups[gi].columns)
        for (int b0 : groups[gj].columns) {
          int a = std::min(a0, b0), b = std::max(a0, b0);
          if (!seen.emplace(a, b).second) continue;
          auto [it, inserted] =
              representative.emplace(key, std::make_pair(a, b));
          if (inserted) continue;
          auto [ra, rb] = it->second;
          // <A,X> doubles off-diagonal entries; normalise the weights so the
          // constraint reads X[ra][rb] - X[a][b] = 0.
          SdpProblem::Constraint c;
          c.monomial = Monomial();
          c.entries.emplace_back(ra, rb,
                                 ra == rb ? Rational(1) : Rational(1, 2));
          c.entries.emplace_back(a, b, a == b ? Rational(-1)
                                              : make_rational(-1, 2));
          c.rhs = 0;
          problem.constraints.push_back(std::move(c));
        }
    }
  }
}

std::vector<GramGroup> sigma_monomial_groups(const SdpProblem& problem,
                                             const VarRegistry& reg) {
  std::map<std::string, GramGroup> by_key;
  for (int i = 0; i < problem.p; ++i) {
    const Monomial& m = problem.v[i];
    std::string key, tag;
    if (m.is_one()) {
      key = "const";
      tag = "const";
    } else {
      int g = reg.decode(m.exponents()[0].first).a;
      tag = m.degree() == 1 ? "x" : "xx";
      key = tag + std::to_string(g);
    }
    auto& group = by_key[key];
    group.label = key;
    group.tag = tag;
    group.family =
        m.is_one() ? std::string("const")
                   : "g" + std::to_string(reg.decode(m.exponents()[0].first).a);
    group.columns.push_back(i);
  }
  std::vector<GramGroup> out;
  for (auto& [key, group] : by_key) out.push_back(std::move(group));
  return out;
}

std::vector<GramEquation> gram_inner_product_system(
    const RoundedGram& gram, const std::vector<GramGroup>& groups) {
  std::vector<GramEquation> eqs;
  for (size_t i = 0; i < groups.size(); ++i) {
    for (size_t j = i; j < groups.size(); ++j) {
      std::optional<RadicalScalar> common;
      for (int a : groups[i].columns)
        for (int b : groups[j].columns) {
          const RadicalScalar& v = gram.X[a][b];
          if (!common) {
            common = v;
          } else if (!(*common == v)) {
            throw StructuralError("gram block <" + groups[i].label + "," +
                                  groups[j].label +
                                  "> is not constant; shape mismatch");
          }
        }
      if (!common) continue;
      eqs.push_back({"<" + groups[i].label + "," + groups[j].label + ">",
                     *common});
    }
  }
  return eqs;
}

}  // namespace vizsos

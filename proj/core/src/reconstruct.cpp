#include "vizsos/reconstruct.hpp"

#include <algorithm>
#include <cmath>

namespace vizsos {

Rational best_rational(double value, long max_den) {
  if (max_den < 1) throw ValidationError("max_den must be >= 1");
  if (!std::isfinite(value)) throw ValidationError("non-finite value");
  bool negative = value < 0;
  double v = std::abs(value);

  // Continued fraction convergents p/q; track the best candidate among
  // convergents and the final semiconvergent that still fits the bound.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = v;
  Rational best(static_cast<long>(std::llround(v)), 1);
  double best_err = std::abs(v - best.get_d());
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(x);
    if (fl > 1e18) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0;
    long q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) {
      // Semiconvergent with the largest admissible partial quotient.
      if (q1 > 0) {
        long t = (max_den - q0) / q1;
        if (t > 0) {
          long ps = t * p1 + p0, qs = t * q1 + q0;
          double err = std::abs(v - static_cast<double>(ps) / qs);
          if (err < best_err) {
            best = make_rational(ps, qs);
            best_err = err;
          }
        }
      }
      break;
    }
    double err = std::abs(v - static_cast<double>(p2) / q2);
    if (err < best_err) {
      best = make_rational(p2, q2);
      best_err = err;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = x - fl;
    if (frac < 1e-18) break;
    x = 1.0 / frac;
  }
  best.canonicalize();
  return negative ? Rational(-best) : best;
}

Rational sqrt_rational_approx(long m, int bits) {
  // floor(sqrt(m * 4^bits)) / 2^bits.
  Integer scaled = Integer(m) << (2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Rational r(root);
  r /= Rational(Integer(1) << bits);
  return r;
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void lll_reduce(std::vector<std::vector<Integer>>& rows) {
  const size_t n = rows.size();
  if (n < 2) return;
  const Rational delta(99, 100);

  // Gram-Schmidt data, maintained incrementally: size reduction leaves the
  // orthogonal basis untouched, and a swap only mixes two adjacent levels.
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, 0));
  std::vector<Rational> B(n, 0);  // squared norms of the starred vectors
  {
    std::vector<std::vector<Rational>> star(n);
    for (size_t i = 0; i < n; ++i) {
      star[i].assign(rows[i].size(), 0);
      for (size_t t = 0; t < rows[i].size(); ++t)
        star[i][t] = Rational(rows[i][t]);
      for (size_t j = 0; j < i; ++j) {
        if (B[j] == 0) continue;
        Rational d = 0;
        for (size_t t = 0; t < rows[i].size(); ++t)
          d += Rational(rows[i][t]) * star[j][t];
        mu[i][j] = d / B[j];
        for (size_t t = 0; t < star[i].size(); ++t)
          star[i][t] -= mu[i][j] * star[j][t];
      }
      B[i] = dot(star[i], star[i]);
    }
  }

  auto round_nearest = [](const Rational& m) {
    Integer r;
    Rational shifted = m + Rational(1, 2);
    mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(),
               shifted.get_den_mpz_t());
    return r;
  };

  auto size_reduce = [&](size_t k, size_t j) {
    Integer r = round_nearest(mu[k][j]);
    if (r == 0) return;
    for (size_t t = 0; t < rows[k].size(); ++t) rows[k][t] -= r * rows[j][t];
    Rational rq(r);
    for (size_t t = 0; t < j; ++t) mu[k][t] -= rq * mu[j][t];
    mu[k][j] -= rq;
  };

  size_t k = 1;
  size_t guard = 0;
  while (k < n && ++guard < 200000) {
    size_reduce(k, k - 1);
    Rational lovasz = (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1];
    if (B[k] >= lovasz) {
      for (size_t j = k - 1; j-- > 0;) size_reduce(k, j);
      ++k;
      continue;
    }
    std::swap(rows[k], rows[k - 1]);
    Rational m = mu[k][k - 1];
    Rational Bnew = B[k] + m * m * B[k - 1];
    if (Bnew == 0) {
      // Degenerate level (dependent rows); restart the affected block.
      mu[k][k - 1] = 0;
      B[k - 1] = B[k];
      B[k] = 0;
    } else {
      mu[k][k - 1] = m * B[k - 1] / Bnew;
      B[k] = B[k - 1] * B[k] / Bnew;
      B[k - 1] = Bnew;
      for (size_t i = k + 1; i < n; ++i) {
        Rational t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
      }
    }
    for (size_t j = 0; j + 1 < k; ++j) std::swap(mu[k - 1][j], mu[k][j]);
    k = k > 1 ? k - 1 : 1;
  }
}

namespace {

struct RelationLattice {
  // rows[i] = identity row i ++ round(scale * x_i); the last x is -value.
  std::vector<std::vector<Integer>> rows;
};

// Build and reduce the integer-relation lattice for
// p_0*1 + p_1*sqrt(r_1) + ... + q*(-value) ~ 0.
std::vector<std::vector<Integer>> relation_rows(
    const std::vector<Rational>& xs, const Rational& scale) {
  const size_t n = xs.size();
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n + 1, 0));
  for (size_t i = 0; i < n; ++i) {
    rows[i][i] = 1;
    Rational scaled = xs[i] * scale;
    Integer rounded;
    Rational half(1, 2);
    Rational shifted = scaled + half;
    mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(),
               shifted.get_den_mpz_t());
    rows[i][n] = rounded;
  }
  lll_reduce(rows);
  return rows;
}

}  // namespace

RadicalCandidate reconstruct_radical(double value,
                                     const std::vector<long>& radicands,
                                     long max_den, double noise) {
  // Rational-only candidate from continued fractions is always in play.
  RadicalCandidate best;
  best.value = RadicalScalar(best_rational(value, max_den));
  best.distance = std::abs(value - best.value.to_double());

  std::vector<long> basis;
  for (long m : radicands) {
    auto [s, sf] = extract_square_part(Integer(m));
    if (sf != 1 &&
        std::find(basis.begin(), basis.end(), sf.get_si()) == basis.end())
      basis.push_back(sf.get_si());
  }
  if (basis.empty()) return best;

  const int bits = 48;
  std::vector<Rational> xs;
  xs.push_back(Rational(1));
  for (long m : basis) xs.push_back(sqrt_rational_approx(m, bits));
  {
    Rational v;
    mpq_set_d(v.get_mpq_t(), -value);
    xs.push_back(v);
  }

  // The scale sets how much residual one unit of coefficient is worth; tie
  // it to the expected noise so simple nearby candidates win over exotic
  // exact-looking ones.
  Rational scale = Rational(Integer(
      static_cast<unsigned long>(std::max(10.0, 1.0 / std::max(noise, 1e-15)))));
  auto rows = relation_rows(xs, scale);

  auto complexity = [](const RadicalScalar& r) {
    double c = 0;
    for (const auto& [m, q] : r.terms())
      c += std::abs(q.get_num().get_d()) + q.get_den().get_d();
    return c;
  };

  for (const auto& row : rows) {
    Integer q = row[basis.size() + 1];
    if (q == 0) continue;
    Integer qa = q < 0 ? Integer(-q) : q;
    if (qa > max_den) continue;
    Rational head(row[0], q);
    head.canonicalize();
    RadicalScalar candidate(head);
    for (size_t i = 0; i < basis.size(); ++i) {
      Rational c(row[i + 1], q);
      c.canonicalize();
      candidate += RadicalScalar::sqrt_term(c, basis[i]);
    }
    double dist = std::abs(value - candidate.to_double());
    // Strictly closer wins; within the noise band the simpler value wins,
    // so sqrt(2)/2 beats a long rational at the same distance.
    bool better = dist + noise < best.distance ||
                  (dist < best.distance + noise &&
                   complexity(candidate) < complexity(best.value));
    if (better) {
      best.value = candidate;
      best.distance = dist;
    }
  }
  return best;
}

std::optional<RadicalScalar> reconstruct_radical_exact(
    const Rational& value, const std::vector<long>& radicands, long max_den,
    int precision_bits) {
  std::vector<long> basis;
  for (long m : radicands) {
    auto [s, sf] = extract_square_part(Integer(m));
    if (sf != 1 &&
        std::find(basis.begin(), basis.end(), sf.get_si()) == basis.end())
      basis.push_back(sf.get_si());
  }
  std::vector<Rational> xs;
  xs.push_back(Rational(1));
  for (long m : basis) xs.push_back(sqrt_rational_approx(m, precision_bits));
  xs.push_back(-value);

  Rational scale(Integer(1) << (precision_bits - 16));
  auto rows = relation_rows(xs, scale);

  std::optional<RadicalScalar> best;
  Rational best_err;
  for (const auto& row : rows) {
    Integer q = row[basis.size() + 1];
    if (q == 0) continue;
    Integer qa = q < 0 ? Integer(-q) : q;
    if (qa > max_den) continue;
    Rational head(row[0], q);
    head.canonicalize();
    RadicalScalar candidate(head);
    for (size_t i = 0; i < basis.size(); ++i) {
      Rational c(row[i + 1], q);
      c.canonicalize();
      candidate += RadicalScalar::sqrt_term(c, basis[i]);
    }
    // Residual of the relation at working precision (xs.back() is -value).
    Rational resid = 0;
    for (size_t i = 0; i < xs.size(); ++i) resid += Rational(row[i]) * xs[i];
    Rational err = resid < 0 ? Rational(-resid) : resid;
    if (!best || err < best_err) {
      best = candidate;
      best_err = err;
    }
  }
  if (best) {
    // Reject relations whose residual is no better than noise: threshold at
    // 2^-(precision/2) relative to q <= max_den.
    Rational threshold = Rational(1, 1);
    threshold /= Rational(Integer(1) << (precision_bits / 2));
    if (best_err > threshold) return std::nullopt;
  }
  return best;
}

}  // namespace vizsos

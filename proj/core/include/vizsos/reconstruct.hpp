#pragma once

#include <optional>
#include <vector>

#include "vizsos/radical.hpp"

namespace vizsos {

// Best rational approximation with denominator <= max_den, by continued
// fraction convergents and semiconvergents.
Rational best_rational(double value, long max_den);

struct RadicalCandidate {
  RadicalScalar value;
  double distance = 0.0;
};

// Nearest "simple" element of span{sqrt(m) : m in radicands} with combined
// denominator <= max_den, found by integer-relation lattice reduction. The
// noise scale weights simplicity against distance: candidates within the
// scale of each other prefer smaller numerators. Always returns a candidate
// (possibly plain rational); the caller establishes exactness separately.
RadicalCandidate reconstruct_radical(double value,
                                     const std::vector<long>& radicands,
                                     long max_den, double noise = 1e-6);

// High-precision variant: `value` is an exact rational approximation with
// error below 2^-precision_bits. Returns nothing when no relation with the
// requested denominator bound survives.
std::optional<RadicalScalar> reconstruct_radical_exact(
    const Rational& value, const std::vector<long>& radicands, long max_den,
    int precision_bits);

// sqrt(m) as a rational accurate to 2^-bits.
Rational sqrt_rational_approx(long m, int bits);

// LLL on integer row vectors (delta = 0.99); rows are reduced in place.
void lll_reduce(std::vector<std::vector<Integer>>& rows);

}  // namespace vizsos

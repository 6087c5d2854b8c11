#pragma once

#include <cstdint>

#include "qg2/polynomial.hpp"

namespace qg2 {

/// The five untilded families covered by the closed forms. Shifts and the
/// tilde mirror do not change the dimension.
enum class DimFamily { B, C, D, E, F };

struct DimQuery {
  DimFamily family;
  int k = 0;
  int l = 0;
};

/// Exact closed-form dimension. Throws NonIntegralResult if the rational
/// prefactor does not divide, InvalidParameters on negative indices.
std::uint64_t dim_closed_form(const DimQuery& q);

/// Sum of all coefficients.
std::uint64_t dim_of_character(const QPolynomial& p);

}  // namespace qg2

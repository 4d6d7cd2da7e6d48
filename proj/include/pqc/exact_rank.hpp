#pragma once

// Matrix rank with exact arithmetic.
//
// Every finite double is a binary rational, so a complex double matrix is a
// matrix over Q(i). After scaling by a common power of two it becomes a matrix
// over the Gaussian integers Z[i], whose rank is found by fraction-free
// (Bareiss) elimination. Entries start in checked 128-bit integers and the
// elimination is rerun with arbitrary precision on overflow.

#include <cstdint>

#include <Eigen/Dense>

#include "pqc/operators.hpp"

namespace pqc {

/// Rank of m with every entry read as the exact rational it stores.
std::int64_t exact_rank(const Eigen::MatrixXcd& m);

/// Exact rank of df; throws std::invalid_argument unless d.exact_entries().
std::int64_t exact_rank(const DerivativeOperator& d);

/// exact_rank when the entries are exact, numerical_rank otherwise.
std::int64_t rank(const DerivativeOperator& d);

}  // namespace pqc

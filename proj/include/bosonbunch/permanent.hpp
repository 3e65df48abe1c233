/*
 * Copyright 2026 bosonbunch developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOSONBUNCH_PERMANENT_HPP
#define BOSONBUNCH_PERMANENT_HPP

#include <span>

#include "bosonbunch/complex_matrix.hpp"

namespace bosonbunch {

/// Hard caps: exact evaluation refuses larger inputs instead of truncating.
inline constexpr std::size_t kPermanentMaxDim = 30;
inline constexpr std::size_t kPermanentNaiveMaxDim = 10;

/**
 * @brief Permanent of a square complex matrix via Ryser's inclusion-exclusion.
 *
 * Column subsets are visited in Gray-code order so each step updates the row
 * sums with a single column. O(2^n * n) time; exact up to floating-point
 * rounding, with compensated summation for n >= 16 where the terms are large
 * and cancellation-prone.
 */
cxd permanent_ryser(const ComplexMatrix& m);

/// Brute-force sum over all n! permutations, n <= 10. Test oracle only.
cxd permanent_naive(const ComplexMatrix& m);

/// Permanent of the matrix formed by repeating column j col_multiplicities[j]
/// times. The multiplicities must sum to the number of rows.
cxd permanent_with_repetitions(const ComplexMatrix& m, std::span<const int> col_multiplicities);

} // namespace bosonbunch

#endif // BOSONBUNCH_PERMANENT_HPP

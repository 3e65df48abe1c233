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

#include "bosonbunch/permanent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

namespace bosonbunch {

namespace {

/// Kahan-compensated accumulator for complex terms.
struct CompensatedSum {
    cxd sum{0.0, 0.0};
    cxd carry{0.0, 0.0};
    void add(cxd term) {
        const cxd y = term - carry;
        const cxd t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void require_square(const ComplexMatrix& m, const char* op) {
    if (!m.is_square())
        throw ShapeError(std::string(op) + ": matrix must be square");
}

} // namespace

cxd permanent_ryser(const ComplexMatrix& m) {
    require_square(m, "permanent_ryser");
    const std::size_t n = m.rows();
    if (n > kPermanentMaxDim)
        throw SizeLimitError("permanent_ryser: dimension " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kPermanentMaxDim));
    if (n == 0)
        return cxd(1.0, 0.0);

    // Per(A) = (-1)^n sum_{S != 0} (-1)^{|S|} prod_i sum_{j in S} a_ij.
    // The Gray code k ^ (k>>1) changes one column per step, so the row sums
    // are maintained incrementally.
    std::vector<cxd> row_sum(n, cxd(0.0, 0.0));
    const bool compensate = n >= 16;
    CompensatedSum acc;
    cxd plain(0.0, 0.0);

    std::uint64_t gray = 0;
    const std::uint64_t count = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const std::uint64_t changed = next ^ gray;
        const unsigned j = static_cast<unsigned>(std::countr_zero(changed));
        if (next & changed) {
            for (std::size_t i = 0; i < n; ++i)
                row_sum[i] += m(i, j);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                row_sum[i] -= m(i, j);
        }
        gray = next;

        cxd prod(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            prod *= row_sum[i];
        const bool negative = ((n - std::popcount(gray)) & 1U) != 0;
        if (negative)
            prod = -prod;
        if (compensate)
            acc.add(prod);
        else
            plain += prod;
    }
    return compensate ? acc.sum : plain;
}

cxd permanent_naive(const ComplexMatrix& m) {
    require_square(m, "permanent_naive");
    const std::size_t n = m.rows();
    if (n > kPermanentNaiveMaxDim)
        throw SizeLimitError("permanent_naive: dimension " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kPermanentNaiveMaxDim));
    if (n == 0)
        return cxd(1.0, 0.0);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    cxd total(0.0, 0.0);
    do {
        cxd prod(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            prod *= m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

cxd permanent_with_repetitions(const ComplexMatrix& m, std::span<const int> col_multiplicities) {
    if (col_multiplicities.size() != m.cols())
        throw ShapeError("permanent_with_repetitions: one multiplicity per column required");
    long total = 0;
    for (int c : col_multiplicities) {
        if (c < 0)
            throw DomainError("permanent_with_repetitions: negative multiplicity");
        total += c;
    }
    if (static_cast<std::size_t>(total) != m.rows())
        throw ShapeError("permanent_with_repetitions: multiplicities sum to " +
                         std::to_string(total) + ", expected " + std::to_string(m.rows()));

    ComplexMatrix expanded(m.rows(), static_cast<std::size_t>(total));
    std::size_t out = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (int c = 0; c < col_multiplicities[j]; ++c, ++out)
            for (std::size_t i = 0; i < m.rows(); ++i)
                expanded(i, out) = m(i, j);
    return permanent_ryser(expanded);
}

} // namespace bosonbunch

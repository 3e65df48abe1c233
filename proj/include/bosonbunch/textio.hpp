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

#ifndef BOSONBUNCH_TEXTIO_HPP
#define BOSONBUNCH_TEXTIO_HPP

#include <iosfwd>
#include <string>

#include "bosonbunch/complex_matrix.hpp"
#include "bosonbunch/gram.hpp"
#include "bosonbunch/interference.hpp"

namespace bosonbunch {

/// 12 significant digits; lowercase scientific notation below 1e-4.
std::string format_value(double v);

/// "re+imj" with both parts in format_value notation, e.g. "0.5773+0.0000j".
std::string format_complex(cxd v);
cxd parse_complex(const std::string& token);

/// Matrix text format: first line "rows cols", then rows of whitespace
/// separated "re+imj" entries.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ComplexMatrix& m);

/// Gram text format: first line "n", then an n x n block of complex entries.
GramMatrix read_gram(std::istream& in);
GramMatrix read_gram_file(const std::string& path);
void write_gram(std::ostream& out, const GramMatrix& g);

/// Distribution CSV: header "n1,...,nm,probability", rows in the fixed
/// enumeration order, then footer comment lines with p_B / p_FB /
/// clamped_mass (and sum / renormalization when off nominal).
void write_distribution_csv(std::ostream& out, const OutputDistribution& d);
OutputDistribution read_distribution_csv(std::istream& in);
OutputDistribution read_distribution_csv_file(const std::string& path);

} // namespace bosonbunch

#endif // BOSONBUNCH_TEXTIO_HPP

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

#ifndef BOSONBUNCH_ERRORS_HPP
#define BOSONBUNCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bosonbunch {

/// Error categories. The slug is what the CLI prints as "ERROR[slug]: ...";
/// parse/io map to exit code 2, everything else to exit code 1.
enum class errc {
    shape,        ///< dimension mismatch between operands
    size_limit,   ///< input exceeds a hard size cap
    domain,       ///< argument outside the mathematical domain
    feasibility,  ///< Gram matrix is not positive semidefinite
    degenerate,   ///< result undefined (division by vanishing quantity, empty post-selection)
    unsupported,  ///< operation not defined for this input class
    parse,        ///< malformed text input
    io,           ///< file system failure
};

const char* errc_slug(errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }
    const char* slug() const noexcept { return errc_slug(code_); }

  private:
    errc code_;
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(errc::shape, what) {}
};

struct SizeLimitError : Error {
    explicit SizeLimitError(const std::string& what) : Error(errc::size_limit, what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(errc::domain, what) {}
};

struct FeasibilityError : Error {
    explicit FeasibilityError(const std::string& what) : Error(errc::feasibility, what) {}
};

struct DegenerateError : Error {
    explicit DegenerateError(const std::string& what) : Error(errc::degenerate, what) {}
};

struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& what) : Error(errc::unsupported, what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(errc::parse, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(errc::io, what) {}
};

} // namespace bosonbunch

#endif // BOSONBUNCH_ERRORS_HPP

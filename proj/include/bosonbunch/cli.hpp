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

#ifndef BOSONBUNCH_CLI_HPP
#define BOSONBUNCH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bosonbunch::cli {

/// Runs one CLI invocation. argv[0] is the program name. Exit codes:
/// 0 success, 1 domain/feasibility errors, 2 I/O, parse or usage errors.
/// Errors go to `err` as a single line "ERROR[code]: message".
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// main()-style wrapper over std::cout / std::cerr.
int run_main(int argc, const char* const argv[]);

} // namespace bosonbunch::cli

#endif // BOSONBUNCH_CLI_HPP

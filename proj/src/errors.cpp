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

#include "bosonbunch/errors.hpp"

namespace bosonbunch {

const char* errc_slug(errc code) noexcept {
    switch (code) {
        case errc::shape: return "shape";
        case errc::size_limit: return "size";
        case errc::domain: return "domain";
        case errc::feasibility: return "feasibility";
        case errc::degenerate: return "degenerate";
        case errc::unsupported: return "unsupported";
        case errc::parse: return "parse";
        case errc::io: return "io";
    }
    return "unknown";
}

} // namespace bosonbunch

// Copyright 2026 The qrac Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace qrac {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
  public:
    using Error::Error;
};

/// Operand shapes do not fit together (partial trace dims, embeddings, ...).
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// A value violates a type invariant (norm, trace, positivity, range).
class InvariantError : public Error {
  public:
    using Error::Error;
};

/// A digit pair is missing from an encoding table.
class EncodingError : public Error {
  public:
    using Error::Error;
};

/// Requested configuration exists in principle but is not provided.
class Unsupported : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

namespace detail {

inline void require_dimension(int d, int min_d = 2) {
    if (d < min_d) {
        throw InvalidDimension("dimension must be >= " + std::to_string(min_d) +
                               ", got " + std::to_string(d));
    }
}

} // namespace detail
} // namespace qrac

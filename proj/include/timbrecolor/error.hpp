// Copyright 2026 The timbrecolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace timbrecolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input text or binary data. `line()` is 0 when not applicable.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A spectrum with no usable energy for the colour mapping.
class DegenerateSpectrumError : public Error {
public:
    using Error::Error;
};

/// Sidebands would be rendered above the Nyquist frequency.
class AliasingError : public Error {
public:
    using Error::Error;
};

/// A path or gesture whose endpoints do not meet where they must.
class EndpointError : public Error {
public:
    using Error::Error;
};

}  // namespace timbrecolor

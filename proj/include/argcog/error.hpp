// Copyright 2026 The argcog Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace argcog {

enum class ErrorKind {
  DuplicateLabel,
  UnknownLabel,
  SyntaxError,
  MissingSeparator,
  SizeLimitExceeded,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable; `what()` is for
/// humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures additionally carry the 1-based line number and the text of
/// the offending line.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::string text,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  const std::string& text() const noexcept { return text_; }

 private:
  std::size_t line_;
  std::string text_;
};

}  // namespace argcog

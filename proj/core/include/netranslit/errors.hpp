// core/include/netranslit/errors.hpp

// Copyright 2026 The netranslit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef NETRANSLIT_ERRORS_HPP_
#define NETRANSLIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace netranslit {

// Every recoverable failure in the library is reported as an Error with one
// of these kinds. Callers that only care about "data was bad" can catch the
// base type; tests and the CLI dispatch on the kind.
enum class ErrorKind {
  kEmptyWord,
  kUnsupportedScript,
  kParse,
  kUnknownTag,
  kEmptyEntity,
  kIo,
  kFormat,
  kConfig,
  kEmptyCorpus,
  kAlignment,
  kVersion,
  kUntransliterableSyllable,
  kDivisionByZero,
  kShape,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int line = 0,
        int column = 0)
      : std::runtime_error(format_message(kind, message, line, column)),
        kind_(kind),
        line_(line),
        column_(column) {}

  ErrorKind kind() const { return kind_; }
  // 1-based position in the offending input; 0 when not applicable.
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format_message(ErrorKind kind, const std::string& message,
                                    int line, int column);

  ErrorKind kind_;
  int line_;
  int column_;
};

}  // namespace netranslit

#endif  // NETRANSLIT_ERRORS_HPP_

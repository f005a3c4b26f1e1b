// core/src/errors.cpp

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

#include "netranslit/errors.hpp"

#include <sstream>

namespace netranslit {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyWord:
      return "EmptyWord";
    case ErrorKind::kUnsupportedScript:
      return "UnsupportedScript";
    case ErrorKind::kParse:
      return "ParseError";
    case ErrorKind::kUnknownTag:
      return "UnknownTag";
    case ErrorKind::kEmptyEntity:
      return "EmptyEntity";
    case ErrorKind::kIo:
      return "IoError";
    case ErrorKind::kFormat:
      return "FormatError";
    case ErrorKind::kConfig:
      return "ConfigError";
    case ErrorKind::kEmptyCorpus:
      return "EmptyCorpus";
    case ErrorKind::kAlignment:
      return "AlignmentError";
    case ErrorKind::kVersion:
      return "VersionError";
    case ErrorKind::kUntransliterableSyllable:
      return "UntransliterableSyllable";
    case ErrorKind::kDivisionByZero:
      return "DivisionByZero";
    case ErrorKind::kShape:
      return "ShapeError";
  }
  return "Error";
}

std::string Error::format_message(ErrorKind kind, const std::string& message,
                                  int line, int column) {
  std::ostringstream out;
  out << error_kind_name(kind) << ": " << message;
  if (line > 0) {
    out << " (line " << line;
    if (column > 0) out << ", column " << column;
    out << ")";
  }
  return out.str();
}

}  // namespace netranslit

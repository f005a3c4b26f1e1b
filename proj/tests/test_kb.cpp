// tests/test_kb.cpp

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

#include "netranslit/kb.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "netranslit/errors.hpp"

using netranslit::Error;
using netranslit::ErrorKind;
using netranslit::KnowledgeBase;
using netranslit::load_kb;
using netranslit::normalize_kb_key;
using netranslit::translate;
using netranslit::validate_kb;

namespace {

std::string write_temp_kb(const std::string& name, const std::string& body) {
  const auto path =
      (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path, std::ios::binary);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("load_kb: entries, comments, version line") {
  const auto path = write_temp_kb("netranslit_kb_basic.tsv",
                                  "# seed kb v1\n"
                                  "Delhi\tਦਿੱਲੀ\n"
                                  "Indian Institute of Technology\tਭਾਰਤੀ ਤਕਨੀਕੀ ਸੰਸਥਾਨ\n");
  const auto kb = load_kb(path);
  CHECK(kb.size() == 2);
  CHECK(kb.version == "# seed kb v1");
  CHECK(kb.source_path == path);
  CHECK(translate("Delhi", kb) == "ਦਿੱਲੀ");
  CHECK(translate("Indian Institute of Technology", kb) ==
        "ਭਾਰਤੀ ਤਕਨੀਕੀ ਸੰਸਥਾਨ");
  std::remove(path.c_str());
}

TEST_CASE("load_kb: empty file, duplicates, format errors") {
  const auto empty = write_temp_kb("netranslit_kb_empty.tsv", "");
  CHECK(load_kb(empty).size() == 0);
  std::remove(empty.c_str());

  const auto dup = write_temp_kb("netranslit_kb_dup.tsv",
                                 "delhi\tਪੁਰਾਣਾ\n"
                                 "delhi\tਦਿੱਲੀ\n");
  const auto kb = load_kb(dup);
  CHECK(kb.size() == 1);
  CHECK(kb.duplicate_count == 1);
  CHECK(translate("delhi", kb) == "ਦਿੱਲੀ");  // last wins
  std::remove(dup.c_str());

  const auto bad = write_temp_kb("netranslit_kb_bad.tsv",
                                 "delhi\tਦਿੱਲੀ\n"
                                 "no tab on this line\n");
  try {
    load_kb(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kFormat);
    CHECK(e.line() == 2);
  }
  std::remove(bad.c_str());

  try {
    load_kb("/nonexistent/kb.tsv");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
  }
}

TEST_CASE("translate: normalization and the miss case") {
  const auto path = write_temp_kb("netranslit_kb_norm.tsv",
                                  "Sign Of Technology\tਤਕਨੀਕੀ ਚਿਹਨ\n");
  const auto kb = load_kb(path);
  // Case- and whitespace-insensitive on the source side.
  CHECK(translate("sign of technology", kb) == "ਤਕਨੀਕੀ ਚਿਹਨ");
  CHECK(translate("SIGN  OF   TECHNOLOGY", kb) == "ਤਕਨੀਕੀ ਚਿਹਨ");
  // Whole-phrase only: a sub-phrase is a miss, as is an unknown name.
  CHECK(!translate("Technology", kb).has_value());
  CHECK(!translate("Atlantis", kb).has_value());
  std::remove(path.c_str());
}

TEST_CASE("normalize_kb_key") {
  CHECK(normalize_kb_key("  Delhi   University ") == "delhi university");
  CHECK(normalize_kb_key("DELHI") == "delhi");
}

TEST_CASE("validate_kb: counts, duplicates, bad lines") {
  const auto path = write_temp_kb("netranslit_kb_validate.tsv",
                                  "# comment\n"
                                  "delhi\tਦਿੱਲੀ\n"
                                  "broken line without tab\n"
                                  "delhi\tਦਿੱਲੀ ਫਿਰ\n"
                                  "empty\t\n");
  const auto v = validate_kb(path);
  CHECK(v.entry_count == 1);
  CHECK(v.duplicate_count == 1);
  CHECK(v.errors.size() == 2);  // missing tab + empty target
  CHECK(v.warnings.size() == 1);
  CHECK(!v.ok());
  std::remove(path.c_str());

  const auto missing = validate_kb("/nonexistent/kb.tsv");
  CHECK(!missing.ok());
}

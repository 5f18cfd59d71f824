// Copyright 2026 The rgat-abstracts Authors.
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

#include <cstdio>
#include <string>

namespace rgat::acceptance {

/// Collects one PASS/FAIL/SKIP line per criterion.
class Ledger {
 public:
  void pass(int id, const std::string& what, const std::string& detail) { line("PASS", id, what, detail); }
  void fail(int id, const std::string& what, const std::string& detail) {
    line("FAIL", id, what, detail);
    ++failures_;
  }
  void skip(int id, const std::string& what, const std::string& detail) { line("SKIP", id, what, detail); }
  void record(bool ok, int id, const std::string& what, const std::string& detail) {
    ok ? pass(id, what, detail) : fail(id, what, detail);
  }
  int failures() const { return failures_; }

 private:
  void line(const char* status, int id, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", status, id, what.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  int failures_ = 0;
};

inline std::string fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

}  // namespace rgat::acceptance

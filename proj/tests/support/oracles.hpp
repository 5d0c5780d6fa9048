// Copyright 2026 The ExLibris Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Reference evaluators that work on surface terms directly and share no code
// with the library's condition model.

#include <string>
#include <vector>

#include "exlibris/engine.hpp"
#include "exlibris/term.hpp"

namespace exlibris::testing::oracle {

struct Engine {
  std::string name;
  std::vector<long long> version;
};

inline Engine engine(const PlId& id) { return {id.name, {id.version.begin(), id.version.end()}}; }

/// Flattens a right-nested `:` chain. Wildcards become -1.
inline std::vector<long long> chain(const Term& t) {
  std::vector<long long> out;
  const Term* cur = &t;
  while (cur->is_compound(":", 2)) {
    out.push_back(cur->arg(0).is_integer() ? cur->arg(0).value() : -1);
    cur = &cur->arg(1);
  }
  out.push_back(cur->is_integer() ? cur->value() : -1);
  return out;
}

/// -1, 0, 1 by component-wise comparison; a proper prefix is smaller.
inline int compare(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size()) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    ++i;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

inline bool compare_holds(int c, const std::string& op) {
  if (op == "=") return c == 0;
  if (op == "\\=") return c != 0;
  if (op == "<") return c < 0;
  if (op == "=<") return c <= 0;
  if (op == ">") return c > 0;
  if (op == ">=") return c >= 0;
  return false;
}

inline bool eval(const Term& t, const Engine& e) {
  if (t.is_atom()) return t.name() == "all" || t.name() == "any";
  if (t.is_cons()) {
    for (const Term* cur = &t; cur->is_cons(); cur = &cur->arg(1)) {
      if (eval(cur->arg(0), e)) return true;
    }
    return false;
  }
  if (t.is_compound("not", 1)) return !eval(t.arg(0), e);
  if (t.is_compound(",", 2)) {
    const Term& a = t.arg(0);
    const Term& b = t.arg(1);
    if (a.is_atom() && (b.is_cons() || b.is_nil())) {
      if (a.name() != e.name) return false;
      for (const Term* cur = &b; cur->is_cons(); cur = &cur->arg(1)) {
        const Term& pair = cur->arg(0);
        if (!compare_holds(compare(e.version, chain(pair.arg(0))), pair.arg(1).name())) {
          return false;
        }
      }
      return true;
    }
    return eval(a, e) && eval(b, e);
  }
  if (t.is_compound() && t.arity() == 1) {
    if (t.name() != e.name) return false;
    std::vector<long long> pattern = chain(t.arg(0));
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i] < 0) continue;
      if (i >= e.version.size() || e.version[i] != pattern[i]) return false;
    }
    return true;
  }
  return false;
}

}  // namespace exlibris::testing::oracle

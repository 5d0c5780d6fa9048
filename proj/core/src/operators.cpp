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

#include "exlibris/operators.hpp"

namespace exlibris {

OpTable::OpTable() {
  auto add_infix = [this](int p, OpType t, std::initializer_list<const char*> names) {
    for (const char* n : names) infix_.emplace(n, OpDef{p, t});
  };
  auto add_prefix = [this](int p, OpType t, std::initializer_list<const char*> names) {
    for (const char* n : names) prefix_.emplace(n, OpDef{p, t});
  };

  add_infix(1200, OpType::xfx, {":-", "-->"});
  add_prefix(1200, OpType::fx, {":-", "?-"});
  add_prefix(1150, OpType::fx,
             {"dynamic", "discontiguous", "initialization", "multifile",
              "meta_predicate", "module_transparent"});
  add_infix(1100, OpType::xfy, {";"});
  add_infix(1050, OpType::xfy, {"->", "*->"});
  add_infix(1000, OpType::xfy, {","});
  add_prefix(900, OpType::fy, {"not", "\\+"});
  add_infix(700, OpType::xfx,
            {"=", "\\=", "==", "\\==", "<", ">", "=<", ">=", "@<", "@>", "@=<",
             "@>=", "=..", "is", "=:=", "=\\="});
  add_infix(500, OpType::yfx, {"+", "-", "/\\", "\\/", "xor"});
  add_infix(400, OpType::yfx, {"/", "*", "//", "rem", "mod", "div", "<<", ">>"});
  add_infix(200, OpType::xfx, {"**"});
  add_infix(200, OpType::xfy, {":", "^"});
  add_prefix(200, OpType::fy, {"-", "+", "\\"});
}

const OpTable& OpTable::standard() {
  static const OpTable table;
  return table;
}

std::optional<OpDef> OpTable::prefix(std::string_view name) const {
  auto it = prefix_.find(name);
  if (it == prefix_.end()) return std::nullopt;
  return it->second;
}

std::optional<OpDef> OpTable::infix(std::string_view name) const {
  auto it = infix_.find(name);
  if (it == infix_.end()) return std::nullopt;
  return it->second;
}

}  // namespace exlibris

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

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace exlibris {

enum class OpType { xfx, xfy, yfx, fy, fx };

struct OpDef {
  int priority;
  OpType type;

  /// Maximum priority of the left operand (infix only).
  int left_max() const { return type == OpType::yfx ? priority : priority - 1; }
  /// Maximum priority of the right (or only) operand.
  int right_max() const {
    return (type == OpType::xfy || type == OpType::fy) ? priority : priority - 1;
  }
};

/// The fixed operator table. Source files cannot extend it.
class OpTable {
 public:
  static const OpTable& standard();

  std::optional<OpDef> prefix(std::string_view name) const;
  std::optional<OpDef> infix(std::string_view name) const;
  bool is_operator(std::string_view name) const {
    return prefix(name) || infix(name);
  }

 private:
  OpTable();

  std::map<std::string, OpDef, std::less<>> prefix_;
  std::map<std::string, OpDef, std::less<>> infix_;
};

}  // namespace exlibris

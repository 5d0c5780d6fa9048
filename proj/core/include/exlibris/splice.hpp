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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "exlibris/error.hpp"

namespace exlibris {

/// Replace bytes [begin, end) with `replacement`. begin == end inserts.
struct Edit {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string replacement;

  bool operator==(const Edit&) const = default;
};

struct EditError : Error {
  using Error::Error;
};

/// Applies non-overlapping edits; all bytes outside edit ranges are copied
/// unchanged. Insertions at the same offset keep their list order. Throws
/// EditError on overlapping or out-of-range edits.
std::string splice(std::string_view text, std::vector<Edit> edits);

}  // namespace exlibris

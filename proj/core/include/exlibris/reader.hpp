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

#include <string>
#include <string_view>
#include <vector>

#include "exlibris/term.hpp"

namespace exlibris {

// Term reader for the subset of Prolog syntax found in library sources:
// atoms (plain, symbolic, quoted), integers, variables, compounds, lists and
// the fixed operator table. Not supported: floats, {}-terms, 0'c, back-quoted
// text, operator declarations. Double-quoted text is read as an atom.
//
// Quoted atoms never act as operators.

/// Reads every clause of `text` in order. `file` is only used in errors.
/// Throws SyntaxError.
std::vector<SourceTerm> read_terms(std::string_view text, const std::string& file = {});

/// Reads exactly one term; the terminating period is optional.
Term parse_term(std::string_view text);

}  // namespace exlibris

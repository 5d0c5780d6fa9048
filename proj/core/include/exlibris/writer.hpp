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

#include "exlibris/term.hpp"

namespace exlibris {

/// Atom text as it must appear in source to read back as the same atom.
std::string quote_atom(std::string_view text);

/// Canonical rendering without terminating period, e.g. "member/2".
std::string render_term(const Term& term);

/// Clause rendering in Index.pl house style, e.g.
/// "index( maplist, 3, any, user, 'meta/maplist' )." A leading `:-` becomes
/// ":- " followed by the body in the same style.
std::string render_clause(const Term& term);

}  // namespace exlibris

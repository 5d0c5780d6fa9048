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

#include "exlibris/term.hpp"

#include <stdexcept>

namespace exlibris {

Term Term::atom(std::string text) { return Term(Kind::atom, std::move(text), 0, {}); }

Term Term::integer(std::int64_t value) { return Term(Kind::integer, {}, value, {}); }

Term Term::variable(std::string name) {
  return Term(Kind::variable, std::move(name), 0, {});
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) {
    throw std::invalid_argument("compound term '" + functor + "' needs arguments");
  }
  return Term(Kind::compound, std::move(functor), 0, std::move(args));
}

Term Term::list(std::vector<Term> items) { return list(std::move(items), nil()); }

Term Term::list(std::vector<Term> items, Term tail) {
  Term out = std::move(tail);
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    out = compound(".", {std::move(*it), std::move(out)});
  }
  return out;
}

std::optional<std::vector<Term>> Term::list_items() const {
  std::vector<Term> items;
  const Term* cur = this;
  while (cur->is_cons()) {
    items.push_back(cur->args_[0]);
    cur = &cur->args_[1];
  }
  if (!cur->is_nil()) return std::nullopt;
  return items;
}

}  // namespace exlibris

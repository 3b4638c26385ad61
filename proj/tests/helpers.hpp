#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "span2/finset.hpp"

namespace helpers {

using span2::Elem;
using span2::FinMor;
using span2::FinObj;

inline FinObj obj(std::initializer_list<const char*> names) {
  std::vector<Elem> elems;
  for (const char* name : names) elems.push_back(Elem::atom(name));
  return FinObj(std::move(elems));
}

inline FinObj labeled(std::initializer_list<const char*> names,
                      std::string label) {
  std::vector<Elem> elems;
  for (const char* name : names) elems.push_back(Elem::atom(name));
  return FinObj(std::move(elems), std::move(label));
}

// A morphism between atom-built objects, written as name pairs.
inline FinMor fn(const FinObj& dom, const FinObj& cod,
                 std::initializer_list<std::pair<const char*, const char*>>
                     entries) {
  std::map<Elem, Elem> table;
  for (const auto& [from, to] : entries) {
    table.emplace(Elem::atom(from), Elem::atom(to));
  }
  return FinMor(dom, cod, std::move(table));
}

}  // namespace helpers

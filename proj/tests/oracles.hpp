// Test-only brute-force oracles. Everything here enumerates exhaustively
// and stays independent of the construction paths it checks.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "span2/finset.hpp"
#include "span2/spans.hpp"

namespace oracle {

using span2::Elem;
using span2::FinMor;
using span2::FinObj;

// Every total function dom → cod, |cod|^|dom| of them.
inline std::vector<FinMor> all_maps(const FinObj& dom, const FinObj& cod) {
  std::vector<FinMor> out;
  if (dom.empty()) {
    out.emplace_back(dom, cod, std::map<Elem, Elem>{});
    return out;
  }
  if (cod.empty()) return out;
  std::vector<std::size_t> pick(dom.size(), 0);
  while (true) {
    std::map<Elem, Elem> table;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      table.emplace(dom.elements()[i], cod.elements()[pick[i]]);
    }
    out.emplace_back(dom, cod, std::move(table));
    std::size_t i = dom.size();
    while (i-- > 0) {
      if (++pick[i] < cod.size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

// The pairs (x, y) with f(x) = g(y): the by-hand pullback apex.
inline std::vector<std::pair<Elem, Elem>> product_filter(const FinMor& f,
                                                         const FinMor& g) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& x : f.dom().elements()) {
    for (const auto& y : g.dom().elements()) {
      if (f(x) == g(y)) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

// Maps u : W → apex with p∘u = h and q∘u = k, by exhaustive enumeration.
inline std::vector<FinMor> commuting_maps(const FinObj& w, const FinObj& apex,
                                          const FinMor& p, const FinMor& q,
                                          const FinMor& h, const FinMor& k) {
  std::vector<FinMor> found;
  for (const auto& u : all_maps(w, apex)) {
    if (span2::compose(p, u) == h && span2::compose(q, u) == k) {
      found.push_back(u);
    }
  }
  return found;
}

// Maps u : apex → w with u∘p = h and u∘q = k (the cocone direction).
inline std::vector<FinMor> co_commuting_maps(const FinObj& apex,
                                             const FinObj& w, const FinMor& p,
                                             const FinMor& q, const FinMor& h,
                                             const FinMor& k) {
  std::vector<FinMor> found;
  for (const auto& u : all_maps(apex, w)) {
    if (span2::compose(u, p) == h && span2::compose(u, q) == k) {
      found.push_back(u);
    }
  }
  return found;
}

// All bijections between two equal-sized objects.
inline std::vector<FinMor> all_bijections(const FinObj& a, const FinObj& b) {
  std::vector<FinMor> out;
  if (a.size() != b.size()) return out;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::map<Elem, Elem> table;
    for (std::size_t i = 0; i < a.size(); ++i) {
      table.emplace(a.elements()[i], b.elements()[perm[i]]);
    }
    out.emplace_back(a, b, std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Is there an iso phi : X1 → X2 (in the backend's orientation) with
// to_src = to_src'∘phi and to_dst = to_dst'∘phi? The defining property of
// witness isomorphism, searched directly.
template <typename Cat>
bool witness_iso_exists(const span2::TwoCellWitness<Cat>& w1,
                        const span2::TwoCellWitness<Cat>& w2) {
  // The stored function of a Cat-arrow X1 → X2 runs from Cat::dom's carrier
  // to Cat::cod's; build candidates accordingly.
  const bool reversed = !std::is_same_v<Cat, span2::FinSetCat>;
  const FinObj& from = reversed ? w2.apex : w1.apex;
  const FinObj& to = reversed ? w1.apex : w2.apex;
  for (const auto& phi : all_bijections(from, to)) {
    if (Cat::compose(w2.to_src, phi) == w1.to_src &&
        Cat::compose(w2.to_dst, phi) == w1.to_dst) {
      return true;
    }
  }
  return false;
}

// Independent union-find, for predicting pushout and gluing results.
class Dsu {
 public:
  explicit Dsu(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    return parent_[x] == x ? x : (parent_[x] = find(parent_[x]));
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(b)] = find(a); }
  std::size_t classes() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (find(i) == i) ++n;
    }
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Expected pushout apex size: union-find over the tagged disjoint union.
inline std::size_t pushout_size(const FinMor& f, const FinMor& g) {
  const auto& left = f.cod().elements();
  const auto& right = g.cod().elements();
  auto index_left = [&](const Elem& e) {
    return static_cast<std::size_t>(
        std::lower_bound(left.begin(), left.end(), e) - left.begin());
  };
  auto index_right = [&](const Elem& e) {
    return left.size() +
           static_cast<std::size_t>(
               std::lower_bound(right.begin(), right.end(), e) - right.begin());
  };
  Dsu dsu(left.size() + right.size());
  for (const auto& b : f.dom().elements()) {
    dsu.unite(index_left(f(b)), index_right(g(b)));
  }
  return dsu.classes();
}

}  // namespace oracle

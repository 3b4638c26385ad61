#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "span2/rng.hpp"
#include "span2/spans.hpp"

namespace span2 {

// Deterministic random instances for the law checkers. Object sizes are
// uniform in 0..max_size (empty and singleton objects are the likeliest bug
// sites, so they stay in the distribution) and tables are uniform.

inline FinObj random_object(Rng& rng, std::size_t max_size,
                            const std::string& prefix) {
  std::size_t n = rng.pick_size(max_size);
  std::vector<Elem> elems;
  elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(Elem::atom(prefix + std::to_string(i)));
  }
  return FinObj(std::move(elems));
}

inline FinMor random_fn(Rng& rng, const FinObj& dom, const FinObj& cod) {
  if (cod.empty() && !dom.empty()) {
    throw InvalidValue("no function into an empty codomain");
  }
  std::map<Elem, Elem> table;
  for (const auto& x : dom.elements()) {
    table.emplace(x, cod.elements()[rng.below(cod.size())]);
  }
  return FinMor(dom, cod, std::move(table));
}

// A random arrow dom → cod in the backend's orientation.
template <typename Cat>
typename Cat::Mor random_mor(Rng& rng, const typename Cat::Obj& dom_obj,
                             const typename Cat::Obj& cod_obj) {
  if constexpr (std::is_same_v<Cat, FinSetCat>) {
    return random_fn(rng, dom_obj, cod_obj);
  } else {
    return random_fn(rng, cod_obj, dom_obj);
  }
}

// A random span between the given feet, apex size uniform over the sizes
// for which both legs can exist.
template <typename Cat>
Span<Cat> random_span(Rng& rng, const typename Cat::Obj& a,
                      const typename Cat::Obj& b, std::size_t max_apex,
                      const std::string& prefix) {
  std::vector<std::size_t> valid;
  for (std::size_t n = 0; n <= max_apex; ++n) {
    std::vector<Elem> probe;
    for (std::size_t i = 0; i < n; ++i) {
      probe.push_back(Elem::atom(std::to_string(i)));
    }
    FinObj candidate(std::move(probe));
    if (Cat::mor_exists(candidate, a) && Cat::mor_exists(candidate, b)) {
      valid.push_back(n);
    }
  }
  if (valid.empty()) {
    throw InvalidValue("no span apex size admits legs onto these feet");
  }
  std::size_t n = valid[rng.below(valid.size())];
  std::vector<Elem> elems;
  elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(Elem::atom(prefix + std::to_string(i)));
  }
  FinObj apex(std::move(elems));
  typename Cat::Mor left = random_mor<Cat>(rng, apex, a);
  typename Cat::Mor right = random_mor<Cat>(rng, apex, b);
  return Span<Cat>::make(a, b, apex, std::move(left), std::move(right));
}

// A random commuting witness between two parallel spans. The constraints
// differ by orientation: legs out of the witness apex pick compatible
// pairs pointwise, legs into it are solved by gluing the constrained
// variables with union-find first.
template <typename Cat>
TwoCell<Cat> random_two_cell(Rng& rng, const Span<Cat>& s, const Span<Cat>& t,
                             std::size_t max_apex, const std::string& prefix) {
  auto named = [&prefix](std::size_t n) {
    std::vector<Elem> elems;
    elems.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      elems.push_back(Elem::atom(prefix + std::to_string(i)));
    }
    return FinObj(std::move(elems));
  };

  if constexpr (std::is_same_v<Cat, FinSetCat>) {
    std::vector<std::pair<Elem, Elem>> compatible;
    for (const auto& es : s.apex.elements()) {
      for (const auto& et : t.apex.elements()) {
        if (s.left_leg(es) == t.left_leg(et) &&
            s.right_leg(es) == t.right_leg(et)) {
          compatible.emplace_back(es, et);
        }
      }
    }
    std::size_t n = compatible.empty() ? 0 : rng.pick_size(max_apex);
    FinObj apex = named(n);
    std::map<Elem, Elem> to_src;
    std::map<Elem, Elem> to_dst;
    for (const auto& x : apex.elements()) {
      const auto& [es, et] = compatible[rng.below(compatible.size())];
      to_src.emplace(x, es);
      to_dst.emplace(x, et);
    }
    return TwoCell<Cat>::from_witness(TwoCellWitness<Cat>::make(
        s, t, apex, FinMor(apex, s.apex, std::move(to_src)),
        FinMor(apex, t.apex, std::move(to_dst))));
  } else {
    // Variables: elements of both apexes; the commuting squares force equal
    // values on the pairs hit by a common foot element.
    const auto& se = s.apex.elements();
    const auto& te = t.apex.elements();
    std::vector<std::size_t> parent(se.size() + te.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    auto unite = [&](std::size_t a2, std::size_t b2) {
      parent[find(b2)] = find(a2);
    };
    auto s_index = [&](const Elem& e) {
      return static_cast<std::size_t>(
          std::lower_bound(se.begin(), se.end(), e) - se.begin());
    };
    auto t_index = [&](const Elem& e) {
      return se.size() + static_cast<std::size_t>(std::lower_bound(
                             te.begin(), te.end(), e) - te.begin());
    };
    for (const auto& a : s.left_foot.elements()) {
      unite(s_index(s.left_leg.table().at(a)),
            t_index(t.left_leg.table().at(a)));
    }
    for (const auto& b : s.right_foot.elements()) {
      unite(s_index(s.right_leg.table().at(b)),
            t_index(t.right_leg.table().at(b)));
    }

    bool carriers_empty = se.empty() && te.empty();
    std::size_t n = carriers_empty
                        ? rng.pick_size(max_apex)
                        : 1 + rng.pick_size(max_apex > 0 ? max_apex - 1 : 0);
    FinObj apex = named(n);

    std::map<std::size_t, Elem> value_of_root;
    auto value = [&](std::size_t var) {
      std::size_t root = find(var);
      auto it = value_of_root.find(root);
      if (it == value_of_root.end()) {
        it = value_of_root
                 .emplace(root, apex.elements()[rng.below(apex.size())])
                 .first;
      }
      return it->second;
    };

    std::map<Elem, Elem> from_src;
    for (std::size_t i = 0; i < se.size(); ++i) {
      from_src.emplace(se[i], value(i));
    }
    std::map<Elem, Elem> from_dst;
    for (std::size_t i = 0; i < te.size(); ++i) {
      from_dst.emplace(te[i], value(se.size() + i));
    }
    return TwoCell<Cat>::from_witness(TwoCellWitness<Cat>::make(
        s, t, apex, FinMor(s.apex, apex, std::move(from_src)),
        FinMor(t.apex, apex, std::move(from_dst))));
  }
}

}  // namespace span2

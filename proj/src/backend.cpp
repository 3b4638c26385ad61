#include "span2/backend.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "span2/errors.hpp"

namespace span2 {

namespace {

Elem tag(std::size_t position, const Elem& e) {
  return Elem::tuple({{std::to_string(position), e}});
}

Elem encode_fiber(const std::vector<Elem>& fiber) {
  std::vector<Elem::Slot> slots;
  slots.reserve(fiber.size());
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    slots.emplace_back(std::to_string(i), fiber[i]);
  }
  return Elem::tuple(std::move(slots));
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(b)] = find(a); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FinSetCat::Pullback FinSetCat::pullback(const Mor& f, const Mor& g) {
  PullbackResult pb = span2::pullback(f, g);
  return Pullback{std::move(pb.apex), std::move(pb.to_left),
                  std::move(pb.to_right)};
}

FinSetCat::Mor FinSetCat::mediate(const Mor& f, const Mor& g, const Mor& h,
                                  const Mor& k) {
  return pullback_mediate(f, g, h, k);
}

FinSetCat::ChainLimit FinSetCat::chain_limit(
    const std::vector<std::pair<Mor, Mor>>& spans) {
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (!(spans[i].first.dom() == spans[i].second.dom())) {
      throw NotComposable("chain entry " + std::to_string(i) +
                          " has legs with different apexes");
    }
    if (i + 1 < spans.size() &&
        !(spans[i].second.cod() == spans[i + 1].first.cod())) {
      throw NotComposable("chain feet mismatch between entries " +
                          std::to_string(i) + " and " + std::to_string(i + 1));
    }
  }

  std::vector<Elem> apex_elems;
  std::vector<std::map<Elem, Elem>> leg_tables(spans.size());

  bool any_empty = false;
  for (const auto& s : spans) {
    if (s.first.dom().empty()) any_empty = true;
  }

  std::vector<std::size_t> counter(spans.size(), 0);
  bool exhausted = any_empty;
  while (!exhausted) {
    std::vector<const Elem*> picks(spans.size());
    for (std::size_t i = 0; i < spans.size(); ++i) {
      picks[i] = &spans[i].first.dom().elements()[counter[i]];
    }
    bool consistent = true;
    for (std::size_t i = 0; i + 1 < spans.size(); ++i) {
      if (!(spans[i].second(*picks[i]) == spans[i + 1].first(*picks[i + 1]))) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      std::vector<Elem::Slot> slots;
      slots.reserve(spans.size());
      for (std::size_t i = 0; i < spans.size(); ++i) {
        slots.emplace_back(std::to_string(i), *picks[i]);
      }
      Elem t = Elem::tuple(std::move(slots));
      for (std::size_t i = 0; i < spans.size(); ++i) {
        leg_tables[i].emplace(t, *picks[i]);
      }
      apex_elems.push_back(std::move(t));
    }

    exhausted = true;
    for (std::size_t i = spans.size(); i-- > 0;) {
      if (++counter[i] < spans[i].first.dom().size()) {
        exhausted = false;
        break;
      }
      counter[i] = 0;
    }
    if (spans.empty()) break;  // the single empty tuple is already emitted
  }

  FinObj apex(std::move(apex_elems));
  ChainLimit result{apex, {}};
  result.legs.reserve(spans.size());
  for (std::size_t i = 0; i < spans.size(); ++i) {
    result.legs.emplace_back(apex, spans[i].first.dom(),
                             std::move(leg_tables[i]));
  }
  return result;
}

Signature FinSetCat::witness_signature(const Mor& to_src, const Mor& to_dst) {
  Signature sig;
  sig.reserve(to_src.dom().size());
  for (const auto& x : to_src.dom().elements()) {
    sig.emplace_back(to_src(x), to_dst(x));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

OpFinSetCat::Pullback OpFinSetCat::pullback(const Mor& f, const Mor& g) {
  PushoutResult po = span2::pushout(f, g);
  return Pullback{std::move(po.apex), std::move(po.from_left),
                  std::move(po.from_right)};
}

OpFinSetCat::Mor OpFinSetCat::mediate(const Mor& f, const Mor& g, const Mor& h,
                                      const Mor& k) {
  return pushout_mediate(f, g, h, k);
}

OpFinSetCat::ChainLimit OpFinSetCat::chain_limit(
    const std::vector<std::pair<Mor, Mor>>& spans) {
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (!(spans[i].first.cod() == spans[i].second.cod())) {
      throw NotComposable("chain entry " + std::to_string(i) +
                          " has legs with different apexes");
    }
    if (i + 1 < spans.size() &&
        !(spans[i].second.dom() == spans[i + 1].first.dom())) {
      throw NotComposable("chain feet mismatch between entries " +
                          std::to_string(i) + " and " + std::to_string(i + 1));
    }
  }

  // Tagged disjoint union of the apexes.
  std::vector<Elem> tagged;
  std::map<Elem, std::size_t> index_of;
  std::vector<std::size_t> offsets(spans.size());
  for (std::size_t i = 0; i < spans.size(); ++i) {
    offsets[i] = tagged.size();
    for (const auto& s : spans[i].first.cod().elements()) {
      index_of.emplace(tag(i, s), tagged.size());
      tagged.push_back(tag(i, s));
    }
  }

  // Glue along the middle feet.
  UnionFind uf(tagged.size());
  for (std::size_t i = 0; i + 1 < spans.size(); ++i) {
    for (const auto& b : spans[i].second.dom().elements()) {
      uf.unite(index_of.at(tag(i, spans[i].second(b))),
               index_of.at(tag(i + 1, spans[i + 1].first(b))));
    }
  }

  std::map<std::size_t, Elem> least_of_root;
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    std::size_t root = uf.find(i);
    auto it = least_of_root.find(root);
    if (it == least_of_root.end() || tagged[i] < it->second) {
      least_of_root.insert_or_assign(root, tagged[i]);
    }
  }

  std::vector<Elem> apex_elems;
  apex_elems.reserve(least_of_root.size());
  for (const auto& [root, least] : least_of_root) {
    apex_elems.push_back(Elem::class_rep(least));
  }
  FinObj apex(std::move(apex_elems));

  ChainLimit result{apex, {}};
  result.legs.reserve(spans.size());
  for (std::size_t i = 0; i < spans.size(); ++i) {
    std::map<Elem, Elem> table;
    for (const auto& s : spans[i].first.cod().elements()) {
      table.emplace(
          s, Elem::class_rep(least_of_root.at(uf.find(index_of.at(tag(i, s))))));
    }
    // In this category the leg apex → S_i is the injection S_i → classes.
    result.legs.emplace_back(spans[i].first.cod(), apex, std::move(table));
  }
  return result;
}

Signature OpFinSetCat::witness_signature(const Mor& to_src, const Mor& to_dst) {
  std::map<Elem, std::vector<Elem>> src_fibers;
  std::map<Elem, std::vector<Elem>> dst_fibers;
  const FinObj& apex = to_src.cod();
  for (const auto& x : apex.elements()) {
    src_fibers[x];
    dst_fibers[x];
  }
  for (const auto& [s, x] : to_src.table()) src_fibers[x].push_back(s);
  for (const auto& [t, x] : to_dst.table()) dst_fibers[x].push_back(t);

  Signature sig;
  sig.reserve(apex.size());
  for (const auto& x : apex.elements()) {
    sig.emplace_back(encode_fiber(src_fibers.at(x)),
                     encode_fiber(dst_fibers.at(x)));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace span2

#include "span2/finset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "span2/errors.hpp"

namespace span2 {

namespace {

const char* kInl = "inl";
const char* kInr = "inr";

Elem tag(const char* side, const Elem& e) {
  return Elem::tuple({{side, e}});
}

// Plain union-find over indices; the quotient step of the pushout.
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

  // Returns true when the two classes were distinct.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FinObj::FinObj(std::vector<Elem> elements, std::optional<std::string> label)
    : elements_(std::move(elements)), label_(std::move(label)) {
  std::sort(elements_.begin(), elements_.end());
  auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end()) {
    throw InvalidValue("object has duplicate element " + dup->str());
  }
}

bool FinObj::contains(const Elem& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::string FinObj::str() const {
  std::ostringstream out;
  if (label_) out << *label_ << '=';
  out << '{';
  bool sep = false;
  for (const auto& e : elements_) {
    if (sep) out << ',';
    sep = true;
    out << e.str();
  }
  out << '}';
  return out.str();
}

FinMor::FinMor(FinObj dom, FinObj cod, std::map<Elem, Elem> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  for (const auto& x : dom_.elements()) {
    auto it = table_.find(x);
    if (it == table_.end()) {
      throw InvalidValue("table is not total: no entry for " + x.str());
    }
    if (!cod_.contains(it->second)) {
      throw InvalidValue("table sends " + x.str() + " to " + it->second.str() +
                         ", which lies outside the codomain");
    }
  }
  if (table_.size() != dom_.size()) {
    for (const auto& [k, v] : table_) {
      if (!dom_.contains(k)) {
        throw InvalidValue("table has entry for " + k.str() +
                           ", which lies outside the domain");
      }
    }
  }
}

const Elem& FinMor::operator()(const Elem& x) const {
  auto it = table_.find(x);
  if (it == table_.end()) {
    throw InvalidValue("morphism applied to " + x.str() +
                       " outside its domain");
  }
  return it->second;
}

FinMor compose(const FinMor& g, const FinMor& f) {
  if (!(f.cod() == g.dom())) {
    throw CompositionMismatch("cannot compose: cod of first factor differs from dom of second");
  }
  std::map<Elem, Elem> table;
  for (const auto& x : f.dom().elements()) table.emplace(x, g(f(x)));
  return FinMor(f.dom(), g.cod(), std::move(table));
}

FinMor identity(const FinObj& a) {
  std::map<Elem, Elem> table;
  for (const auto& x : a.elements()) table.emplace(x, x);
  return FinMor(a, a, std::move(table));
}

FinObj terminal() {
  return FinObj({Elem::atom("★")}, "1");
}

bool is_iso(const FinMor& f) {
  if (f.dom().size() != f.cod().size()) return false;
  std::vector<Elem> image;
  image.reserve(f.table().size());
  for (const auto& [x, y] : f.table()) image.push_back(y);
  std::sort(image.begin(), image.end());
  return std::unique(image.begin(), image.end()) == image.end() &&
         image.size() == f.cod().size();
}

FinMor inverse(const FinMor& f) {
  if (!is_iso(f)) throw NotInvertible("morphism is not a bijection");
  std::map<Elem, Elem> table;
  for (const auto& [x, y] : f.table()) table.emplace(y, x);
  return FinMor(f.cod(), f.dom(), std::move(table));
}

PullbackResult pullback(const FinMor& f, const FinMor& g) {
  if (!(f.cod() == g.cod())) {
    throw CompositionMismatch("pullback of a non-cospan: codomains differ");
  }
  std::vector<Elem> apex_elems;
  std::map<Elem, Elem> left_table;
  std::map<Elem, Elem> right_table;
  for (const auto& x : f.dom().elements()) {
    for (const auto& y : g.dom().elements()) {
      if (f(x) == g(y)) {
        Elem p = Elem::pair(x, y);
        left_table.emplace(p, x);
        right_table.emplace(p, y);
        apex_elems.push_back(std::move(p));
      }
    }
  }
  FinObj apex(std::move(apex_elems));
  return PullbackResult{apex, FinMor(apex, f.dom(), std::move(left_table)),
                        FinMor(apex, g.dom(), std::move(right_table))};
}

FinMor pullback_mediate(const FinMor& f, const FinMor& g, const FinMor& h,
                        const FinMor& k) {
  if (!(h.cod() == f.dom()) || !(k.cod() == g.dom()) || !(h.dom() == k.dom())) {
    throw CompositionMismatch("cone legs do not land on the cospan feet");
  }
  if (!(compose(f, h) == compose(g, k))) {
    throw NotACone("cone does not commute: f∘h ≠ g∘k");
  }
  PullbackResult pb = pullback(f, g);
  std::map<Elem, Elem> table;
  for (const auto& w : h.dom().elements()) {
    table.emplace(w, Elem::pair(h(w), k(w)));
  }
  return FinMor(h.dom(), pb.apex, std::move(table));
}

PushoutResult pushout(const FinMor& f, const FinMor& g) {
  if (!(f.dom() == g.dom())) {
    throw CompositionMismatch("pushout of a non-span: domains differ");
  }
  const auto& left = f.cod().elements();
  const auto& right = g.cod().elements();

  // Carrier: left elements first, then right elements.
  std::vector<Elem> tagged;
  tagged.reserve(left.size() + right.size());
  std::map<Elem, std::size_t> index_of;
  for (const auto& c : left) {
    index_of.emplace(tag(kInl, c), tagged.size());
    tagged.push_back(tag(kInl, c));
  }
  for (const auto& d : right) {
    index_of.emplace(tag(kInr, d), tagged.size());
    tagged.push_back(tag(kInr, d));
  }

  UnionFind uf(tagged.size());
  for (const auto& b : f.dom().elements()) {
    uf.unite(index_of.at(tag(kInl, f(b))), index_of.at(tag(kInr, g(b))));
  }

  // Name each class by its least tagged member.
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

  auto class_of = [&](const Elem& t) {
    return Elem::class_rep(least_of_root.at(uf.find(index_of.at(t))));
  };
  std::map<Elem, Elem> left_table;
  for (const auto& c : left) left_table.emplace(c, class_of(tag(kInl, c)));
  std::map<Elem, Elem> right_table;
  for (const auto& d : right) right_table.emplace(d, class_of(tag(kInr, d)));

  return PushoutResult{apex, FinMor(f.cod(), apex, std::move(left_table)),
                       FinMor(g.cod(), apex, std::move(right_table))};
}

FinMor pushout_mediate(const FinMor& f, const FinMor& g, const FinMor& h,
                       const FinMor& k) {
  if (!(h.dom() == f.cod()) || !(k.dom() == g.cod()) || !(h.cod() == k.cod())) {
    throw CompositionMismatch("cocone legs do not start at the span feet");
  }
  if (!(compose(h, f) == compose(k, g))) {
    throw NotACone("cocone does not commute: h∘f ≠ k∘g");
  }
  PushoutResult po = pushout(f, g);
  // Every apex element is class_rep of a tagged member, so the value of the
  // mediating map can be read off the representative; the cocone equation
  // makes it independent of the member chosen.
  std::map<Elem, Elem> table;
  for (const auto& cls : po.apex.elements()) {
    const Elem& least = cls.representative();
    const auto& slot = least.slots().front();
    table.emplace(cls, slot.first == kInl ? h(slot.second) : k(slot.second));
  }
  return FinMor(po.apex, h.cod(), std::move(table));
}

}  // namespace span2

#pragma once

#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace span2 {

// Structured element identifier. Atoms name user-supplied elements; pairs,
// tuples and merge-class representatives name elements of constructed
// objects (pullback pairs, limit tuples, pushout classes), so nested
// composites like (X ×_T Y) ×_U Z stay reproducible and printable.
//
// Immutable; copies share the underlying node.
class Elem {
 public:
  enum class Kind : unsigned char { Atom, Pair, Tuple, Class };

  using Slot = std::pair<std::string, Elem>;

  static Elem atom(std::string name);
  static Elem pair(Elem first, Elem second);
  static Elem tuple(std::vector<Slot> slots);
  static Elem class_rep(Elem least_member);

  Kind kind() const;

  const std::string& atom_name() const;                // Atom
  const Elem& first() const;                           // Pair
  const Elem& second() const;                          // Pair
  const std::vector<Slot>& slots() const;              // Tuple
  const Elem& representative() const;                  // Class

  // Lexicographic on (kind, content). A strict total order, so element
  // lists sort identically everywhere.
  std::strong_ordering operator<=>(const Elem& other) const;
  bool operator==(const Elem& other) const;

  std::string str() const;

 private:
  struct Node;
  explicit Elem(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace span2

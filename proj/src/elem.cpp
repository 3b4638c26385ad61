#include "span2/elem.hpp"

#include <sstream>

#include "span2/errors.hpp"

namespace span2 {

struct Elem::Node {
  Kind kind;
  std::string name;              // Atom
  std::vector<Slot> parts;       // Pair: two unlabeled slots; Tuple: as given;
                                 // Class: one unlabeled slot (the representative)
};

Elem Elem::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->name = std::move(name);
  return Elem(std::move(node));
}

Elem Elem::pair(Elem first, Elem second) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->parts.emplace_back(std::string(), std::move(first));
  node->parts.emplace_back(std::string(), std::move(second));
  return Elem(std::move(node));
}

Elem Elem::tuple(std::vector<Slot> slots) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Tuple;
  node->parts = std::move(slots);
  return Elem(std::move(node));
}

Elem Elem::class_rep(Elem least_member) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Class;
  node->parts.emplace_back(std::string(), std::move(least_member));
  return Elem(std::move(node));
}

Elem::Kind Elem::kind() const { return node_->kind; }

const std::string& Elem::atom_name() const {
  if (node_->kind != Kind::Atom) throw InvalidValue("atom_name() on a non-atom element");
  return node_->name;
}

const Elem& Elem::first() const {
  if (node_->kind != Kind::Pair) throw InvalidValue("first() on a non-pair element");
  return node_->parts[0].second;
}

const Elem& Elem::second() const {
  if (node_->kind != Kind::Pair) throw InvalidValue("second() on a non-pair element");
  return node_->parts[1].second;
}

const std::vector<Elem::Slot>& Elem::slots() const {
  if (node_->kind != Kind::Tuple) throw InvalidValue("slots() on a non-tuple element");
  return node_->parts;
}

const Elem& Elem::representative() const {
  if (node_->kind != Kind::Class) throw InvalidValue("representative() on a non-class element");
  return node_->parts[0].second;
}

std::strong_ordering Elem::operator<=>(const Elem& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (auto c = node_->kind <=> other.node_->kind; c != 0) return c;
  if (node_->kind == Kind::Atom) return node_->name <=> other.node_->name;
  const auto& a = node_->parts;
  const auto& b = other.node_->parts;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i].first <=> b[i].first; c != 0) return c;
    if (auto c = a[i].second <=> b[i].second; c != 0) return c;
  }
  return a.size() <=> b.size();
}

bool Elem::operator==(const Elem& other) const {
  return (*this <=> other) == 0;
}

std::string Elem::str() const {
  std::ostringstream out;
  switch (node_->kind) {
    case Kind::Atom:
      out << node_->name;
      break;
    case Kind::Pair:
      out << '(' << first().str() << ',' << second().str() << ')';
      break;
    case Kind::Tuple: {
      out << '{';
      bool sep = false;
      for (const auto& [label, value] : node_->parts) {
        if (sep) out << ',';
        sep = true;
        out << label << ':' << value.str();
      }
      out << '}';
      break;
    }
    case Kind::Class:
      out << '[' << representative().str() << ']';
      break;
  }
  return out.str();
}

}  // namespace span2

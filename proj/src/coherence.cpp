#include "span2/coherence.hpp"

namespace span2 {

std::string_view law_name(Law law) {
  switch (law) {
    case Law::VerticalAssoc:
      return "VerticalAssoc";
    case Law::VerticalUnits:
      return "VerticalUnits";
    case Law::Interchange:
      return "Interchange";
    case Law::HIdentityFunctoriality:
      return "HIdentityFunctoriality";
    case Law::AssociatorNaturality:
      return "AssociatorNaturality";
    case Law::Pentagon:
      return "Pentagon";
    case Law::UnitorNaturality:
      return "UnitorNaturality";
    case Law::Triangle:
      return "Triangle";
  }
  return "?";
}

std::string signature_str(const Signature& sig) {
  std::ostringstream out;
  out << '{';
  bool sep = false;
  for (const auto& [a, b] : sig) {
    if (sep) out << ',';
    sep = true;
    out << '(' << a.str() << ',' << b.str() << ')';
  }
  out << '}';
  return out.str();
}

namespace detail {

FinObj uniform_foot(Rng& rng, std::size_t pos, std::size_t max_obj) {
  static const char* kNames[] = {"a", "b", "c", "d", "e"};
  const char* prefix = pos < std::size(kNames) ? kNames[pos] : "f";
  return random_object(rng, max_obj, prefix);
}

}  // namespace detail

std::vector<AxiomReport> verify_bicategory(std::uint64_t seed,
                                           std::size_t max_obj,
                                           std::size_t trials) {
  detail::FootFn foot = [max_obj](Rng& rng, std::size_t pos, std::size_t) {
    return detail::uniform_foot(rng, pos, max_obj);
  };
  return detail::verify_in<FinSetCat>(seed, max_obj, trials, foot);
}

}  // namespace span2

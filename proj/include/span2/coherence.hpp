#pragma once

#include <cstdint>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "span2/generate.hpp"
#include "span2/spans.hpp"

namespace span2 {

// The eight laws the verifier exercises. Together with the existence of the
// structural cells they certify the bicategory axioms on generated data.
enum class Law {
  VerticalAssoc,
  VerticalUnits,
  Interchange,
  HIdentityFunctoriality,
  AssociatorNaturality,
  Pentagon,
  UnitorNaturality,
  Triangle,
};

inline constexpr Law kAllLaws[] = {
    Law::VerticalAssoc,       Law::VerticalUnits,
    Law::Interchange,         Law::HIdentityFunctoriality,
    Law::AssociatorNaturality, Law::Pentagon,
    Law::UnitorNaturality,    Law::Triangle,
};

std::string_view law_name(Law law);

// Pass/fail evidence for one law on one generated instance. The instance
// can be rebuilt from the seed and the size bounds recorded in the
// evidence string; on failure the evidence carries both signatures, which
// are the equality-bearing data.
struct AxiomReport {
  Law law;
  std::uint64_t instance_seed = 0;
  std::uint32_t trial = 0;
  bool passed = false;
  std::string evidence;
};

std::string signature_str(const Signature& sig);

// The associator component at (S, S', S''): the chosen limit L of the base
// zig-zag S → B ← S' → C ← S'', with mediating legs into the two
// parenthesized composites. Oriented from the right-parenthesized composite
// S×(S'×S'') to the left-parenthesized one (S×S')×S''; both legs are
// isomorphisms.
template <typename Cat>
TwoCell<Cat> associator(const Span<Cat>& s, const Span<Cat>& s1,
                        const Span<Cat>& s2) {
  if (!(s.right_foot == s1.left_foot) || !(s1.right_foot == s2.left_foot)) {
    throw NotComposable("associator needs a composable chain of three spans");
  }
  Span<Cat> inner_right = hcompose_spans(s1, s2);
  Span<Cat> src_span = hcompose_spans(s, inner_right);
  Span<Cat> inner_left = hcompose_spans(s, s1);
  Span<Cat> dst_span = hcompose_spans(inner_left, s2);

  auto lim = Cat::chain_limit({{s.left_leg, s.right_leg},
                               {s1.left_leg, s1.right_leg},
                               {s2.left_leg, s2.right_leg}});

  typename Cat::Mor into_inner_right =
      Cat::mediate(s1.right_leg, s2.left_leg, lim.legs[1], lim.legs[2]);
  typename Cat::Mor to_src = Cat::mediate(s.right_leg, inner_right.left_leg,
                                          lim.legs[0], into_inner_right);

  typename Cat::Mor into_inner_left =
      Cat::mediate(s.right_leg, s1.left_leg, lim.legs[0], lim.legs[1]);
  typename Cat::Mor to_dst = Cat::mediate(inner_left.right_leg, s2.left_leg,
                                          into_inner_left, lim.legs[2]);

  return TwoCell<Cat>::from_witness(TwoCellWitness<Cat>::make(
      std::move(src_span), std::move(dst_span), lim.apex, std::move(to_src),
      std::move(to_dst)));
}

// r_S : (I_A ; S) ⇒ S. Witness apex is S's own apex; the src leg is the
// canonical bijection onto the pullback along the identity, the dst leg is
// the identity. Note the naming: the right unitor absorbs the identity span
// on the LEFT foot, the left unitor on the RIGHT foot.
template <typename Cat>
TwoCell<Cat> right_unitor(const Span<Cat>& s) {
  Span<Cat> id_span = identity_span<Cat>(s.left_foot);
  Span<Cat> src_span = hcompose_spans(id_span, s);
  typename Cat::Mor to_src = Cat::mediate(id_span.right_leg, s.left_leg,
                                          s.left_leg, Cat::identity(s.apex));
  return TwoCell<Cat>::from_witness(
      TwoCellWitness<Cat>::make(std::move(src_span), s, s.apex,
                                std::move(to_src), Cat::identity(s.apex)));
}

// l_S : (S ; I_B) ⇒ S.
template <typename Cat>
TwoCell<Cat> left_unitor(const Span<Cat>& s) {
  Span<Cat> id_span = identity_span<Cat>(s.right_foot);
  Span<Cat> src_span = hcompose_spans(s, id_span);
  typename Cat::Mor to_src = Cat::mediate(s.right_leg, id_span.left_leg,
                                          Cat::identity(s.apex), s.right_leg);
  return TwoCell<Cat>::from_witness(
      TwoCellWitness<Cat>::make(std::move(src_span), s, s.apex,
                                std::move(to_src), Cat::identity(s.apex)));
}

// Builds the report for an expected 2-cell equality; the failure evidence
// prints both signatures.
template <typename Cat>
AxiomReport cells_equal_report(Law law, const TwoCell<Cat>& lhs,
                               const TwoCell<Cat>& rhs, std::string instance) {
  AxiomReport report;
  report.law = law;
  report.passed = two_cells_equal(lhs, rhs);
  std::ostringstream ev;
  ev << instance;
  if (!report.passed) {
    ev << " | unequal: lhs=" << signature_str(lhs.signature())
       << " rhs=" << signature_str(rhs.signature());
    if (!(lhs.src() == rhs.src()) || !(lhs.dst() == rhs.dst())) {
      ev << " (endpoints differ)";
    }
  }
  report.evidence = ev.str();
  return report;
}

// Naturality square of the associator at three horizontally composable
// 2-cells X : S ⇒ T, X' : S' ⇒ T', X'' : S'' ⇒ T''.
template <typename Cat>
AxiomReport check_associator_naturality(const TwoCell<Cat>& x,
                                        const TwoCell<Cat>& x1,
                                        const TwoCell<Cat>& x2,
                                        std::string instance = {}) {
  TwoCell<Cat> lhs = vcompose(associator(x.dst(), x1.dst(), x2.dst()),
                              hcompose_cells(x, hcompose_cells(x1, x2)));
  TwoCell<Cat> rhs = vcompose(hcompose_cells(hcompose_cells(x, x1), x2),
                              associator(x.src(), x1.src(), x2.src()));
  return cells_equal_report(Law::AssociatorNaturality, lhs, rhs,
                            std::move(instance));
}

// Mac Lane pentagon on a composable quadruple: the two-edge path equals the
// three-edge path, where the outer edges whisker an associator with an
// identity 2-cell.
template <typename Cat>
AxiomReport check_pentagon(const Span<Cat>& s, const Span<Cat>& s1,
                           const Span<Cat>& s2, const Span<Cat>& s3,
                           std::string instance = {}) {
  TwoCell<Cat> left_path =
      vcompose(associator(hcompose_spans(s, s1), s2, s3),
               associator(s, s1, hcompose_spans(s2, s3)));
  TwoCell<Cat> right_path = vcompose(
      hcompose_cells(associator(s, s1, s2), id_two_cell(s3)),
      vcompose(associator(s, hcompose_spans(s1, s2), s3),
               hcompose_cells(id_two_cell(s), associator(s1, s2, s3))));
  return cells_equal_report(Law::Pentagon, left_path, right_path,
                            std::move(instance));
}

// Triangle identity across an interior identity span.
template <typename Cat>
AxiomReport check_triangle(const Span<Cat>& s, const Span<Cat>& s1,
                           std::string instance = {}) {
  if (!(s.right_foot == s1.left_foot)) {
    throw NotComposable("triangle needs a composable pair of spans");
  }
  Span<Cat> mid = identity_span<Cat>(s.right_foot);
  TwoCell<Cat> lhs = vcompose(hcompose_cells(left_unitor(s), id_two_cell(s1)),
                              associator(s, mid, s1));
  TwoCell<Cat> rhs = hcompose_cells(id_two_cell(s), right_unitor(s1));
  return cells_equal_report(Law::Triangle, lhs, rhs, std::move(instance));
}

// Naturality squares of both unitors at a 2-cell X : S ⇒ T.
template <typename Cat>
AxiomReport check_unitor_naturality(const TwoCell<Cat>& x,
                                    std::string instance = {}) {
  Span<Cat> id_left = identity_span<Cat>(x.src().left_foot);
  Span<Cat> id_right = identity_span<Cat>(x.src().right_foot);

  AxiomReport right_report = cells_equal_report(
      Law::UnitorNaturality,
      vcompose(right_unitor(x.dst()), hcompose_cells(id_two_cell(id_left), x)),
      vcompose(x, right_unitor(x.src())), instance + " r-square");
  AxiomReport left_report = cells_equal_report(
      Law::UnitorNaturality,
      vcompose(left_unitor(x.dst()), hcompose_cells(x, id_two_cell(id_right))),
      vcompose(x, left_unitor(x.src())), instance + " l-square");

  AxiomReport report;
  report.law = Law::UnitorNaturality;
  report.passed = right_report.passed && left_report.passed;
  report.evidence = right_report.evidence + "; " + left_report.evidence;
  return report;
}

namespace detail {

// Makes the foot object at a given chain position; the verifier draws all
// feet uniformly, the cobordism demo pins the outer boundaries.
using FootFn =
    std::function<FinObj(Rng&, std::size_t pos, std::size_t chain_len)>;

FinObj uniform_foot(Rng& rng, std::size_t pos, std::size_t max_obj);

template <typename Cat>
std::vector<FinObj> make_feet(Rng& rng, std::size_t count,
                              const FootFn& foot) {
  std::vector<FinObj> feet;
  feet.reserve(count);
  for (std::size_t i = 0; i < count; ++i) feet.push_back(foot(rng, i, count));
  return feet;
}

template <typename Cat>
std::string sizes_str(const std::vector<FinObj>& feet,
                      const std::vector<Span<Cat>>& spans) {
  std::ostringstream out;
  out << "feet=[";
  for (std::size_t i = 0; i < feet.size(); ++i) {
    out << (i ? "," : "") << feet[i].size();
  }
  out << "] apexes=[";
  for (std::size_t i = 0; i < spans.size(); ++i) {
    out << (i ? "," : "") << spans[i].apex.size();
  }
  out << "]";
  return out.str();
}

// Runs one generated instance of one law and reports the outcome.
template <typename Cat>
AxiomReport run_law_trial(Law law, Rng& rng, std::size_t max_obj,
                          const FootFn& foot) {
  static const char* kApex[] = {"s", "t", "u", "v", "w"};
  auto spans_over = [&](const std::vector<FinObj>& feet, std::size_t parallel)
      -> std::vector<Span<Cat>> {
    std::vector<Span<Cat>> spans;
    for (std::size_t i = 0; i + 1 < feet.size(); ++i) {
      for (std::size_t j = 0; j < parallel; ++j) {
        spans.push_back(random_span<Cat>(
            rng, feet[i], feet[i + 1], max_obj,
            std::string(kApex[j]) + std::to_string(i) + "_"));
      }
    }
    return spans;
  };

  switch (law) {
    case Law::VerticalAssoc: {
      auto feet = make_feet<Cat>(rng, 2, foot);
      auto spans = spans_over(feet, 4);  // S, T, U, V parallel
      TwoCell<Cat> x = random_two_cell(rng, spans[0], spans[1], max_obj, "x");
      TwoCell<Cat> y = random_two_cell(rng, spans[1], spans[2], max_obj, "y");
      TwoCell<Cat> z = random_two_cell(rng, spans[2], spans[3], max_obj, "z");
      return cells_equal_report(law, vcompose(z, vcompose(y, x)),
                                vcompose(vcompose(z, y), x),
                                sizes_str(feet, spans));
    }
    case Law::VerticalUnits: {
      auto feet = make_feet<Cat>(rng, 2, foot);
      auto spans = spans_over(feet, 2);
      TwoCell<Cat> x = random_two_cell(rng, spans[0], spans[1], max_obj, "x");
      AxiomReport right = cells_equal_report(
          law, vcompose(x, id_two_cell(spans[0])), x, sizes_str(feet, spans));
      AxiomReport left = cells_equal_report(
          law, vcompose(id_two_cell(spans[1]), x), x, sizes_str(feet, spans));
      AxiomReport report;
      report.law = law;
      report.passed = right.passed && left.passed;
      report.evidence = right.evidence + "; " + left.evidence;
      return report;
    }
    case Law::Interchange: {
      auto feet = make_feet<Cat>(rng, 3, foot);
      auto spans = spans_over(feet, 3);  // S,T,U over (A,B); S',T',U' over (B,C)
      TwoCell<Cat> x = random_two_cell(rng, spans[0], spans[1], max_obj, "x");
      TwoCell<Cat> y = random_two_cell(rng, spans[1], spans[2], max_obj, "y");
      TwoCell<Cat> x1 = random_two_cell(rng, spans[3], spans[4], max_obj, "p");
      TwoCell<Cat> y1 = random_two_cell(rng, spans[4], spans[5], max_obj, "q");
      return cells_equal_report(
          law, hcompose_cells(vcompose(y, x), vcompose(y1, x1)),
          vcompose(hcompose_cells(y, y1), hcompose_cells(x, x1)),
          sizes_str(feet, spans));
    }
    case Law::HIdentityFunctoriality: {
      auto feet = make_feet<Cat>(rng, 3, foot);
      auto spans = spans_over(feet, 1);
      return cells_equal_report(
          law, hcompose_cells(id_two_cell(spans[0]), id_two_cell(spans[1])),
          id_two_cell(hcompose_spans(spans[0], spans[1])),
          sizes_str(feet, spans));
    }
    case Law::AssociatorNaturality: {
      auto feet = make_feet<Cat>(rng, 4, foot);
      auto spans = spans_over(feet, 2);
      TwoCell<Cat> x = random_two_cell(rng, spans[0], spans[1], max_obj, "x");
      TwoCell<Cat> x1 = random_two_cell(rng, spans[2], spans[3], max_obj, "y");
      TwoCell<Cat> x2 = random_two_cell(rng, spans[4], spans[5], max_obj, "z");
      return check_associator_naturality(x, x1, x2, sizes_str(feet, spans));
    }
    case Law::Pentagon: {
      auto feet = make_feet<Cat>(rng, 5, foot);
      auto spans = spans_over(feet, 1);
      return check_pentagon(spans[0], spans[1], spans[2], spans[3],
                            sizes_str(feet, spans));
    }
    case Law::UnitorNaturality: {
      auto feet = make_feet<Cat>(rng, 2, foot);
      auto spans = spans_over(feet, 2);
      TwoCell<Cat> x = random_two_cell(rng, spans[0], spans[1], max_obj, "x");
      return check_unitor_naturality(x, sizes_str(feet, spans));
    }
    case Law::Triangle: {
      auto feet = make_feet<Cat>(rng, 3, foot);
      auto spans = spans_over(feet, 1);
      return check_triangle(spans[0], spans[1], sizes_str(feet, spans));
    }
  }
  throw InvalidValue("unknown law");
}

// Evaluates every (law, trial) pair, fanning the laws out across threads;
// each instance derives its own seed, so the report list is identical no
// matter how the work is scheduled.
template <typename Cat>
std::vector<AxiomReport> verify_in(std::uint64_t seed, std::size_t max_obj,
                                   std::size_t trials, const FootFn& foot) {
  std::vector<std::future<std::vector<AxiomReport>>> parts;
  parts.reserve(std::size(kAllLaws));
  for (std::size_t law_idx = 0; law_idx < std::size(kAllLaws); ++law_idx) {
    parts.push_back(std::async(std::launch::async, [=]() {
      std::vector<AxiomReport> out;
      out.reserve(trials);
      for (std::size_t trial = 0; trial < trials; ++trial) {
        std::uint64_t instance_seed =
            Rng::derive(seed, (static_cast<std::uint64_t>(law_idx) << 32) |
                                  static_cast<std::uint64_t>(trial));
        Rng rng(instance_seed);
        AxiomReport report =
            run_law_trial<Cat>(kAllLaws[law_idx], rng, max_obj, foot);
        report.instance_seed = instance_seed;
        report.trial = static_cast<std::uint32_t>(trial);
        out.push_back(std::move(report));
      }
      return out;
    }));
  }
  std::vector<AxiomReport> reports;
  reports.reserve(std::size(kAllLaws) * trials);
  for (auto& part : parts) {
    for (auto& report : part.get()) reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace detail

// Generates `trials` deterministic random instances per law from `seed` and
// reports each check. An all-passed run over FinSet is the machine-checked
// certificate that the span construction satisfies the bicategory axioms at
// this scale. Independent checks may run concurrently; reports come back in
// (law, trial) order regardless.
std::vector<AxiomReport> verify_bicategory(std::uint64_t seed,
                                           std::size_t max_obj,
                                           std::size_t trials);

}  // namespace span2

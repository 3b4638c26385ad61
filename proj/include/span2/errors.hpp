#pragma once

#include <stdexcept>

namespace span2 {

// Base class for every failure the engine reports.
struct CategoryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dom/cod of arrows being composed do not line up.
struct CompositionMismatch : CategoryError {
  using CategoryError::CategoryError;
};

// Spans, cospans or 2-cells whose feet do not match.
struct NotComposable : CategoryError {
  using CategoryError::CategoryError;
};

// A claimed cone (or cocone) fails an edge equation.
struct NotACone : CategoryError {
  using CategoryError::CategoryError;
};

// A claimed span-of-spans witness fails one of its squares.
struct NotCommuting : CategoryError {
  using CategoryError::CategoryError;
};

// inverse() of a non-bijection, or inversion of a 2-cell without iso legs.
struct NotInvertible : CategoryError {
  using CategoryError::CategoryError;
};

// Diagram with dangling edge endpoints or edge morphisms off their nodes.
struct MalformedDiagram : CategoryError {
  using CategoryError::CategoryError;
};

// A value breaks a structural invariant (duplicate elements, partial table, ...).
struct InvalidValue : CategoryError {
  using CategoryError::CategoryError;
};

// The requested limit would enumerate more tuples than the configured bound.
struct LimitTooLarge : CategoryError {
  using CategoryError::CategoryError;
};

}  // namespace span2

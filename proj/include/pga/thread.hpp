#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pga/canonical.hpp"

namespace pga {

/// Deterministic behavior graph. Every state either terminates (Stop),
/// deadlocks (Dead), or performs an action and branches on its boolean
/// reply (Post).
struct RegularThread {
  enum class Kind : std::uint8_t { Stop, Dead, Post };

  struct State {
    Kind kind;
    std::string action;       // Post only
    std::size_t on_true = 0;  // Post only
    std::size_t on_false = 0; // Post only
  };

  std::vector<State> states;
  std::size_t root = 0;
};

bool well_formed(const RegularThread& t);

/// Behavior of the denoted word. Jumps are fused away; a finite word
/// behaves as if padded with an infinite tail of #0, so running past the
/// end deadlocks. At most one state per folded position plus shared
/// Stop/Dead states.
RegularThread extract(const CanonSpi& c);

/// Coarsest partition refinement; the result has pairwise non-bisimilar
/// states, numbered breadth-first from the root.
RegularThread minimize(const RegularThread& t);

/// Bisimilarity of the roots. Witness: a shortest reply sequence after
/// which the two sides observably differ.
Verdict thread_equal(const RegularThread& a, const RegularThread& b);

/// Right-hand side of a recursive equation.
struct ThreadExpr {
  enum class Tag : std::uint8_t { Stop, Dead, Var, Prefix, Diamond };

  Tag tag;
  std::string label;  // Var: variable name; Prefix/Diamond: action
  std::shared_ptr<const ThreadExpr> first;   // Prefix: continuation; Diamond: true branch
  std::shared_ptr<const ThreadExpr> second;  // Diamond: false branch
};

std::string to_string(const ThreadExpr& e);

struct EquationSystem {
  struct Equation {
    std::string variable;
    ThreadExpr rhs;
  };
  std::vector<Equation> equations;  // first equation defines the root
};

/// One equation per shared state; states referenced exactly once are
/// inlined, and prefix notation is used when both branches coincide.
/// Variables are numbered X0, X1, ... breadth-first from the root.
EquationSystem to_equations(const RegularThread& t);

std::string to_string(const EquationSystem& sys);

/// Graphviz rendering; node names are state indices, the root is drawn
/// with a double border.
std::string to_dot(const RegularThread& t);

}  // namespace pga

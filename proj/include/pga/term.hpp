#pragma once

#include <memory>
#include <vector>

#include "pga/instruction.hpp"

namespace pga {

/// Program term: primitive instructions composed with `;` and `^w`.
/// Values are immutable and cheap to copy; sharing subterms is safe.
class PgaTerm {
 public:
  enum class Tag : std::uint8_t { Prim, Concat, Omega };

  static PgaTerm prim(Instruction u);  // u must be primitive
  static PgaTerm concat(PgaTerm left, PgaTerm right);
  static PgaTerm omega(PgaTerm body);

  Tag tag() const noexcept;
  const Instruction& instruction() const;  // Prim only
  PgaTerm left() const;                    // Concat only
  PgaTerm right() const;                   // Concat only
  PgaTerm body() const;                    // Omega only

  // Exact tree shape.
  friend bool operator==(const PgaTerm& a, const PgaTerm& b);

 private:
  struct Node;
  explicit PgaTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Equality modulo re-association of `;`.
bool equal_modulo_assoc(const PgaTerm& a, const PgaTerm& b);

/// The `;`-spine of a term, left to right. Every element is Prim or Omega.
std::vector<PgaTerm> concat_units(const PgaTerm& t);

/// Builds a right-leaning concatenation. The vector must be nonempty.
PgaTerm concat_all(const std::vector<PgaTerm>& units);

/// Flat instruction sequence; repeat instructions may occur at any position.
struct LSeq {
  std::vector<Instruction> items;

  friend bool operator==(const LSeq&, const LSeq&) = default;
};

}  // namespace pga

#pragma once

#include <optional>
#include <string>

#include "pga/spi.hpp"

namespace pga {

enum class Relation : std::uint8_t { Spc, Sc, Thread };

std::string to_string(Relation r);

/// Result of an equivalence query. `witness` is present exactly when the
/// sides are unequal and describes where they differ.
struct Verdict {
  bool equal;
  Relation relation;
  std::optional<std::string> witness;
};

/// Smallest normal form denoting the same word: the period is replaced by
/// its primitive root, then the preperiod is shrunk by rotating the period
/// while their last instructions coincide. Finite forms are returned as is.
CanonSpi minimize_first(CanonSpi c);

/// Rewrites every jump so that none lands on another jump: chains are
/// composed into a single jump, chains that reach #0, run forever among
/// jumps, or leave the word collapse to #0, and counters of jumps in or
/// into the period are reduced to the least equivalent value. Jumps in a
/// finite word that point past its end are kept as composed.
CanonSpi second_canonical(const CanonSpi& c);

/// Alternates minimize_first and second_canonical to a fixpoint.
CanonSpi minimize_second(CanonSpi c);

/// Same instruction at every position. Witness: the first position where
/// the words differ.
Verdict decide_spc(const CanonSpi& a, const CanonSpi& b);

/// Equality up to jump chaining and jump-counter minimization. Witness:
/// the two distinct minimal normal forms.
Verdict decide_sc(const CanonSpi& a, const CanonSpi& b);

// Comparisons that also cover sequences outside the kernel. A non-kernel
// form only ever equals another non-kernel form.
Verdict decide_spc_l(const LCanon& a, const LCanon& b);
Verdict decide_sc_l(const LCanon& a, const LCanon& b);

/// Jump-chain resolution over the prefix of a non-kernel form; the
/// trailing repeater is untouched.
NotInK second_canonical_not_in_k(const NotInK& nk);

}  // namespace pga

#pragma once

// Deterministic random generators for programs, flat sequences and normal
// forms, plus random applications of the word and jump axioms used to
// manufacture pairs that are equal by construction.

#include <cstdint>
#include <random>
#include <vector>

#include "pga/spi.hpp"
#include "pga/term.hpp"

namespace pga::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n);                          // [0, n)
  std::size_t between(std::size_t lo, std::size_t hi);       // [lo, hi]
  bool chance(double p);

  Instruction instruction(std::size_t alphabet = 4, std::uint64_t max_jump = 8,
                          bool allow_halt = true);
  std::vector<Instruction> word(std::size_t len, std::size_t alphabet = 4,
                                std::uint64_t max_jump = 8);

  CanonSpi canon_spi(std::size_t max_pre = 8, std::size_t max_period = 6,
                     bool allow_finite = true);

  /// A different normal form denoting the same word (period powers and
  /// unrolling into the preperiod). Finite forms come back unchanged.
  CanonSpi same_spi_variant(const CanonSpi& c);

  PgaTerm pga_term(std::size_t budget = 8, std::size_t depth = 3);

  /// First canonical form with a covered repeater.
  LSeq kernel_lseq(std::size_t max_pre = 6, std::size_t max_period = 5);

  /// Arbitrary flat sequence; repeaters may sit anywhere and overshoot.
  LSeq any_lseq(std::size_t max_len = 10);

 private:
  std::mt19937_64 rng_;
};

struct LRewrite {
  LSeq seq;
  bool used_sc;  // a jump axiom was applied, not just a word axiom
};

/// One random axiom instance applied to the first canonical form of `s`.
/// With `allow_sc` false only the word axioms are used. When nothing is
/// applicable the sequence comes back unchanged.
LRewrite apply_random_axiom_l(const LSeq& s, Gen& g, bool allow_sc);

/// One random instance of the term axioms (re-association, period powers,
/// erasing after a repetition, rotating a repetition).
PgaTerm apply_random_axiom_pga(const PgaTerm& t, Gen& g);

}  // namespace pga::test

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pga/term.hpp"

namespace pga {

/// Semantic normal form of a program: the instruction word it denotes,
/// either finite (empty period) or eventually periodic (a preperiod
/// followed by a forever-repeated period).
///
/// Invariants: no repeat instruction occurs anywhere; when the period is
/// empty the preperiod is nonempty.
struct CanonSpi {
  std::vector<Instruction> preperiod;
  std::vector<Instruction> period;  // empty means the word is finite

  bool finite() const noexcept { return period.empty(); }

  friend bool operator==(const CanonSpi&, const CanonSpi&) = default;
};

/// A periodic normal form viewed in repeater notation: preperiod, then
/// period, then a repeater whose counter equals the period length.
struct KForm {
  CanonSpi body;  // period nonempty
};

/// A flat sequence whose repeater asks for more instructions than precede
/// it. Such a sequence denotes no instruction word; we keep the truncated
/// form and the shortfall.
struct NotInK {
  LSeq first_canonical;
  std::uint64_t deficit;
};

using LCanon = std::variant<CanonSpi, NotInK>;

/// Truncates at the leftmost repeater (everything to its right is
/// irrelevant); identity when no repeater occurs.
LSeq first_canonical_l(const LSeq& s);

CanonSpi to_canon_pga(const PgaTerm& t);
LCanon to_canon_l(const LSeq& s);

KForm to_k_form(CanonSpi periodic);
LSeq to_lseq(const CanonSpi& c);
PgaTerm to_pga_term(const CanonSpi& c);

/// First `len` instructions of the denoted word; shorter when the word is
/// finite and runs out.
std::vector<Instruction> unfold(const CanonSpi& c, std::size_t len);

/// Prefix length that decides equality of two eventually periodic words.
std::size_t oracle_compare_length(const CanonSpi& a, const CanonSpi& b);

/// Positionwise equality of the denoted words.
bool spi_equal_oracle(const CanonSpi& a, const CanonSpi& b);

/// Position arithmetic over a normal form: preperiod positions are fixed,
/// later positions fold back into the period.
class SpiView {
 public:
  explicit SpiView(const CanonSpi& c) : c_(&c) {}

  bool finite() const noexcept { return c_->finite(); }
  std::size_t preperiod_length() const noexcept { return c_->preperiod.size(); }
  std::size_t period_length() const noexcept { return c_->period.size(); }

  /// Number of distinct folded positions.
  std::size_t slot_count() const noexcept {
    return c_->preperiod.size() + c_->period.size();
  }

  bool in_range(std::uint64_t pos) const noexcept {
    return !finite() || pos < c_->preperiod.size();
  }

  std::uint64_t fold(std::uint64_t pos) const noexcept {
    const std::uint64_t k = c_->preperiod.size();
    if (pos < k || finite()) return pos;
    return k + (pos - k) % c_->period.size();
  }

  /// Instruction at a position; the position must be in range.
  const Instruction& at(std::uint64_t pos) const {
    const std::uint64_t f = fold(pos);
    const std::uint64_t k = c_->preperiod.size();
    return f < k ? c_->preperiod[f] : c_->period[f - k];
  }

 private:
  const CanonSpi* c_;
};

/// Outcome of following a jump chain.
struct ResolvedTarget {
  enum class Kind : std::uint8_t {
    Dead,  // reached #0 or an endless chain of jumps
    At,    // folded position of a non-jump instruction
    Past,  // first position beyond the end of a finite word
  };
  Kind kind;
  std::uint64_t position;
};

/// Follows jumps from `pos` until a non-jump instruction, #0, the end of a
/// finite word, or a cycle of jumps.
ResolvedTarget resolve_position(const SpiView& v, std::uint64_t pos);

}  // namespace pga

#include "pga/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>

#include "pga/printer.hpp"

namespace pga {
namespace {

// Shortest word w with word = w^m, found through the border length of the
// whole word.
std::vector<Instruction> primitive_root(std::vector<Instruction> word) {
  const std::size_t n = word.size();
  if (n < 2) return word;
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && !(word[i] == word[b])) b = border[b - 1];
    if (word[i] == word[b]) ++b;
    border[i] = b;
  }
  const std::size_t r = n - border[n - 1];
  if (n % r == 0) word.erase(word.begin() + static_cast<std::ptrdiff_t>(r), word.end());
  return word;
}

// Witness scans stop here; beyond it we fall back to printing the two
// normal forms instead of a position.
constexpr std::uint64_t kWitnessScanCap = 10'000'000;

struct Difference {
  std::uint64_t position;  // 0-based
  std::optional<Instruction> lhs, rhs;
};

std::optional<Difference> first_difference(const CanonSpi& a, const CanonSpi& b) {
  const SpiView va(a);
  const SpiView vb(b);
  const std::uint64_t bound =
      std::min<std::uint64_t>(oracle_compare_length(a, b), kWitnessScanCap);
  for (std::uint64_t pos = 0; pos < bound; ++pos) {
    const bool ia = va.in_range(pos);
    const bool ib = vb.in_range(pos);
    if (!ia && !ib) return std::nullopt;
    if (ia != ib || !(va.at(pos) == vb.at(pos))) {
      Difference d{pos, {}, {}};
      if (ia) d.lhs = va.at(pos);
      if (ib) d.rhs = vb.at(pos);
      return d;
    }
  }
  return std::nullopt;
}

std::string describe_side(const std::optional<Instruction>& u) {
  return u ? to_string(*u) : std::string("end of word");
}

Verdict equal_verdict(Relation r) { return {true, r, std::nullopt}; }

Verdict unequal_verdict(Relation r, std::string witness) {
  return {false, r, std::move(witness)};
}

}  // namespace

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Spc:
      return "spc";
    case Relation::Sc:
      return "sc";
    case Relation::Thread:
      return "thread";
  }
  return {};
}

CanonSpi minimize_first(CanonSpi c) {
  if (c.finite()) return c;
  c.period = primitive_root(std::move(c.period));
  // Rotating the last period instruction to the front absorbs an equal
  // trailing preperiod instruction; conjugates of a primitive word stay
  // primitive, so the root never needs recomputing.
  while (!c.preperiod.empty() && c.preperiod.back() == c.period.back()) {
    c.preperiod.pop_back();
    std::rotate(c.period.begin(), c.period.end() - 1, c.period.end());
  }
  return c;
}

CanonSpi second_canonical(const CanonSpi& c) {
  const SpiView v(c);
  const std::size_t k = c.preperiod.size();
  const std::size_t n = c.period.size();
  CanonSpi out = c;
  for (std::size_t j = 0; j < v.slot_count(); ++j) {
    const Instruction& u = v.at(j);
    if (!u.is_jump() || u.counter() == 0) continue;
    const ResolvedTarget r = resolve_position(v, j);
    std::uint64_t counter = 0;
    switch (r.kind) {
      case ResolvedTarget::Kind::Dead:
        counter = 0;
        break;
      case ResolvedTarget::Kind::Past:
        // Finite word, chain composed past the end; the jump stays inert.
        counter = r.position - j;
        break;
      case ResolvedTarget::Kind::At:
        if (!v.finite() && j >= k) {
          // Jump inside the period: least counter with the same target.
          counter = ((r.position - k) + n - (j - k)) % n;
          assert(counter != 0);
        } else {
          // Preperiod or finite word: folded targets already give the
          // least landing position at or beyond the period start.
          counter = r.position - j;
        }
        break;
    }
    Instruction& slot = j < k ? out.preperiod[j] : out.period[j - k];
    slot = Instruction::jump(counter);
  }
  return out;
}

CanonSpi minimize_second(CanonSpi c) {
  // Each round either shrinks the form or leaves it untouched; jump
  // normalization never changes the instruction count.
  for (;;) {
    CanonSpi next = second_canonical(minimize_first(c));
    if (next == c) return c;
    c = std::move(next);
  }
}

Verdict decide_spc(const CanonSpi& a, const CanonSpi& b) {
  if (minimize_first(a) == minimize_first(b)) return equal_verdict(Relation::Spc);
  if (const auto d = first_difference(a, b)) {
    return unequal_verdict(Relation::Spc,
                           "position " + std::to_string(d->position + 1) + ": " +
                               describe_side(d->lhs) + " vs " + describe_side(d->rhs));
  }
  return unequal_verdict(Relation::Spc,
                         "minimal forms differ: " + print(to_pga_term(minimize_first(a))) +
                             " vs " + print(to_pga_term(minimize_first(b))));
}

Verdict decide_sc(const CanonSpi& a, const CanonSpi& b) {
  const CanonSpi ma = minimize_second(a);
  const CanonSpi mb = minimize_second(b);
  if (ma == mb) return equal_verdict(Relation::Sc);
  return unequal_verdict(Relation::Sc,
                         "minimal second canonical forms differ: " +
                             print(to_pga_term(ma)) + " vs " + print(to_pga_term(mb)));
}

NotInK second_canonical_not_in_k(const NotInK& nk) {
  // The prefix before the repeater behaves as a finite word for jump
  // chains; nothing can chain onto or across the repeater.
  CanonSpi prefix;
  prefix.preperiod.assign(nk.first_canonical.items.begin(),
                          nk.first_canonical.items.end() - 1);
  prefix = second_canonical(prefix);
  NotInK out = nk;
  std::copy(prefix.preperiod.begin(), prefix.preperiod.end(),
            out.first_canonical.items.begin());
  return out;
}

namespace {

Verdict decide_l(const LCanon& a, const LCanon& b, Relation rel) {
  const bool ka = std::holds_alternative<CanonSpi>(a);
  const bool kb = std::holds_alternative<CanonSpi>(b);
  if (ka && kb) {
    const auto& ca = std::get<CanonSpi>(a);
    const auto& cb = std::get<CanonSpi>(b);
    return rel == Relation::Spc ? decide_spc(ca, cb) : decide_sc(ca, cb);
  }
  if (ka != kb)
    return unequal_verdict(rel,
                           "one side denotes an instruction word, the other lies "
                           "outside the kernel");
  // Two non-kernel forms: no axiom can touch the repeater or anything it
  // covers, so equality is literal identity of the (resolved) forms.
  NotInK na = std::get<NotInK>(a);
  NotInK nb = std::get<NotInK>(b);
  if (rel == Relation::Sc) {
    na = second_canonical_not_in_k(na);
    nb = second_canonical_not_in_k(nb);
  }
  if (na.first_canonical == nb.first_canonical) return equal_verdict(rel);
  return unequal_verdict(rel, "non-kernel forms differ: " + print(na.first_canonical) +
                                  " vs " + print(nb.first_canonical));
}

}  // namespace

Verdict decide_spc_l(const LCanon& a, const LCanon& b) {
  return decide_l(a, b, Relation::Spc);
}

Verdict decide_sc_l(const LCanon& a, const LCanon& b) {
  return decide_l(a, b, Relation::Sc);
}

}  // namespace pga

#include "pga/spi.hpp"

#include <numeric>
#include <stdexcept>

namespace pga {

LSeq first_canonical_l(const LSeq& s) {
  LSeq out;
  for (const Instruction& u : s.items) {
    out.items.push_back(u);
    if (u.kind() == InstrKind::Repeat) break;
  }
  return out;
}

CanonSpi to_canon_pga(const PgaTerm& t) {
  CanonSpi out;
  for (const PgaTerm& unit : concat_units(t)) {
    if (unit.tag() == PgaTerm::Tag::Prim) {
      out.preperiod.push_back(unit.instruction());
      continue;
    }
    // A repetition ends the word: whatever follows it is unreachable.
    CanonSpi body = to_canon_pga(unit.body());
    if (body.finite()) {
      out.period = std::move(body.preperiod);
    } else {
      out.preperiod.insert(out.preperiod.end(), body.preperiod.begin(),
                           body.preperiod.end());
      out.period = std::move(body.period);
    }
    break;
  }
  return out;
}

LCanon to_canon_l(const LSeq& s) {
  if (s.items.empty()) throw std::invalid_argument("empty sequence");
  LSeq fc = first_canonical_l(s);
  const Instruction& last = fc.items.back();
  if (last.kind() != InstrKind::Repeat)
    return CanonSpi{fc.items, {}};
  const std::uint64_t n = last.counter();
  const std::uint64_t k = fc.items.size() - 1;
  if (n > k) return NotInK{std::move(fc), n - k};
  CanonSpi c;
  c.preperiod.assign(fc.items.begin(), fc.items.begin() + (k - n));
  c.period.assign(fc.items.begin() + (k - n), fc.items.end() - 1);
  return c;
}

KForm to_k_form(CanonSpi periodic) {
  if (periodic.finite())
    throw std::invalid_argument("finite word has no repeater form");
  return KForm{std::move(periodic)};
}

LSeq to_lseq(const CanonSpi& c) {
  LSeq out;
  out.items = c.preperiod;
  if (!c.finite()) {
    out.items.insert(out.items.end(), c.period.begin(), c.period.end());
    out.items.push_back(Instruction::repeat(c.period.size()));
  }
  return out;
}

PgaTerm to_pga_term(const CanonSpi& c) {
  if (c.preperiod.empty() && c.period.empty())
    throw std::invalid_argument("empty word");
  std::vector<PgaTerm> units;
  units.reserve(c.preperiod.size() + 1);
  for (const Instruction& u : c.preperiod) units.push_back(PgaTerm::prim(u));
  if (!c.finite()) {
    std::vector<PgaTerm> body;
    body.reserve(c.period.size());
    for (const Instruction& u : c.period) body.push_back(PgaTerm::prim(u));
    units.push_back(PgaTerm::omega(concat_all(body)));
  }
  return concat_all(units);
}

std::vector<Instruction> unfold(const CanonSpi& c, std::size_t len) {
  const SpiView v(c);
  std::vector<Instruction> out;
  for (std::size_t pos = 0; pos < len && v.in_range(pos); ++pos)
    out.push_back(v.at(pos));
  return out;
}

std::size_t oracle_compare_length(const CanonSpi& a, const CanonSpi& b) {
  const std::size_t k1 = a.preperiod.size();
  const std::size_t k2 = b.preperiod.size();
  if (a.finite() && b.finite()) return std::max(k1, k2);
  if (a.finite() || b.finite()) return std::max(k1, k2) + 1;
  // Both words are periodic with period lcm(n1, n2) once past both
  // preperiods, so agreement on this prefix forces agreement everywhere.
  return k1 + k2 + 2 * std::lcm(a.period.size(), b.period.size());
}

bool spi_equal_oracle(const CanonSpi& a, const CanonSpi& b) {
  if (a.finite() != b.finite()) return false;
  if (a.finite()) return a.preperiod == b.preperiod;
  const std::size_t len = oracle_compare_length(a, b);
  const SpiView va(a);
  const SpiView vb(b);
  for (std::size_t pos = 0; pos < len; ++pos)
    if (!(va.at(pos) == vb.at(pos))) return false;
  return true;
}

ResolvedTarget resolve_position(const SpiView& v, std::uint64_t pos) {
  std::vector<char> seen(v.slot_count(), 0);
  std::uint64_t p = pos;
  for (;;) {
    if (!v.in_range(p)) return {ResolvedTarget::Kind::Past, p};
    const std::uint64_t f = v.fold(p);
    const Instruction& u = v.at(f);
    if (!u.is_jump()) return {ResolvedTarget::Kind::At, f};
    if (u.counter() == 0) return {ResolvedTarget::Kind::Dead, f};
    if (seen[f]) return {ResolvedTarget::Kind::Dead, f};
    seen[f] = 1;
    p = f + u.counter();
  }
}

}  // namespace pga

#include "pga/projection.hpp"

#include <stdexcept>
#include <utility>

namespace pga {

ProjectionReport pgla2pga(const LSeq& s) {
  if (s.items.empty()) throw std::invalid_argument("empty sequence");
  LSeq fc = first_canonical_l(s);
  const Instruction& last = fc.items.back();
  if (last.kind() != InstrKind::Repeat) {
    CanonSpi word{fc.items, {}};
    return {s, fc, true, 0, to_pga_term(word)};
  }
  const std::uint64_t n = last.counter();
  const std::uint64_t k = fc.items.size() - 1;
  if (n <= k) {
    CanonSpi c;
    c.preperiod.assign(fc.items.begin(), fc.items.begin() + (k - n));
    c.period.assign(fc.items.begin() + (k - n), fc.items.end() - 1);
    return {s, fc, true, 0, to_pga_term(c)};
  }
  // Too few instructions in front of the repeater: pad with #0 right
  // before it, so the whole padded block repeats.
  CanonSpi c;
  c.period.assign(fc.items.begin(), fc.items.end() - 1);
  c.period.insert(c.period.end(), n - k, Instruction::jump(0));
  return {s, fc, false, n - k, to_pga_term(c)};
}

KernelDiagnosis kernel_check(const LSeq& s) {
  if (s.items.empty()) throw std::invalid_argument("empty sequence");
  LSeq fc = first_canonical_l(s);
  const Instruction& last = fc.items.back();
  if (last.kind() != InstrKind::Repeat)
    return {true, std::move(fc), false, 0, 0, 0};
  const std::uint64_t n = last.counter();
  const std::uint64_t k = fc.items.size() - 1;
  return {n <= k, std::move(fc), true, n, k, n > k ? n - k : 0};
}

}  // namespace pga

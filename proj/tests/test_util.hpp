#pragma once

// Shared helpers for the unit and acceptance suites: compact instruction
// builders, brute-force unfolding oracles, a reference thread extractor
// that follows the per-instruction equations literally, and hand-built
// thread targets.

#include <cstdint>
#include <string>
#include <vector>

#include "pga/canonical.hpp"
#include "pga/parser.hpp"
#include "pga/spi.hpp"
#include "pga/thread.hpp"

namespace pga::test {

inline Instruction B(const char* name) { return Instruction::basic(name); }
inline Instruction P(const char* name) { return Instruction::pos_test(name); }
inline Instruction N(const char* name) { return Instruction::neg_test(name); }
inline Instruction J(std::uint64_t k) { return Instruction::jump(k); }
inline Instruction HALT() { return Instruction::halt(); }
inline Instruction REP(std::uint64_t n) { return Instruction::repeat(n); }

inline CanonSpi canon_pga(const std::string& text) {
  return to_canon_pga(parse_pga(text));
}

// Fails loudly when the sequence lies outside the kernel.
CanonSpi canon_l(const std::string& text);

inline LCanon lcanon(const std::string& text) { return to_canon_l(parse_l(text)); }

// Expands the term tree directly, with no canonical form in between.
std::vector<Instruction> unfold_term_bruteforce(const PgaTerm& t, std::size_t len);

// Simulates a repeater by replaying already-emitted instructions; the
// sequence must be in the kernel.
std::vector<Instruction> unfold_lseq_bruteforce(const LSeq& s, std::size_t len);

// Thread extraction done the pedestrian way: one node per (position) and
// per (pending jump, position) state, jumps stepping down one instruction
// at a time. Serves as the independent check of `extract`.
RegularThread extract_reference(const CanonSpi& c);

// Hand-built threads for golden tests.
RegularThread make_thread(std::vector<RegularThread::State> states,
                          std::size_t root = 0);
RegularThread::State st_stop();
RegularThread::State st_dead();
RegularThread::State st_post(const char* action, std::size_t on_true,
                             std::size_t on_false);

inline bool bisimilar(const RegularThread& a, const RegularThread& b) {
  return thread_equal(a, b).equal;
}

// Postconditional composition of two threads, for checking the equational
// reading of test instructions.
RegularThread compose_post(const std::string& action, const RegularThread& on_true,
                           const RegularThread& on_false);

}  // namespace pga::test

#pragma once

#include <cstdint>

#include "pga/spi.hpp"

namespace pga {

/// Result of projecting a flat sequence onto a program term. When the
/// repeater asks for more instructions than precede it, #0 instructions
/// are appended right before it until the counter is covered.
struct ProjectionReport {
  LSeq input;
  LSeq first_canonical;
  bool in_kernel;
  std::uint64_t padding_added;  // number of #0 instructions inserted
  PgaTerm result;
};

/// Total projection from flat sequences to program terms.
ProjectionReport pgla2pga(const LSeq& s);

struct KernelDiagnosis {
  bool in_kernel;
  LSeq first_canonical;
  bool has_repeater;
  std::uint64_t repeat_counter;  // meaningful when has_repeater
  std::uint64_t preceding;       // instructions before the repeater
  std::uint64_t deficit;         // repeat_counter - preceding when short, else 0
};

/// A sequence is in the kernel when its first canonical form either has no
/// repeater or the repeater is preceded by at least its counter's worth of
/// instructions.
KernelDiagnosis kernel_check(const LSeq& s);

}  // namespace pga

#pragma once

#include <cstdint>
#include <string>

namespace pga {

enum class InstrKind : std::uint8_t { Basic, PosTest, NegTest, Jump, Halt, Repeat };

/// One instruction of the linear notation.
///
/// Basic actions, polarized tests, jumps and halt are the primitive
/// instructions. A repeat instruction `\##n` re-runs the n instructions
/// preceding it and is only meaningful in flat sequences, never inside
/// composed program terms.
class Instruction {
 public:
  static Instruction basic(std::string name);
  static Instruction pos_test(std::string name);
  static Instruction neg_test(std::string name);
  static Instruction jump(std::uint64_t distance);
  static Instruction halt();
  static Instruction repeat(std::uint64_t count);  // count >= 1

  InstrKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  std::uint64_t counter() const noexcept { return counter_; }

  bool is_primitive() const noexcept { return kind_ != InstrKind::Repeat; }
  bool is_jump() const noexcept { return kind_ == InstrKind::Jump; }

  friend bool operator==(const Instruction&, const Instruction&) = default;

 private:
  Instruction(InstrKind k, std::string n, std::uint64_t c)
      : kind_(k), name_(std::move(n)), counter_(c) {}

  InstrKind kind_;
  std::string name_;
  std::uint64_t counter_;
};

std::string to_string(const Instruction& u);

}  // namespace pga

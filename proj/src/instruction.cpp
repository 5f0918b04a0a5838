#include "pga/instruction.hpp"

#include <stdexcept>
#include <utility>

namespace pga {

Instruction Instruction::basic(std::string name) {
  return {InstrKind::Basic, std::move(name), 0};
}

Instruction Instruction::pos_test(std::string name) {
  return {InstrKind::PosTest, std::move(name), 0};
}

Instruction Instruction::neg_test(std::string name) {
  return {InstrKind::NegTest, std::move(name), 0};
}

Instruction Instruction::jump(std::uint64_t distance) {
  return {InstrKind::Jump, {}, distance};
}

Instruction Instruction::halt() { return {InstrKind::Halt, {}, 0}; }

Instruction Instruction::repeat(std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("repeat counter must be positive");
  return {InstrKind::Repeat, {}, count};
}

std::string to_string(const Instruction& u) {
  switch (u.kind()) {
    case InstrKind::Basic:
      return u.name();
    case InstrKind::PosTest:
      return "+" + u.name();
    case InstrKind::NegTest:
      return "-" + u.name();
    case InstrKind::Jump:
      return "#" + std::to_string(u.counter());
    case InstrKind::Halt:
      return "!";
    case InstrKind::Repeat:
      return "\\##" + std::to_string(u.counter());
  }
  return {};
}

}  // namespace pga

#include "pga/term.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace pga {

struct PgaTerm::Node {
  Tag tag;
  std::optional<Instruction> instr;  // Prim
  std::shared_ptr<const Node> a;     // Concat: left; Omega: body
  std::shared_ptr<const Node> b;     // Concat: right
};

PgaTerm PgaTerm::prim(Instruction u) {
  if (!u.is_primitive())
    throw std::invalid_argument("repeat instruction is not a program term");
  auto n = std::make_shared<Node>();
  n->tag = Tag::Prim;
  n->instr = std::move(u);
  return PgaTerm(std::move(n));
}

PgaTerm PgaTerm::concat(PgaTerm left, PgaTerm right) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Concat;
  n->a = std::move(left.node_);
  n->b = std::move(right.node_);
  return PgaTerm(std::move(n));
}

PgaTerm PgaTerm::omega(PgaTerm body) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Omega;
  n->a = std::move(body.node_);
  return PgaTerm(std::move(n));
}

PgaTerm::Tag PgaTerm::tag() const noexcept { return node_->tag; }

const Instruction& PgaTerm::instruction() const { return *node_->instr; }

PgaTerm PgaTerm::left() const { return PgaTerm(node_->a); }

PgaTerm PgaTerm::right() const { return PgaTerm(node_->b); }

PgaTerm PgaTerm::body() const { return PgaTerm(node_->a); }

bool operator==(const PgaTerm& a, const PgaTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case PgaTerm::Tag::Prim:
      return a.instruction() == b.instruction();
    case PgaTerm::Tag::Concat:
      return a.left() == b.left() && a.right() == b.right();
    case PgaTerm::Tag::Omega:
      return a.body() == b.body();
  }
  return false;
}

std::vector<PgaTerm> concat_units(const PgaTerm& t) {
  std::vector<PgaTerm> units;
  std::vector<PgaTerm> stack{t};
  while (!stack.empty()) {
    PgaTerm cur = stack.back();
    stack.pop_back();
    if (cur.tag() == PgaTerm::Tag::Concat) {
      stack.push_back(cur.right());
      stack.push_back(cur.left());
    } else {
      units.push_back(cur);
    }
  }
  return units;
}

PgaTerm concat_all(const std::vector<PgaTerm>& units) {
  if (units.empty()) throw std::invalid_argument("empty program");
  PgaTerm acc = units.back();
  for (std::size_t i = units.size() - 1; i-- > 0;)
    acc = PgaTerm::concat(units[i], acc);
  return acc;
}

bool equal_modulo_assoc(const PgaTerm& a, const PgaTerm& b) {
  const auto ua = concat_units(a);
  const auto ub = concat_units(b);
  if (ua.size() != ub.size()) return false;
  for (std::size_t i = 0; i < ua.size(); ++i) {
    const PgaTerm& x = ua[i];
    const PgaTerm& y = ub[i];
    if (x.tag() != y.tag()) return false;
    if (x.tag() == PgaTerm::Tag::Prim) {
      if (!(x.instruction() == y.instruction())) return false;
    } else {
      if (!equal_modulo_assoc(x.body(), y.body())) return false;
    }
  }
  return true;
}

}  // namespace pga

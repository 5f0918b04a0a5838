#include "pga/printer.hpp"

namespace pga {
namespace {

void render_seq(const PgaTerm& t, std::string& out);

// An omega body needs parentheses unless it is a single instruction.
void render_unit(const PgaTerm& u, std::string& out) {
  if (u.tag() == PgaTerm::Tag::Prim) {
    out += to_string(u.instruction());
    return;
  }
  const PgaTerm body = u.body();
  if (body.tag() == PgaTerm::Tag::Prim) {
    out += to_string(body.instruction());
  } else {
    out += '(';
    render_seq(body, out);
    out += ')';
  }
  out += "^w";
}

void render_seq(const PgaTerm& t, std::string& out) {
  bool first = true;
  for (const PgaTerm& u : concat_units(t)) {
    if (!first) out += ';';
    first = false;
    render_unit(u, out);
  }
}

}  // namespace

std::string print(const PgaTerm& t) {
  std::string out;
  render_seq(t, out);
  return out;
}

std::string print(const LSeq& s) {
  std::string out;
  bool first = true;
  for (const Instruction& u : s.items) {
    if (!first) out += ';';
    first = false;
    out += to_string(u);
  }
  return out;
}

}  // namespace pga

#pragma once

#include <string>

#include "pga/term.hpp"

namespace pga {

/// Renders with minimal parenthesization; `parse_pga(print(t))` equals `t`
/// up to re-association of `;`.
std::string print(const PgaTerm& t);

/// Renders a flat sequence; repeaters print as `\##n`.
std::string print(const LSeq& s);

}  // namespace pga

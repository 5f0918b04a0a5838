#include "pga/cli.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "pga/canonical.hpp"
#include "pga/parser.hpp"
#include "pga/printer.hpp"
#include "pga/projection.hpp"
#include "pga/spi.hpp"
#include "pga/thread.hpp"

namespace pga::cli {
namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kUsage =
    "usage: pga <verb> [options] EXPR...\n"
    "verbs:\n"
    "  parse EXPR                   echo the parsed program\n"
    "  normalize EXPR --form F      F: first | first-min | second | second-min\n"
    "  eq EXPR1 EXPR2 --relation R  R: spc | sc | thread (default spc)\n"
    "  extract EXPR [--format F]    F: equations | dot (default equations)\n"
    "  project EXPR [--json]        project a flat sequence onto a program term\n"
    "  member EXPR                  kernel membership (exit 0 yes, 1 no)\n"
    "  unfold EXPR --length N       first N instructions of the denoted word\n"
    "options:\n"
    "  --dialect pga|pgla           override dialect detection\n"
    "exit codes: 0 success/equal/member, 1 unequal/non-member, 2 error\n";

struct Options {
  std::vector<std::string> positional;
  std::map<std::string, std::string> values;
  std::set<std::string> switches;
};

Options parse_options(const std::vector<std::string>& args, std::size_t start,
                      const std::set<std::string>& value_flags,
                      const std::set<std::string>& switch_flags) {
  Options o;
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.size() < 2 || a.compare(0, 2, "--") != 0) {
      o.positional.push_back(a);
      continue;
    }
    std::string name = a;
    std::optional<std::string> inline_value;
    const auto eq = a.find('=');
    if (eq != std::string::npos) {
      name = a.substr(0, eq);
      inline_value = a.substr(eq + 1);
    }
    if (switch_flags.count(name)) {
      if (inline_value) throw CliError("flag " + name + " takes no value");
      o.switches.insert(name);
      continue;
    }
    if (!value_flags.count(name)) throw CliError("unknown option " + name);
    if (inline_value) {
      o.values[name] = *inline_value;
    } else {
      if (i + 1 >= args.size()) throw CliError("missing value for " + name);
      o.values[name] = args[++i];
    }
  }
  return o;
}

Dialect resolve_dialect(const Options& o, const std::string& text) {
  const auto it = o.values.find("--dialect");
  if (it == o.values.end()) return detect_dialect(text);
  if (it->second == "pga") return Dialect::Pga;
  if (it->second == "pgla") return Dialect::Pgla;
  throw CliError("unknown dialect '" + it->second + "' (expected pga or pgla)");
}

// A parsed expression together with where it came from, so results can be
// printed back in the notation the user wrote.
struct Program {
  Dialect dialect;
  LCanon canon;
};

Program read_program(const Options& o, const std::string& text) {
  const Dialect d = resolve_dialect(o, text);
  if (d == Dialect::Pga) return {d, LCanon(to_canon_pga(parse_pga(text)))};
  return {d, to_canon_l(parse_l(text))};
}

const CanonSpi& require_kernel(const Program& p, const char* verb) {
  if (const auto* c = std::get_if<CanonSpi>(&p.canon)) return *c;
  const auto& nk = std::get<NotInK>(p.canon);
  throw CliError(std::string(verb) + ": sequence is not in the kernel (repeater "
                 "short of " + std::to_string(nk.deficit) +
                 (nk.deficit == 1 ? " instruction" : " instructions") +
                 "); use 'project' to pad it");
}

std::string print_canon(const CanonSpi& c, Dialect d) {
  return d == Dialect::Pga ? print(to_pga_term(c)) : print(to_lseq(c));
}

void require_arity(const Options& o, std::size_t want, const char* verb) {
  if (o.positional.size() != want)
    throw CliError(std::string(verb) + " expects " + std::to_string(want) +
                   (want == 1 ? " expression" : " expressions"));
}

int cmd_parse(const Options& o, std::ostream& out) {
  require_arity(o, 1, "parse");
  const std::string& text = o.positional[0];
  if (resolve_dialect(o, text) == Dialect::Pga)
    out << print(parse_pga(text)) << "\n";
  else
    out << print(parse_l(text)) << "\n";
  return 0;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  require_arity(o, 1, "normalize");
  const auto it = o.values.find("--form");
  const std::string form = it == o.values.end() ? "first" : it->second;
  if (form != "first" && form != "first-min" && form != "second" &&
      form != "second-min")
    throw CliError("unknown form '" + form +
                   "' (expected first, first-min, second or second-min)");
  const Program p = read_program(o, o.positional[0]);
  if (const auto* nk = std::get_if<NotInK>(&p.canon)) {
    // Outside the kernel only jump chains in the prefix can be resolved.
    if (form == "second" || form == "second-min")
      out << print(second_canonical_not_in_k(*nk).first_canonical) << "\n";
    else
      out << print(nk->first_canonical) << "\n";
    return 0;
  }
  const CanonSpi& c = std::get<CanonSpi>(p.canon);
  CanonSpi result = form == "first"       ? c
                    : form == "first-min" ? minimize_first(c)
                    : form == "second"    ? second_canonical(c)
                                          : minimize_second(c);
  out << print_canon(result, p.dialect) << "\n";
  return 0;
}

int cmd_eq(const Options& o, std::ostream& out) {
  require_arity(o, 2, "eq");
  const auto it = o.values.find("--relation");
  const std::string rel = it == o.values.end() ? "spc" : it->second;
  const Program p1 = read_program(o, o.positional[0]);
  const Program p2 = read_program(o, o.positional[1]);
  Verdict v{false, Relation::Spc, std::nullopt};
  if (rel == "spc") {
    v = decide_spc_l(p1.canon, p2.canon);
  } else if (rel == "sc") {
    v = decide_sc_l(p1.canon, p2.canon);
  } else if (rel == "thread") {
    const CanonSpi& c1 = require_kernel(p1, "eq");
    const CanonSpi& c2 = require_kernel(p2, "eq");
    v = thread_equal(extract(c1), extract(c2));
  } else {
    throw CliError("unknown relation '" + rel + "' (expected spc, sc or thread)");
  }
  out << (v.equal ? "equal (" : "not equal (") << to_string(v.relation) << ")\n";
  if (v.witness) out << "witness: " << *v.witness << "\n";
  return v.equal ? 0 : 1;
}

int cmd_extract(const Options& o, std::ostream& out) {
  require_arity(o, 1, "extract");
  const auto it = o.values.find("--format");
  const std::string format = it == o.values.end() ? "equations" : it->second;
  if (format != "equations" && format != "dot")
    throw CliError("unknown format '" + format + "' (expected equations or dot)");
  const Program p = read_program(o, o.positional[0]);
  const RegularThread t = minimize(extract(require_kernel(p, "extract")));
  if (format == "equations")
    out << to_string(to_equations(t)) << "\n";
  else
    out << to_dot(t);
  return 0;
}

int cmd_project(const Options& o, std::ostream& out) {
  require_arity(o, 1, "project");
  const auto it = o.values.find("--dialect");
  if (it != o.values.end() && it->second != "pgla")
    throw CliError("project expects a flat sequence (dialect pgla)");
  const ProjectionReport r = pgla2pga(parse_l(o.positional[0]));
  if (o.switches.count("--json")) {
    nlohmann::ordered_json j;
    j["input"] = print(r.input);
    j["first_canonical"] = print(r.first_canonical);
    j["in_kernel"] = r.in_kernel;
    j["padding_added"] = r.padding_added;
    j["result"] = print(r.result);
    out << j.dump() << "\n";
    return 0;
  }
  out << "input: " << print(r.input) << "\n";
  out << "first-canonical: " << print(r.first_canonical) << "\n";
  out << "in-kernel: " << (r.in_kernel ? "true" : "false") << "\n";
  out << "padding-added: " << r.padding_added << "\n";
  out << "result: " << print(r.result) << "\n";
  return 0;
}

int cmd_member(const Options& o, std::ostream& out) {
  require_arity(o, 1, "member");
  const auto it = o.values.find("--dialect");
  if (it != o.values.end() && it->second != "pgla")
    throw CliError("member expects a flat sequence (dialect pgla)");
  const KernelDiagnosis d = kernel_check(parse_l(o.positional[0]));
  if (d.in_kernel) {
    out << "member of K\n";
    return 0;
  }
  out << "not in K: repeater \\##" << d.repeat_counter << " preceded by "
      << d.preceding << (d.preceding == 1 ? " instruction" : " instructions")
      << " (deficit " << d.deficit << ")\n";
  return 1;
}

int cmd_unfold(const Options& o, std::ostream& out) {
  require_arity(o, 1, "unfold");
  std::uint64_t len = 16;
  const auto it = o.values.find("--length");
  if (it != o.values.end()) {
    const std::string& s = it->second;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), len);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
      throw CliError("invalid --length '" + s + "'");
    if (len > 1'000'000'000ULL) throw CliError("--length too large");
  }
  const Program p = read_program(o, o.positional[0]);
  const CanonSpi& c = require_kernel(p, "unfold");
  const SpiView v(c);
  bool first = true;
  std::uint64_t pos = 0;
  for (; pos < len && v.in_range(pos); ++pos) {
    if (!first) out << ' ';
    first = false;
    out << to_string(v.at(pos));
  }
  if (v.in_range(pos)) out << (first ? "..." : " ...");
  out << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& verb = args[0];
    if (verb == "help" || verb == "--help" || verb == "-h") {
      out << kUsage;
      return 0;
    }
    const std::set<std::string> value_flags{"--form", "--relation", "--format",
                                            "--length", "--dialect"};
    const std::set<std::string> switch_flags{"--json"};
    const Options o = parse_options(args, 1, value_flags, switch_flags);
    if (verb == "parse") return cmd_parse(o, out);
    if (verb == "normalize") return cmd_normalize(o, out);
    if (verb == "eq") return cmd_eq(o, out);
    if (verb == "extract") return cmd_extract(o, out);
    if (verb == "project") return cmd_project(o, out);
    if (verb == "member") return cmd_member(o, out);
    if (verb == "unfold") return cmd_unfold(o, out);
    err << "error: unknown verb '" << verb << "'\n" << kUsage;
    return 2;
  } catch (const ParseError& e) {
    err << "error at position " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pga::cli

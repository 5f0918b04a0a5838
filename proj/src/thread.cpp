#include "pga/thread.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace pga {

bool well_formed(const RegularThread& t) {
  if (t.states.empty() || t.root >= t.states.size()) return false;
  for (const auto& s : t.states) {
    if (s.kind != RegularThread::Kind::Post) continue;
    if (s.on_true >= t.states.size() || s.on_false >= t.states.size()) return false;
    if (s.action.empty()) return false;
  }
  return true;
}

RegularThread extract(const CanonSpi& c) {
  const SpiView v(c);
  RegularThread t;
  std::optional<std::size_t> stop_id, dead_id;
  auto stop = [&] {
    if (!stop_id) {
      t.states.push_back({RegularThread::Kind::Stop, {}, 0, 0});
      stop_id = t.states.size() - 1;
    }
    return *stop_id;
  };
  auto dead = [&] {
    if (!dead_id) {
      t.states.push_back({RegularThread::Kind::Dead, {}, 0, 0});
      dead_id = t.states.size() - 1;
    }
    return *dead_id;
  };

  std::unordered_map<std::uint64_t, std::size_t> state_at;  // folded position -> id
  std::vector<std::uint64_t> work;

  // State for whatever position `pos` reaches once jumps are out of the way.
  auto id_of = [&](std::uint64_t pos) -> std::size_t {
    const ResolvedTarget r = resolve_position(v, pos);
    if (r.kind != ResolvedTarget::Kind::At) return dead();
    const Instruction& u = v.at(r.position);
    if (u.kind() == InstrKind::Halt) return stop();
    const auto it = state_at.find(r.position);
    if (it != state_at.end()) return it->second;
    t.states.push_back({RegularThread::Kind::Post, u.name(), 0, 0});
    state_at.emplace(r.position, t.states.size() - 1);
    work.push_back(r.position);
    return t.states.size() - 1;
  };

  t.root = id_of(0);
  for (std::size_t i = 0; i < work.size(); ++i) {
    const std::uint64_t p = work[i];
    const std::size_t id = state_at.at(p);
    switch (v.at(p).kind()) {
      case InstrKind::Basic: {
        const std::size_t next = id_of(p + 1);
        t.states[id].on_true = next;
        t.states[id].on_false = next;
        break;
      }
      case InstrKind::PosTest:
        t.states[id].on_true = id_of(p + 1);
        t.states[id].on_false = id_of(p + 2);
        break;
      case InstrKind::NegTest:
        t.states[id].on_true = id_of(p + 2);
        t.states[id].on_false = id_of(p + 1);
        break;
      default:
        assert(false && "only action states are queued");
    }
  }
  return t;
}

namespace {

std::vector<std::size_t> reachable_in_bfs_order(const RegularThread& t) {
  std::vector<std::size_t> order;
  std::vector<char> seen(t.states.size(), 0);
  order.push_back(t.root);
  seen[t.root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& s = t.states[order[i]];
    if (s.kind != RegularThread::Kind::Post) continue;
    for (const std::size_t next : {s.on_true, s.on_false}) {
      if (!seen[next]) {
        seen[next] = 1;
        order.push_back(next);
      }
    }
  }
  return order;
}

}  // namespace

RegularThread minimize(const RegularThread& t) {
  assert(well_formed(t));
  const std::size_t n = t.states.size();

  // Moore refinement: start from (kind, action), then split by successor
  // classes until stable.
  std::vector<std::size_t> cls(n, 0);
  {
    std::map<std::pair<int, std::string>, std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i) {
      const auto key = std::make_pair(static_cast<int>(t.states[i].kind),
                                      t.states[i].action);
      cls[i] = ids.emplace(key, ids.size()).first->second;
    }
  }
  for (;;) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = t.states[i];
      const bool post = s.kind == RegularThread::Kind::Post;
      const auto key = std::make_tuple(cls[i], post ? cls[s.on_true] : 0,
                                       post ? cls[s.on_false] : 0);
      next[i] = ids.emplace(key, ids.size()).first->second;
    }
    const std::size_t old_count = 1 + *std::max_element(cls.begin(), cls.end());
    if (ids.size() == old_count) break;
    cls = std::move(next);
  }

  // One state per class reachable from the root, numbered breadth-first.
  RegularThread out;
  std::unordered_map<std::size_t, std::size_t> block_id;
  std::vector<std::size_t> rep;  // representative original state per block
  auto intern = [&](std::size_t state) {
    const auto [it, inserted] = block_id.emplace(cls[state], rep.size());
    if (inserted) {
      rep.push_back(state);
      out.states.push_back({t.states[state].kind, t.states[state].action, 0, 0});
    }
    return it->second;
  };
  out.root = intern(t.root);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    const auto& s = t.states[rep[i]];
    if (s.kind != RegularThread::Kind::Post) continue;
    out.states[i].on_true = intern(s.on_true);
    out.states[i].on_false = intern(s.on_false);
  }
  return out;
}

namespace {

std::string describe_state(const RegularThread::State& s) {
  switch (s.kind) {
    case RegularThread::Kind::Stop:
      return "S";
    case RegularThread::Kind::Dead:
      return "D";
    case RegularThread::Kind::Post:
      return "action '" + s.action + "'";
  }
  return {};
}

}  // namespace

Verdict thread_equal(const RegularThread& a, const RegularThread& b) {
  assert(well_formed(a) && well_formed(b));
  struct Item {
    std::size_t sa, sb;
    std::size_t parent;
    bool reply;
  };
  constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);
  std::vector<Item> items{{a.root, b.root, kNoParent, false}};
  std::vector<std::vector<char>> seen(a.states.size(),
                                      std::vector<char>(b.states.size(), 0));
  seen[a.root][b.root] = 1;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& sa = a.states[items[i].sa];
    const auto& sb = b.states[items[i].sb];
    const bool same_kind = sa.kind == sb.kind;
    const bool same_action =
        sa.kind != RegularThread::Kind::Post || sa.action == sb.action;
    if (!same_kind || !same_action) {
      // Shortest reply sequence by construction: pairs are visited in
      // breadth-first order.
      std::vector<bool> replies;
      for (std::size_t j = i; items[j].parent != kNoParent; j = items[j].parent)
        replies.push_back(items[j].reply);
      std::reverse(replies.begin(), replies.end());
      std::string w = "after replies [";
      for (std::size_t j = 0; j < replies.size(); ++j) {
        if (j) w += ", ";
        w += replies[j] ? "true" : "false";
      }
      w += "]: " + describe_state(sa) + " vs " + describe_state(sb);
      return {false, Relation::Thread, std::move(w)};
    }
    if (sa.kind != RegularThread::Kind::Post) continue;
    if (!seen[sa.on_true][sb.on_true]) {
      seen[sa.on_true][sb.on_true] = 1;
      items.push_back({sa.on_true, sb.on_true, i, true});
    }
    if (!seen[sa.on_false][sb.on_false]) {
      seen[sa.on_false][sb.on_false] = 1;
      items.push_back({sa.on_false, sb.on_false, i, false});
    }
  }
  return {true, Relation::Thread, std::nullopt};
}

namespace {

std::shared_ptr<const ThreadExpr> make_expr(ThreadExpr e) {
  return std::make_shared<const ThreadExpr>(std::move(e));
}

std::string render(const ThreadExpr& e, bool parenthesize_diamond) {
  switch (e.tag) {
    case ThreadExpr::Tag::Stop:
      return "S";
    case ThreadExpr::Tag::Dead:
      return "D";
    case ThreadExpr::Tag::Var:
      return e.label;
    case ThreadExpr::Tag::Prefix:
      return e.label + "∘" + render(*e.first, true);
    case ThreadExpr::Tag::Diamond: {
      const std::string body = render(*e.first, true) + " ⊴ " + e.label +
                               " ⊵ " + render(*e.second, true);
      return parenthesize_diamond ? "(" + body + ")" : body;
    }
  }
  return {};
}

}  // namespace

std::string to_string(const ThreadExpr& e) { return render(e, false); }

EquationSystem to_equations(const RegularThread& t) {
  assert(well_formed(t));
  const std::vector<std::size_t> order = reachable_in_bfs_order(t);

  // Count textual references; a merged pair of branches reads as one.
  std::vector<std::size_t> refs(t.states.size(), 0);
  for (const std::size_t s : order) {
    const auto& st = t.states[s];
    if (st.kind != RegularThread::Kind::Post) continue;
    refs[st.on_true] += 1;
    if (st.on_false != st.on_true) refs[st.on_false] += 1;
  }

  std::unordered_map<std::size_t, std::string> names;
  for (const std::size_t s : order) {
    const bool shared =
        t.states[s].kind == RegularThread::Kind::Post && refs[s] >= 2;
    if (s == t.root || shared)
      names.emplace(s, "X" + std::to_string(names.size()));
  }

  // States referenced once are inlined; every cycle passes through a named
  // state, so this recursion terminates.
  auto expand = [&](auto&& self, std::size_t s, bool definition) -> ThreadExpr {
    if (!definition) {
      const auto it = names.find(s);
      if (it != names.end()) return {ThreadExpr::Tag::Var, it->second, {}, {}};
    }
    const auto& st = t.states[s];
    switch (st.kind) {
      case RegularThread::Kind::Stop:
        return {ThreadExpr::Tag::Stop, {}, {}, {}};
      case RegularThread::Kind::Dead:
        return {ThreadExpr::Tag::Dead, {}, {}, {}};
      case RegularThread::Kind::Post:
        break;
    }
    if (st.on_true == st.on_false)
      return {ThreadExpr::Tag::Prefix, st.action,
              make_expr(self(self, st.on_true, false)), {}};
    return {ThreadExpr::Tag::Diamond, st.action,
            make_expr(self(self, st.on_true, false)),
            make_expr(self(self, st.on_false, false))};
  };

  EquationSystem sys;
  for (const std::size_t s : order) {
    const auto it = names.find(s);
    if (it == names.end()) continue;
    sys.equations.push_back({it->second, expand(expand, s, true)});
  }
  return sys;
}

std::string to_string(const EquationSystem& sys) {
  std::string out;
  for (const auto& eq : sys.equations) {
    if (!out.empty()) out += '\n';
    out += eq.variable + " = " + to_string(eq.rhs);
  }
  return out;
}

std::string to_dot(const RegularThread& t) {
  assert(well_formed(t));
  std::ostringstream out;
  out << "digraph thread {\n  rankdir=LR;\n";
  for (const std::size_t s : reachable_in_bfs_order(t)) {
    const auto& st = t.states[s];
    out << "  s" << s << " [";
    switch (st.kind) {
      case RegularThread::Kind::Stop:
        out << "shape=box, label=\"S\"";
        break;
      case RegularThread::Kind::Dead:
        out << "shape=box, label=\"D\"";
        break;
      case RegularThread::Kind::Post:
        out << "shape=circle, label=\"" << st.action << "\"";
        break;
    }
    if (s == t.root) out << ", peripheries=2";
    out << "];\n";
    if (st.kind == RegularThread::Kind::Post) {
      if (st.on_true == st.on_false) {
        out << "  s" << s << " -> s" << st.on_true << ";\n";
      } else {
        out << "  s" << s << " -> s" << st.on_true << " [label=\"true\"];\n";
        out << "  s" << s << " -> s" << st.on_false << " [label=\"false\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pga

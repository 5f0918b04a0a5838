// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "pga/canonical.hpp"
#include "pga/cli.hpp"
#include "pga/parser.hpp"
#include "pga/printer.hpp"
#include "pga/projection.hpp"
#include "pga/thread.hpp"
#include "test_util.hpp"

using namespace pga;
using namespace pga::test;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Pairs produced while checking criterion 5, reused by criterion 8.
struct GeneratedPair {
  CanonSpi a, b;
};
std::vector<GeneratedPair> g_pairs;

void criterion1(Check& c) {
  c.expect(decide_sc(canon_pga("#2;a;(#5;b;+c)^w"), canon_pga("#4;a;(#2;b;+c)^w")).equal,
           "chained jumps example not sc-equal");
  c.expect(minimize_second(canon_pga("#2;a;(#5;b;+c)^w")) ==
               canon_pga("#4;a;(#2;b;+c)^w"),
           "minimal second canonical form of the first example is off");
  c.expect(decide_sc(canon_pga("+a;#2;(+b;#2;-c;#2)^w"),
                     canon_pga("+a;#0;(+b;#0;-c;#0)^w"))
               .equal,
           "dead-jump example not sc-equal");
  c.expect(print(to_pga_term(minimize_second(canon_pga("+a;#2;(+b;#2;-c;#2)^w")))) ==
               "+a;(#0;+b;#0;-c)^w",
           "minimal second canonical form of the second example is off");
}

void criterion2(Check& c) {
  const RegularThread a_dead = make_thread({st_post("a", 1, 1), st_dead()});
  c.expect(bisimilar(extract(canon_pga("+a;#3")), a_dead), "|+a;#3|");
  c.expect(bisimilar(extract(canon_pga("+a;#3;(#0)^w")), a_dead), "|+a;#3;(#0)^w|");

  const RegularThread loop = make_thread({st_post("c", 0, 1), st_post("b", 0, 0)});
  c.expect(bisimilar(extract(canon_pga("#4;a;(#2;b;+c)^w")), loop),
           "|#4;a;(#2;b;+c)^w|");

  const RegularThread dab =
      make_thread({st_post("a", 1, 2), st_dead(), st_post("b", 1, 1)});
  c.expect(bisimilar(extract(canon_pga("+a;#0;(b;#0;-c;#0)^w")), dab),
           "|+a;#0;(b;#0;-c;#0)^w|");

  const RegularThread dap = make_thread({
      st_post("a", 1, 2),
      st_dead(),
      st_post("b", 1, 3),
      st_post("c", 2, 1),
  });
  c.expect(bisimilar(extract(canon_pga("+a;#0;(+b;#0;-c;#0)^w")), dap),
           "|+a;#0;(+b;#0;-c;#0)^w|");

  const RegularThread qr = make_thread({
      st_post("a", 1, 1),
      st_post("b", 2, 3),
      st_post("c", 1, 1),
      st_post("d", 4, 0),
      st_stop(),
  });
  c.expect(bisimilar(extract(canon_pga("a;(+b;#2;#3;c;#4;+d;!;a)^w")), qr),
           "picture program");
  c.expect(to_string(to_equations(minimize(
               extract(canon_pga("a;(+b;#2;#3;c;#4;+d;!;a)^w"))))) ==
               "X0 = a∘X1\nX1 = c∘X1 ⊴ b ⊵ (S ⊴ d ⊵ X0)",
           "picture program equations");
}

void criterion3(Check& c) {
  c.expect(decide_spc(canon_l("+a;-b;#4;-b;#4;\\##4"), canon_l("+a;-b;#4;\\##2")).equal,
           "first minimality example");
  c.expect(minimize_first(canon_l("+a;-b;#4;-b;#4;\\##4")) == canon_l("+a;-b;#4;\\##2"),
           "first minimality exact form");
  c.expect(decide_spc(canon_l("-a;+c;#4;+c;\\##2"), canon_l("-a;+c;#4;\\##2")).equal,
           "second minimality example");
  c.expect(minimize_first(canon_l("-a;+c;#4;+c;\\##2")) == canon_l("-a;+c;#4;\\##2"),
           "second minimality exact form");
  c.expect(decide_sc(canon_l("#1;\\##1"), canon_l("#0;\\##1")).equal, "#1;\\##1");
  c.expect(second_canonical(canon_l("#1;\\##1")) == canon_l("#0;\\##1"),
           "#1;\\##1 exact form");
  c.expect(decide_sc(canon_l("+a;#2;+b;#2;-c;#2;\\##4"),
                     canon_l("+a;#0;+b;#0;-c;#0;\\##4"))
               .equal,
           "kernel chain step 1");
  c.expect(decide_sc(canon_l("+a;#0;+b;#0;-c;#0;\\##4"), canon_l("+a;#0;+b;#0;-c;\\##4"))
               .equal,
           "kernel chain step 2");
  c.expect(print(to_lseq(minimize_second(canon_l("+a;#2;+b;#2;-c;#2;\\##4")))) ==
               "+a;#0;+b;#0;-c;\\##4",
           "kernel chain minimal rendering");
}

void criterion4(Check& c) {
  const RegularThread a_dead = make_thread({st_post("a", 1, 1), st_dead()});
  const RegularThread a_forever = make_thread({st_post("a", 0, 0)});
  c.expect(bisimilar(extract(to_canon_pga(pgla2pga(parse_l("a;#1;\\##3")).result)),
                     a_dead),
           "a;#1;\\##3");
  c.expect(bisimilar(extract(to_canon_pga(pgla2pga(parse_l("a;#2;\\##3")).result)),
                     a_forever),
           "a;#2;\\##3");
  for (std::uint64_t k = 0; k <= 30; ++k) {
    const LSeq s{{B("a"), J(k), REP(3)}};
    const RegularThread t = extract(to_canon_pga(pgla2pga(s).result));
    const RegularThread& expected = (k % 3 == 2) ? a_forever : a_dead;
    c.expect(bisimilar(t, expected), "family at k=" + std::to_string(k));
  }
}

void criterion5(Check& c) {
  Gen g(20250501);
  g_pairs.clear();
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    CanonSpi a = g.canon_spi(8, 6);
    CanonSpi b;
    const int mode = static_cast<int>(g.below(4));
    if (mode == 0) {
      b = g.canon_spi(8, 6);
    } else if (mode == 1) {
      b = g.same_spi_variant(a);
    } else {
      b = g.same_spi_variant(a);
      auto& side = (!b.period.empty() && g.chance(0.5)) ? b.period : b.preperiod;
      if (!side.empty()) side[g.below(side.size())] = g.instruction();
    }
    const Verdict v = decide_spc(a, b);
    c.expect(v.equal == spi_equal_oracle(a, b),
             "spc disagrees with the oracle at pair " + std::to_string(i));
    g_pairs.push_back({std::move(a), std::move(b)});
    ++checked;
  }
  c.expect(checked == 10000, "pair count");

  for (int i = 0; i < 500; ++i) {
    const LSeq s = g.kernel_lseq(8, 6);
    LSeq other = s;
    bool any_sc = false;
    for (std::size_t step = 0, steps = g.between(1, 5); step < steps; ++step) {
      const LRewrite r = apply_random_axiom_l(other, g, true);
      any_sc = any_sc || r.used_sc;
      other = r.seq;
    }
    const CanonSpi ca = canon_l(print(s));
    const LCanon cbv = to_canon_l(other);
    if (!std::holds_alternative<CanonSpi>(cbv)) {
      c.expect(false, "axiom rewrite left the kernel at pair " + std::to_string(i));
      continue;
    }
    const CanonSpi cb = std::get<CanonSpi>(cbv);
    if (any_sc)
      c.expect(decide_sc(ca, cb).equal,
               "jump-axiom pair not sc-equal at " + std::to_string(i));
    else
      c.expect(decide_spc(ca, cb).equal,
               "word-axiom pair not spc-equal at " + std::to_string(i));
    g_pairs.push_back({ca, cb});
  }

  for (int i = 0; i < 500; ++i) {
    const PgaTerm t = g.pga_term();
    PgaTerm u = t;
    for (std::size_t step = 0, steps = g.between(1, 5); step < steps; ++step)
      u = apply_random_axiom_pga(u, g);
    const CanonSpi ca = to_canon_pga(t);
    const CanonSpi cb = to_canon_pga(u);
    c.expect(decide_spc(ca, cb).equal,
             "term-axiom pair not spc-equal at " + std::to_string(i));
    g_pairs.push_back({ca, cb});
  }
}

void criterion6(Check& c) {
  Gen g(20250502);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = g.below(7);
    const std::size_t n = g.between(1, 5);
    LSeq s;
    s.items = g.word(k + n);
    s.items.push_back(REP(n));
    const CanonSpi via_k = canon_l(print(s));
    const RegularThread k_side = extract(via_k);
    const RegularThread pga_side = extract_reference(to_canon_pga(to_pga_term(via_k)));
    c.expect(bisimilar(k_side, pga_side), "mismatch at sample " + std::to_string(i));
  }
}

void criterion7(Check& c) {
  Gen g(20250503);
  for (int i = 0; i < 1000; ++i) {
    const PgaTerm x = g.pga_term();
    const CanonSpi lhs = to_canon_pga(PgaTerm::omega(x));
    const CanonSpi rhs = to_canon_pga(PgaTerm::concat(x, PgaTerm::omega(x)));
    c.expect(spi_equal_oracle(lhs, rhs), "unfolding law fails at " + std::to_string(i));
  }
}

void criterion8(Check& c) {
  c.expect(!g_pairs.empty(), "criterion 5 must run first");
  for (std::size_t i = 0; i < g_pairs.size(); ++i) {
    const auto& [a, b] = g_pairs[i];
    const bool spc = decide_spc(a, b).equal;
    const bool sc = decide_sc(a, b).equal;
    if (spc) c.expect(sc, "spc without sc at pair " + std::to_string(i));
    if (sc)
      c.expect(thread_equal(extract(a), extract(b)).equal,
               "sc without thread equality at pair " + std::to_string(i));
  }
  const CanonSpi d1 = canon_pga("#0");
  const CanonSpi d2 = canon_pga("#0;#0");
  c.expect(thread_equal(extract(d1), extract(d2)).equal,
           "#0 vs #0;#0 should be thread-equal");
  c.expect(!decide_sc(d1, d2).equal, "#0 vs #0;#0 should not be sc-equal");
}

void criterion9(Check& c) {
  Gen g(20250504);
  for (int i = 0; i < 700; ++i) {
    const LSeq s = g.kernel_lseq(8, 6);
    LSeq other = s;
    for (std::size_t step = 0, steps = g.between(1, 4); step < steps; ++step)
      other = apply_random_axiom_l(other, g, true).seq;
    const LCanon cbv = to_canon_l(other);
    if (!std::holds_alternative<CanonSpi>(cbv)) {
      c.expect(false, "variant left the kernel at " + std::to_string(i));
      continue;
    }
    c.expect(minimize_second(canon_l(print(s))) ==
                 minimize_second(std::get<CanonSpi>(cbv)),
             "normal forms differ at sequence sample " + std::to_string(i));
  }
  for (int i = 0; i < 300; ++i) {
    const PgaTerm t = g.pga_term();
    PgaTerm u = t;
    for (std::size_t step = 0, steps = g.between(1, 4); step < steps; ++step)
      u = apply_random_axiom_pga(u, g);
    c.expect(minimize_second(to_canon_pga(t)) == minimize_second(to_canon_pga(u)),
             "normal forms differ at term sample " + std::to_string(i));
  }
}

void criterion10(Check& c) {
  std::mt19937_64 rng(20250505);
  const std::string verbs[] = {"parse",   "normalize", "eq",    "extract",
                               "project", "member",    "unfold"};
  for (int i = 0; i < 10000; ++i) {
    std::string text;
    const std::size_t len = rng() % 64;
    for (std::size_t j = 0; j < len; ++j) {
      if (rng() % 2) {
        static const char soup[] = "abcd+-#;()^w\\!0123456789 .";
        text += soup[rng() % (sizeof(soup) - 1)];
      } else {
        text += static_cast<char>(rng() % 256);
      }
    }
    std::vector<std::string> args{verbs[rng() % 7], text};
    switch (rng() % 5) {
      case 0:
        args.push_back("--length");
        args.push_back(std::to_string(rng() % 64));
        break;
      case 1:
        args.push_back("--relation");
        args.push_back(rng() % 2 ? "sc" : "thread");
        break;
      case 2:
        args.push_back("--form");
        args.push_back("second-min");
        break;
      default:
        break;
    }
    std::ostringstream out, err;
    int code = 3;
    try {
      code = cli::run(args, out, err);
    } catch (...) {
      c.expect(false, "driver threw at input " + std::to_string(i));
      continue;
    }
    c.expect(code == 0 || code == 1 || code == 2,
             "unexpected exit code at input " + std::to_string(i));
    if (code == 2)
      c.expect(!err.str().empty(), "exit 2 without diagnostic at " + std::to_string(i));
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "structural congruence golden examples", criterion1},
      {2, "thread extraction golden examples", criterion2},
      {3, "kernel golden examples", criterion3},
      {4, "projection golden examples and jump family", criterion4},
      {5, "spc decision agrees with the unfolding oracle", criterion5},
      {6, "repeater extraction matches repetition extraction", criterion6},
      {7, "unfolding law", criterion7},
      {8, "soundness chain spc => sc => thread", criterion8},
      {9, "confluence of minimization under axiom rewrites", criterion9},
      {10, "driver survives arbitrary input", criterion10},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    criterion.fn(c);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << criterion.id << ": "
              << criterion.title << " (" << ms << " ms)";
    if (!c.ok) std::cout << " -- " << c.detail;
    std::cout << "\n";
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}

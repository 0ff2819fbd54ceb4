// MIT License
//
// Copyright (c) 2026 The authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to deal
// in the Software without restriction, including without limitation the rights
// to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
// copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in all
// copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
// OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
// SOFTWARE.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "aig/aiger.hpp"
#include "aig/simplify.hpp"
#include "aig/simulate.hpp"
#include "aig/transys.hpp"
#include "support/models.hpp"
#include "support/oracles.hpp"
#include "support/random_aig.hpp"

using aig::AigLit;
using sat::Lit;

namespace {

std::set<std::vector<Lit>> clause_set(const std::vector<sat::LitVec>& cnf) {
  std::set<std::vector<Lit>> s;
  for (auto c : cnf) {
    std::sort(c.begin(), c.end());
    s.insert(c);
  }
  return s;
}

std::vector<sat::Var> closure_oracle(const aig::TransitionSystem& sys, std::vector<sat::Var> roots) {
  // Fixpoint iteration over the whole map, deliberately unlike the worklist version.
  std::vector<bool> in(sys.num_vars, false);
  for (auto r : roots) in[r] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (sat::Var v = 0; v < sys.num_vars; ++v)
      if (in[v])
        for (auto f : sys.dep[v])
          if (!in[f]) in[f] = changed = true;
  }
  std::vector<sat::Var> out;
  for (sat::Var v = 0; v < sys.num_vars; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace

TEST_SUITE("parse") {
  TEST_CASE("empty circuit") {
    const aig::Aig g = aig::parse_aiger("aag 0 0 0 0 0\n");
    CHECK(g.inputs.empty());
    CHECK(g.latches.empty());
    CHECK(g.ands.empty());
    CHECK(g.bads.empty());
  }

  TEST_CASE("and of two inputs as an output") {
    const aig::Aig g = aig::parse_aiger("aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n");
    REQUIRE(g.ands.size() == 1);
    CHECK(g.ands[0] == aig::AndGate{3, AigLit(1, false), AigLit(2, false)});
    REQUIRE(g.bads.size() == 1);
    CHECK(g.bads[0] == AigLit(3, false));
    CHECK(g.bads_from_outputs);
  }

  TEST_CASE("latch reset defaults to zero and accepts 1 and self") {
    const aig::Aig g = aig::parse_aiger("aag 3 0 3 0 0 1 0\n2 2\n4 5 1\n6 6 6\n2\n");
    REQUIRE(g.latches.size() == 3);
    CHECK(g.latches[0].init == aig::LatchInit::Zero);
    CHECK(g.latches[1].init == aig::LatchInit::One);
    CHECK(g.latches[2].init == aig::LatchInit::Free);
    CHECK_FALSE(g.bads_from_outputs);
  }

  TEST_CASE("bad section wins over outputs") {
    const aig::Aig g = aig::parse_aiger("aag 2 1 1 1 0 1 0\n2\n4 2\n4\n3\n");
    REQUIRE(g.bads.size() == 1);
    CHECK(g.bads[0] == AigLit(1, true));
    CHECK(g.outputs[0] == AigLit(2, false));
  }

  TEST_CASE("justice and fairness sections are skipped") {
    const aig::Aig g = aig::parse_aiger("aag 1 0 1 0 0 1 0 1 1\n2 3\n2\n2\n2\n3\n2\n");
    CHECK(g.num_justice == 1);
    CHECK(g.num_fairness == 1);
    CHECK(g.bads.size() == 1);
  }

  TEST_CASE("symbol table and comments are ignored") {
    const aig::Aig g = aig::parse_aiger("aag 3 2 0 1 1\n2\n4\n6\n6 2 4\ni0 a\ni1 b\no0 out\nc\nanything here\n");
    CHECK(g.ands.size() == 1);
  }

  TEST_CASE("ASCII gates in arbitrary order are renumbered topologically") {
    // Gate 5 uses gate 4, listed first; variable 6 unused.
    const aig::Aig g = aig::parse_aiger("aag 6 2 0 1 2\n2\n4\n10\n10 8 2\n8 2 4\n");
    REQUIRE(g.ands.size() == 2);
    CHECK(g.max_index == 4);
    CHECK(g.ands[0] == aig::AndGate{3, AigLit(1, false), AigLit(2, false)});
    CHECK(g.ands[1] == aig::AndGate{4, AigLit(3, false), AigLit(1, false)});
    CHECK(g.bads[0] == AigLit(4, false));
    CHECK_NOTHROW(g.validate());
  }

  TEST_CASE("binary circuit") {
    // aig 3 2 0 1 1, output 6, gate 6 = 4 & 2: deltas 2 and 2.
    std::string bin = "aig 3 2 0 1 1\n6\n";
    bin.push_back(2);
    bin.push_back(2);
    const aig::Aig g = aig::parse_aiger(bin);
    REQUIRE(g.ands.size() == 1);
    CHECK(g.ands[0] == aig::AndGate{3, AigLit(2, false), AigLit(1, false)});
  }

  TEST_CASE("multi-byte delta encoding") {
    // One input, 200 gates chained; each gate i = prev & input.
    aig::Aig g;
    g.inputs = {1};
    g.max_index = 201;
    AigLit prev(1, false);
    for (std::uint32_t k = 0; k < 200; ++k) {
      g.ands.push_back({2 + k, prev, AigLit(1, k % 2 == 0)});
      prev = AigLit(2 + k, false);
    }
    g.bads = {prev};
    const aig::Aig back = aig::parse_aiger(testkit::encode_binary(g));
    CHECK(testkit::structurally_equal(g, back));
  }

  TEST_CASE("ASCII and binary re-encoding parse identically") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      testkit::RandomAigParams p;
      p.inputs = rng() % 4;
      p.latches = rng() % 6;
      p.ands = rng() % 200;
      p.bads = 1 + rng() % 2;
      p.p_init_free = 0.1;
      const aig::Aig g = testkit::random_aig(rng, p);
      const aig::Aig from_ascii = aig::parse_aiger(aig::write_aag(g));
      const aig::Aig from_binary = aig::parse_aiger(testkit::encode_binary(from_ascii));
      std::string why;
      CHECK_MESSAGE(testkit::structurally_equal(from_ascii, from_binary, &why), why);
      CHECK(testkit::structurally_equal(g, from_ascii, &why));
      CHECK_MESSAGE(testkit::structurally_equal(from_ascii, aig::parse_aiger(aig::write_aig(from_ascii)), &why), why);
    }
  }

  TEST_CASE("errors carry byte offsets") {
    auto offset_of = [](std::string_view text) -> std::optional<std::size_t> {
      try {
        aig::parse_aiger(text);
      } catch (const aig::ParseError& e) {
        return e.offset();
      }
      return std::nullopt;
    };
    CHECK(offset_of("xyz 0 0 0 0 0\n") == 0u);
    CHECK(offset_of("aag 1 0 0 0\n").has_value());
    CHECK(offset_of("aag 1 2 0 0 0\n").has_value());              // M < I + L + A
    CHECK(offset_of("aag 3 2 0 1 1\n2\n4\n6\n6 2 9\n") == 24u);  // literal 9 > 2M+1
    CHECK(offset_of("aig 3 2 0 1 1\n6\n") == 16u);                // truncated deltas
    std::string bad_delta = "aig 3 2 0 1 1\n6\n";
    bad_delta.push_back(7);  // 6 - 7 < 0: fanin above the declared node
    bad_delta.push_back(0);
    CHECK(offset_of(bad_delta) == 16u);
    std::string unterminated = "aig 3 2 0 1 1\n6\n";
    unterminated.push_back(static_cast<char>(0x82));
    CHECK(offset_of(unterminated).has_value());
    CHECK(offset_of("aag 2 0 0 1 2\n4\n4 2 0\n2 4 1\n").has_value());  // cycle
    CHECK(offset_of("aag 2 1 0 1 0\n2\n4\n").has_value());             // undefined node
    CHECK(offset_of("aag 1 0 1 0 0\n2 2 5\n").has_value());            // invalid reset
    CHECK(offset_of("aag 1 1 1 0 0\n2\n2 2\n").has_value());           // redefinition
  }
}

TEST_SUITE("coi") {
  TEST_CASE("leaf and one level") {
    testkit::AigBuilder b;
    const auto x = b.input(), y = b.input();
    const auto g = b.and2(x, y);
    b.bad(g);
    const auto sys = aig::tseitin_encode(b.build());
    const Lit glit = sys.bad_lit;
    const std::vector<Lit> in{Lit(1, true)};
    CHECK(aig::coi(sys, in) == std::vector<sat::Var>{1});
    const std::vector<Lit> root{glit};
    CHECK(aig::coi(sys, root) == std::vector<sat::Var>{1, 2, glit.var()});
    CHECK_THROWS_AS(aig::coi(sys, std::vector<Lit>{Lit(999, false)}), std::out_of_range);
  }

  TEST_CASE("shift register: next of latch 7 depends only on latch 6") {
    const auto g = aig::parse_aiger(testkit::shift_register(8, false));
    const auto sys = aig::tseitin_encode(g);
    const sat::Var l7 = sys.state_vars[7], l6 = sys.state_vars[6];
    const Lit root = sys.next_root[l7];
    CHECK(root.var() == l6);
    const auto got = aig::coi(sys, std::vector<Lit>{root});
    CHECK(got == closure_oracle(sys, {root.var()}));
    CHECK(got == std::vector<sat::Var>{l6});
  }

  TEST_CASE("monotone and equal to the fixpoint oracle on random circuits") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      testkit::RandomAigParams p;
      p.inputs = 1 + rng() % 3;
      p.latches = 1 + rng() % 5;
      p.ands = 5 + rng() % 40;
      const auto sys = aig::tseitin_encode(testkit::random_aig(rng, p));
      std::vector<Lit> r1, r2;
      for (sat::Var v = 1; v < sys.num_vars; ++v) {
        const auto pick = rng() % 6;
        if (pick == 0) r1.push_back(Lit(v, rng() % 2));
        if (pick <= 1) r2.push_back(Lit(v, rng() % 2));
      }
      r2.insert(r2.end(), r1.begin(), r1.end());
      const auto c1 = aig::coi(sys, r1), c2 = aig::coi(sys, r2);
      std::vector<sat::Var> v1;
      for (Lit l : r1) v1.push_back(l.var());
      CHECK(c1 == closure_oracle(sys, v1));
      CHECK(std::includes(c2.begin(), c2.end(), c1.begin(), c1.end()));
    }
  }

  TEST_CASE("soundness: assignments agreeing on the cone agree on the root") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      testkit::RandomAigParams p;
      p.inputs = 3;
      p.latches = 3;
      p.ands = 6;
      const aig::Aig g = testkit::random_aig(rng, p);
      REQUIRE(g.num_nodes() <= 13);
      const auto sys = aig::tseitin_encode(g);
      const sat::Var r = g.ands[rng() % g.ands.size()].node;
      const auto cone = aig::coi(sys, std::vector<Lit>{sat::pos_lit(r)});
      std::vector<bool> in_cone(g.num_nodes(), false);
      for (auto v : cone) in_cone[v] = true;
      for (std::uint64_t s1 = 0; s1 < 8; ++s1)
        for (std::uint64_t i1 = 0; i1 < 8; ++i1)
          for (std::uint64_t s2 = 0; s2 < 8; ++s2)
            for (std::uint64_t i2 = 0; i2 < 8; ++i2) {
              bool agree = true;
              for (int k = 0; k < 3; ++k) {
                if (in_cone[g.latches[k].node] && ((s1 >> k) & 1) != ((s2 >> k) & 1)) agree = false;
                if (in_cone[g.inputs[k]] && ((i1 >> k) & 1) != ((i2 >> k) & 1)) agree = false;
              }
              if (!agree) continue;
              CHECK(testkit::eval_nodes(g, s1, i1)[r] == testkit::eval_nodes(g, s2, i2)[r]);
            }
    }
  }
}

TEST_SUITE("tseitin") {
  TEST_CASE("single gate") {
    const auto sys = aig::tseitin_encode(aig::parse_aiger("aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n"));
    const Lit g = sat::pos_lit(3), x = sat::pos_lit(1), y = sat::pos_lit(2);
    const auto got = clause_set(sys.trans_cnf);
    const auto want = clause_set({{Lit(0, true)}, {~g, x}, {~g, y}, {g, ~x, ~y}});
    CHECK(got == want);
    CHECK(sys.dep[3] == std::vector<sat::Var>{1, 2});
    CHECK(sys.dep[1].empty());
  }

  TEST_CASE("polarity folding") {
    const auto sys = aig::tseitin_encode(aig::parse_aiger("aag 3 2 0 1 1\n2\n4\n6\n6 2 5\n"));
    const Lit g = sat::pos_lit(3), x = sat::pos_lit(1), y = sat::pos_lit(2);
    CHECK(clause_set(sys.trans_cnf) == clause_set({{Lit(0, true)}, {~g, x}, {~g, ~y}, {g, ~x, y}}));
  }

  TEST_CASE("identity latch has no gate clauses") {
    const auto sys = aig::tseitin_encode(aig::parse_aiger(testkit::identity_latch()));
    // Oracle: three clauses per gate in the cone, plus the constant unit.
    CHECK(sys.num_gates_encoded == 0);
    CHECK(sys.trans_cnf.size() == 3 * sys.num_gates_encoded + 1);
    CHECK(sys.next_root[1] == sat::pos_lit(1));
    CHECK(sys.init_cube == sat::LitVec{sat::neg_lit(1)});
    CHECK(sys.bad_lit == sat::pos_lit(1));
  }

  TEST_CASE("random 3-input cones: clauses hold iff every gate matches its function") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
      testkit::RandomAigParams p;
      p.inputs = 3;
      p.latches = 0;
      p.ands = 1 + rng() % 5;
      p.p_constant_fanin = 0;
      const aig::Aig g = testkit::random_aig(rng, p);
      const auto sys = aig::tseitin_encode(g);
      const std::uint32_t n = sys.num_vars;
      for (std::uint64_t m = 0; m < (1ull << n); ++m) {
        if (m & 1) continue;  // constant node is false
        auto val = [&](sat::Var v) { return ((m >> v) & 1) != 0; };
        bool clauses_hold = true;
        for (const auto& c : sys.trans_cnf) {
          bool any = false;
          for (Lit l : c) any |= val(l.var()) != l.negated();
          clauses_hold &= any;
        }
        const auto ref = testkit::eval_nodes(g, 0, m >> 1);
        bool gates_match = true;
        for (const auto& a : g.ands)
          // Only gates in the cone of a bad are encoded.
          if (std::find(sys.trans_cnf.begin(), sys.trans_cnf.end(), sat::LitVec{~sat::pos_lit(a.node), aig::to_sat(a.fanin0)}) !=
              sys.trans_cnf.end())
            gates_match &= ref[a.node] == val(a.node);
        CHECK(clauses_hold == gates_match);
      }
    }
  }

  TEST_CASE("equisatisfiability with explicit evaluation on small circuits") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 150; ++trial) {
      testkit::RandomAigParams p;
      p.inputs = 2;
      p.latches = 3;
      p.ands = 1 + rng() % 6;
      const aig::Aig g = testkit::random_aig(rng, p);
      const auto sys = aig::tseitin_encode(g);
      REQUIRE(sys.num_vars <= 12);
      auto cone = aig::coi(sys, std::vector<Lit>{sys.bad_lit});
      for (sat::Var x : sys.state_vars) {
        auto c = aig::coi(sys, std::vector<Lit>{sys.next_root[x]});
        cone.insert(cone.end(), c.begin(), c.end());
      }
      std::sort(cone.begin(), cone.end());
      cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
      for (int q = 0; q < 10; ++q) {
        sat::LitVec cube;
        for (sat::Var v : cone)
          if (v != 0 && rng() % 3 == 0) cube.push_back(Lit(v, rng() % 2));
        const bool sat = testkit::brute_force_sat(sys.num_vars, sys.trans_cnf, cube).has_value();
        bool explicit_sat = false;
        for (std::uint64_t s = 0; s < 8 && !explicit_sat; ++s)
          for (std::uint64_t i = 0; i < 4 && !explicit_sat; ++i) {
            const auto v = testkit::eval_nodes(g, s, i);
            bool ok = true;
            for (Lit l : cube) ok &= v[l.var()] != l.negated();
            explicit_sat = ok;
          }
        CHECK(sat == explicit_sat);
      }
    }
  }

  TEST_CASE("multiple bads are disjoined into a monitor") {
    testkit::AigBuilder b;
    const auto x = b.input(), y = b.input();
    b.bad(x);
    b.bad(y);
    const aig::Aig g = b.build();
    const auto sys = aig::tseitin_encode(g);
    const sat::Var m = g.num_nodes();
    CHECK(sys.num_vars == m + 1);
    CHECK(sys.bad_lit == sat::pos_lit(m));
    CHECK(sys.dep[m] == std::vector<sat::Var>{1, 2});
    for (std::uint64_t a = 0; a < 4; ++a) {
      sat::LitVec assume{Lit(1, !(a & 1)), Lit(2, !(a & 2))};
      const auto model = testkit::brute_force_sat(sys.num_vars, sys.trans_cnf, assume);
      REQUIRE(model);
      CHECK((*model)[m] == (a != 0));
      // The monitor value is forced.
      assume.push_back(Lit(m, a != 0));
      CHECK_FALSE(testkit::brute_force_sat(sys.num_vars, sys.trans_cnf, assume));
    }
    aig::EncodeOptions one;
    one.property = 1;
    const auto single = aig::tseitin_encode(g, one);
    CHECK(single.bad_lit == sat::pos_lit(2));
    CHECK(single.num_vars == g.num_nodes());
    one.property = 2;
    CHECK_THROWS_AS(aig::tseitin_encode(g, one), std::out_of_range);
  }

  TEST_CASE("no bads gives a constant-false bad literal") {
    const auto sys = aig::tseitin_encode(aig::parse_aiger("aag 1 0 1 0 0\n2 3\n"));
    CHECK(sys.bad_lit == Lit(0, false));
  }

  TEST_CASE("unconstrained resets") {
    const aig::Aig g = aig::parse_aiger("aag 2 0 2 0 0 1 0\n2 2 2\n4 4 1\n2\n");
    CHECK(aig::tseitin_encode(g).init_cube == sat::LitVec{sat::neg_lit(1), sat::pos_lit(2)});
    aig::EncodeOptions o;
    o.free_unconstrained = true;
    const auto sys = aig::tseitin_encode(g, o);
    CHECK(sys.init_cube == sat::LitVec{sat::pos_lit(2)});
    CHECK_FALSE(sys.init_value(1).has_value());
    CHECK(sys.init_value(2) == true);
  }

  TEST_CASE("invariant constraints are rejected") {
    CHECK_THROWS_AS(aig::tseitin_encode(aig::parse_aiger("aag 1 1 0 0 0 1 1\n2\n2\n3\n")), std::invalid_argument);
  }

  TEST_CASE("only gates in the cone are encoded") {
    testkit::AigBuilder b;
    const auto x = b.input(), y = b.input();
    const auto l = b.latch();
    b.set_next(l, b.and2(x, l));
    b.and2(x, y);  // dangling
    b.bad(l);
    const auto sys = aig::tseitin_encode(b.build());
    CHECK(sys.num_gates_encoded == 1);
    for (std::size_t v = 0; v < sys.num_vars; ++v) CHECK(v < sys.dep.size());
  }
}

TEST_SUITE("simplify") {
  TEST_CASE("folds constants and merges duplicates") {
    // g3 = x & 0, g4 = x & y, g5 = y & x (duplicate), g6 = x & !x, g7 = g4 & 1
    const aig::Aig g =
        aig::parse_aiger("aag 7 2 0 5 5\n2\n4\n6\n8\n10\n12\n14\n6 2 0\n8 2 4\n10 4 2\n12 2 3\n14 8 1\n");
    aig::SimplifyStats st;
    const aig::Aig s = aig::simplify(g, &st);
    CHECK(s.ands.size() == 1);
    CHECK(st.merged == 1);
    CHECK(st.folded == 3);
    CHECK(s.outputs[0] == aig::kFalse);
    CHECK(s.outputs[1] == s.outputs[2]);
    CHECK(s.outputs[3] == aig::kFalse);
    CHECK(s.outputs[4] == s.outputs[1]);
  }

  TEST_CASE("preserves behaviour on random circuits") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 200; ++trial) {
      testkit::RandomAigParams p;
      p.inputs = 3;
      p.latches = 3;
      p.ands = 30;
      p.p_constant_fanin = 0.1;
      const aig::Aig g = testkit::random_aig(rng, p);
      const aig::Aig s = aig::simplify(g);
      CHECK_NOTHROW(s.validate());
      CHECK(s.ands.size() <= g.ands.size());
      for (std::uint64_t st = 0; st < 8; ++st)
        for (std::uint64_t in = 0; in < 8; ++in) {
          const auto a = testkit::eval_nodes(g, st, in), b = testkit::eval_nodes(s, st, in);
          auto v = [](const std::vector<bool>& vals, AigLit l) { return vals[l.index()] != l.negated(); };
          CHECK(v(a, g.bads[0]) == v(b, s.bads[0]));
          for (std::size_t k = 0; k < 3; ++k) CHECK(v(a, g.latches[k].next) == v(b, s.latches[k].next));
        }
    }
  }
}

TEST_SUITE("simulate") {
  TEST_CASE("toggle trace replays and a corrupted one does not") {
    const aig::Aig g = aig::parse_aiger(testkit::toggle_latch());
    aig::Trace t{{0}, {{}, {}}};
    CHECK(aig::replay(g, t).ok);
    aig::Trace short_trace{{0}, {{}}};
    CHECK_FALSE(aig::replay(g, short_trace).ok);
    aig::Trace bad_init{{1}, {{}}};
    CHECK_FALSE(aig::replay(g, bad_init).ok);
  }

  TEST_CASE("flipped input bit breaks the lock trace") {
    const auto models = testkit::hand_models();
    const auto it = std::find_if(models.begin(), models.end(), [](const auto& m) { return m.name == "lock101"; });
    REQUIRE(it != models.end());
    const aig::Aig g = aig::parse_aiger(it->aag);
    aig::Trace t{{0, 0, 0}, {{1}, {0}, {1}, {0}}};
    CHECK(aig::replay(g, t).ok);
    for (std::size_t k = 0; k < 3; ++k) {
      aig::Trace f = t;
      f.inputs[k][0] ^= 1;
      CHECK_FALSE(aig::replay(g, f).ok);
    }
  }

  TEST_CASE("evaluation matches the test evaluator") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 100; ++trial) {
      testkit::RandomAigParams p;
      p.inputs = 4;
      p.latches = 4;
      p.ands = 40;
      const aig::Aig g = testkit::random_aig(rng, p);
      const std::uint64_t s = rng() % 16, i = rng() % 16;
      std::vector<std::uint8_t> sv, iv;
      for (int k = 0; k < 4; ++k) {
        sv.push_back((s >> k) & 1);
        iv.push_back((i >> k) & 1);
      }
      const auto a = aig::evaluate(g, sv, iv);
      const auto b = testkit::eval_nodes(g, s, i);
      for (std::uint32_t v = 0; v < g.num_nodes(); ++v) CHECK((a[v] != 0) == b[v]);
    }
  }
}

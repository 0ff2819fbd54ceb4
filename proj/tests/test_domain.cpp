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
#include "aig/transys.hpp"
#include "sat/domain.hpp"
#include "support/models.hpp"
#include "support/random_aig.hpp"

using sat::Domain;
using sat::Lit;
using sat::Var;

namespace {

Domain fresh(std::uint32_t n) {
  Domain d;
  for (std::uint32_t k = 0; k < n; ++k) d.add_var();
  return d;
}

std::vector<Domain::Membership> snapshot(const Domain& d) {
  std::vector<Domain::Membership> out;
  for (Var v = 0; v < d.num_vars(); ++v) out.push_back(d.membership(v));
  return out;
}

// Reachability over the dependency map by repeated relaxation.
std::set<Var> closure_oracle(const sat::DependencyMap& dep, std::span<const Lit> roots) {
  std::set<Var> s;
  for (Lit r : roots) s.insert(r.var());
  for (bool changed = true; changed;) {
    changed = false;
    for (Var v : std::vector<Var>(s.begin(), s.end()))
      for (Var f : dep[v]) changed |= s.insert(f).second;
  }
  return s;
}

}  // namespace

TEST_SUITE("contains") {
  TEST_CASE("inactive domain holds everything") {
    Domain d = fresh(5);
    for (Var v = 0; v < 5; ++v) CHECK(d.contains(v));
    CHECK(d.size() == 5);
  }

  TEST_CASE("permanent and unflagged variables under an active domain") {
    Domain d = fresh(5);
    d.mark_permanent(2);
    d.activate_temporary(sat::DependencyMap(5), {}, {});
    CHECK(d.active());
    CHECK(d.contains(2));
    CHECK_FALSE(d.contains(3));
    CHECK(d.size() == 1);
  }
}

TEST_SUITE("mark_permanent") {
  TEST_CASE("lemma variables") {
    Domain d = fresh(4);
    const std::vector<Var> lemma{1, 3};
    d.mark_permanent(lemma);
    CHECK(d.membership(1) == Domain::Membership::Permanent);
    CHECK(d.membership(3) == Domain::Membership::Permanent);
    d.mark_permanent(lemma);
    CHECK(d.permanent_vars().size() == 2);
  }

  TEST_CASE("temporary variable is upgraded") {
    Domain d = fresh(4);
    const std::vector<Var> extra{0, 2};
    d.activate_temporary(sat::DependencyMap(4), extra, {});
    REQUIRE(d.membership(2) == Domain::Membership::Temporary);
    d.mark_permanent(2);
    CHECK(d.membership(2) == Domain::Membership::Permanent);
    const auto temp = d.temporary_vars();
    CHECK(std::vector<Var>(temp.begin(), temp.end()) == std::vector<Var>{0});
    d.deactivate_temporary();
    CHECK(d.membership(2) == Domain::Membership::Permanent);
  }
}

TEST_SUITE("activate") {
  TEST_CASE("one-latch cube over a counter bit") {
    const auto g = aig::parse_aiger(testkit::counter(3, 7));
    const auto sys = aig::tseitin_encode(g);
    Domain d = fresh(sys.num_vars);
    const Var x = sys.state_vars[1];
    const Lit root = sys.next_root[x];
    const std::vector<Var> extra{x};
    d.activate_temporary(sys.dep, extra, std::span<const Lit>(&root, 1));
    const auto cone = closure_oracle(sys.dep, std::span<const Lit>(&root, 1));
    std::set<Var> want = cone;
    want.insert(x);
    const auto temp = d.temporary_vars();
    CHECK(std::set<Var>(temp.begin(), temp.end()) == want);
    CHECK(temp.size() <= cone.size() + extra.size());
  }

  TEST_CASE("empty roots and extras leave only the permanent part") {
    Domain d = fresh(6);
    d.mark_permanent(4);
    d.activate_temporary(sat::DependencyMap(6), {}, {});
    CHECK(d.temporary_vars().empty());
    for (Var v = 0; v < 6; ++v) CHECK(d.contains(v) == (v == 4));
  }

  TEST_CASE("permanent extras are not duplicated") {
    Domain d = fresh(6);
    d.mark_permanent(1);
    const std::vector<Var> extra{1, 2};
    d.activate_temporary(sat::DependencyMap(6), extra, {});
    const auto temp = d.temporary_vars();
    CHECK(std::vector<Var>(temp.begin(), temp.end()) == std::vector<Var>{2});
    CHECK(d.membership(1) == Domain::Membership::Permanent);
  }

  TEST_CASE("unknown root variable") {
    Domain d = fresh(3);
    const Lit bad(9, false);
    CHECK_THROWS_AS(d.activate_temporary(sat::DependencyMap(3), {}, std::span<const Lit>(&bad, 1)), std::out_of_range);
  }

  TEST_CASE("closure matches the relaxation oracle on random circuits") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      testkit::RandomAigParams p;
      p.latches = 1 + rng() % 8;
      p.ands = rng() % 60;
      const auto sys = aig::tseitin_encode(testkit::random_aig(rng, p));
      Domain d = fresh(sys.num_vars);
      std::vector<Var> perm;
      for (Var v = 0; v < sys.num_vars; ++v)
        if (rng() % 5 == 0) perm.push_back(v);
      d.mark_permanent(perm);
      std::vector<Lit> roots;
      for (Var x : sys.state_vars)
        if (rng() % 2) roots.push_back(sys.next_root[x]);
      d.activate_temporary(sys.dep, {}, roots);
      auto want = closure_oracle(sys.dep, roots);
      for (Var v : perm) want.erase(v);
      const auto temp = d.temporary_vars();
      CHECK(std::set<Var>(temp.begin(), temp.end()) == want);
      CHECK(temp.size() == want.size());
      for (Var v = 0; v < sys.num_vars; ++v)
        CHECK(d.contains(v) == (want.count(v) || std::find(perm.begin(), perm.end(), v) != perm.end()));
      // Re-activation replaces rather than accumulates.
      d.activate_temporary(sys.dep, {}, {});
      CHECK(d.temporary_vars().empty());
    }
  }
}

TEST_SUITE("deactivate") {
  TEST_CASE("round trip restores membership") {
    Domain d = fresh(8);
    d.mark_permanent(3);
    const auto before = snapshot(d);
    sat::DependencyMap dep(8);
    dep[5] = {6, 7};
    const Lit root(5, true);
    const std::vector<Var> extra{0};
    d.activate_temporary(dep, extra, std::span<const Lit>(&root, 1));
    CHECK(d.temporary_vars().size() == 4);
    d.deactivate_temporary();
    CHECK(snapshot(d) == before);
    CHECK_FALSE(d.active());
    CHECK(d.temporary_vars().empty());
    d.deactivate_temporary();
    CHECK(snapshot(d) == before);
    CHECK(d.membership(3) == Domain::Membership::Permanent);
  }
}

TEST_SUITE("sticky") {
  TEST_CASE("per-solve activation is a no-op while sticky") {
    Domain d = fresh(8);
    sat::DependencyMap dep(8);
    dep[4] = {1, 2};
    const Lit root(4, false);
    d.set_sticky(dep, {}, std::span<const Lit>(&root, 1));
    const auto installed = snapshot(d);
    const std::vector<Var> other{7};
    d.activate_temporary(dep, other, {});
    CHECK(snapshot(d) == installed);
    d.deactivate_temporary();
    CHECK(snapshot(d) == installed);
    CHECK(d.active());
    CHECK(d.closure_computations() == 1);
    d.unset_sticky();
    CHECK_FALSE(d.active());
    d.activate_temporary(dep, other, {});
    CHECK(d.contains(7));
    CHECK_FALSE(d.contains(4));
    CHECK(d.closure_computations() == 2);
  }

  TEST_CASE("shrinking the cube shrinks the domain") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
      testkit::RandomAigParams p;
      p.latches = 2 + rng() % 7;
      p.ands = 10 + rng() % 50;
      const auto sys = aig::tseitin_encode(testkit::random_aig(rng, p));
      std::vector<Lit> roots;
      for (Var x : sys.state_vars) roots.push_back(sys.next_root[x]);
      Domain d = fresh(sys.num_vars);
      d.set_sticky(sys.dep, sys.state_vars, roots);
      auto prev = d.temporary_vars();
      std::set<Var> prev_set(prev.begin(), prev.end());
      std::vector<Var> vars = sys.state_vars;
      while (!roots.empty()) {
        const std::size_t k = rng() % roots.size();
        roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(k));
        vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(k));
        d.set_sticky(sys.dep, vars, roots);
        const auto now = d.temporary_vars();
        const std::set<Var> now_set(now.begin(), now.end());
        CHECK(std::includes(prev_set.begin(), prev_set.end(), now_set.begin(), now_set.end()));
        prev_set = now_set;
      }
      d.unset_sticky();
    }
  }
}

TEST_CASE("fault injection drops one non-root variable") {
  sat::DependencyMap dep(6);
  dep[5] = {3, 4};
  dep[4] = {1, 2};
  Domain d = fresh(6);
  d.set_fault_drop_deepest(true);
  const Lit root(5, false);
  d.activate_temporary(dep, {}, std::span<const Lit>(&root, 1));
  CHECK(d.temporary_vars().size() == 4);
  CHECK(d.contains(5));
}

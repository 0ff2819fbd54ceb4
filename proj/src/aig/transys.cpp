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

#include "aig/transys.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace aig {

std::optional<bool> TransitionSystem::init_value(sat::Var v) const {
  if (v >= init_val_.size() || init_val_[v] < 0) return std::nullopt;
  return init_val_[v] == 1;
}

TransitionSystem tseitin_encode(const Aig& g, const EncodeOptions& opts) {
  g.validate();
  if (!g.constraints.empty()) throw std::invalid_argument("invariant constraints are not supported");

  std::vector<AigLit> bads = g.bads;
  if (opts.property) {
    if (*opts.property >= g.bads.size())
      throw std::out_of_range("property index " + std::to_string(*opts.property) + " out of range");
    bads = {g.bads[*opts.property]};
  }

  TransitionSystem sys;
  const std::uint32_t n = g.num_nodes();
  const bool monitor = bads.size() > 1;
  sys.num_vars = n + (monitor ? 1 : 0);
  sys.dep.assign(sys.num_vars, {});
  sys.next_root.assign(sys.num_vars, sat::kUndefLit);
  sys.kind_.assign(sys.num_vars, 0);
  sys.init_val_.assign(sys.num_vars, -1);

  std::vector<const AndGate*> gate_of(n, nullptr);
  for (const AndGate& a : g.ands) {
    gate_of[a.node] = &a;
    sys.dep[a.node] = {a.fanin0.index(), a.fanin1.index()};
    if (sys.dep[a.node][0] == sys.dep[a.node][1]) sys.dep[a.node].pop_back();
  }
  for (std::uint32_t v : g.inputs) {
    sys.input_vars.push_back(v);
    sys.kind_[v] = 1;
  }
  for (const Latch& l : g.latches) {
    sys.state_vars.push_back(l.node);
    sys.kind_[l.node] = 2;
    sys.next_root[l.node] = to_sat(l.next);
    if (l.init == LatchInit::Free && opts.free_unconstrained) continue;
    const bool one = l.init == LatchInit::One;
    sys.init_val_[l.node] = one ? 1 : 0;
    sys.init_cube.push_back(sat::Lit(l.node, !one));
  }

  // Gates in the cone of the next-state functions and the bad literals.
  std::vector<std::uint8_t> needed(n, 0);
  std::vector<std::uint32_t> stack;
  auto want = [&](AigLit l) {
    if (!needed[l.index()]) {
      needed[l.index()] = 1;
      stack.push_back(l.index());
    }
  };
  for (const Latch& l : g.latches) want(l.next);
  for (AigLit b : bads) want(b);
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    if (const AndGate* a = gate_of[v]) {
      want(a->fanin0);
      want(a->fanin1);
    }
  }

  sys.trans_cnf.push_back({sat::Lit(0, true)});
  for (const AndGate& a : g.ands) {
    if (!needed[a.node]) continue;
    const sat::Lit o = sat::pos_lit(a.node);
    const sat::Lit x = to_sat(a.fanin0);
    const sat::Lit y = to_sat(a.fanin1);
    sys.trans_cnf.push_back({~o, x});
    sys.trans_cnf.push_back({~o, y});
    // x ∧ ¬x: the binary clauses already force o false.
    if (x != ~y) sys.trans_cnf.push_back({o, ~x, ~y});
    ++sys.num_gates_encoded;
  }

  for (AigLit b : bads) sys.bad_sources.push_back(b.index());
  if (bads.empty()) {
    sys.bad_lit = sat::Lit(0, false);
  } else if (!monitor) {
    sys.bad_lit = to_sat(bads[0]);
  } else {
    const sat::Var m = n;
    const sat::Lit ml = sat::pos_lit(m);
    sat::LitVec big{~ml};
    for (AigLit b : bads) {
      big.push_back(to_sat(b));
      sys.trans_cnf.push_back({ml, ~to_sat(b)});
      sys.dep[m].push_back(b.index());
    }
    std::sort(big.begin(), big.end());
    big.erase(std::unique(big.begin(), big.end()), big.end());
    bool tautology = false;
    for (std::size_t i = 0; i + 1 < big.size(); ++i) tautology |= big[i + 1] == ~big[i];
    if (!tautology) sys.trans_cnf.push_back(big);
    std::sort(sys.dep[m].begin(), sys.dep[m].end());
    sys.dep[m].erase(std::unique(sys.dep[m].begin(), sys.dep[m].end()), sys.dep[m].end());
    sys.bad_lit = ml;
  }
  return sys;
}

std::vector<sat::Var> coi(const TransitionSystem& sys, std::span<const sat::Lit> roots) {
  std::vector<std::uint8_t> mark(sys.num_vars, 0);
  std::vector<sat::Var> stack, out;
  for (sat::Lit r : roots) {
    if (r.var() >= sys.num_vars) throw std::out_of_range("coi: unknown variable " + std::to_string(r.var()));
    if (!mark[r.var()]) {
      mark[r.var()] = 1;
      stack.push_back(r.var());
    }
  }
  while (!stack.empty()) {
    const sat::Var v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (sat::Var f : sys.dep[v])
      if (!mark[f]) {
        mark[f] = 1;
        stack.push_back(f);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace aig

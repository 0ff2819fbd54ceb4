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

#include "ic3/certify.hpp"

#include <sstream>

#include "sat/solver.hpp"

namespace ic3 {

namespace {

std::unique_ptr<sat::Solver> fresh_solver(const aig::TransitionSystem& sys, bool with_trans) {
  sat::SolverOptions so;
  so.bucket_branching = false;
  auto s = std::make_unique<sat::Solver>(so);
  for (std::uint32_t v = 0; v < sys.num_vars; ++v) s->new_var();
  if (with_trans)
    for (const LitVec& c : sys.trans_cnf) s->add_clause(c);
  else
    s->add_clause({sat::Lit(0, true)});
  return s;
}

std::string show(const LitVec& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i].dimacs();
  os << ')';
  return os.str();
}

}  // namespace

Check certify_invariant(const aig::TransitionSystem& sys, const std::vector<LitVec>& invariant) {
  Check out;
  auto fail = [&](const std::string& msg) {
    out.ok = false;
    out.failure = msg;
    return out;
  };
  for (const LitVec& c : invariant) {
    if (c.empty()) return fail("empty clause in invariant");
    for (Lit l : c)
      if (!sys.is_state(l.var())) return fail("invariant clause " + show(c) + " mentions a non-state variable");
  }

  // I ⇒ INV
  {
    auto s = fresh_solver(sys, false);
    for (Lit l : sys.init_cube) s->add_clause({l});
    for (const LitVec& c : invariant) {
      LitVec assume;
      for (Lit l : c) assume.push_back(~l);
      if (s->solve(assume) != SatResult::Unsat) return fail("initiation fails for " + show(c));
    }
  }
  // INV ∧ T ⇒ INV'
  auto s = fresh_solver(sys, true);
  for (const LitVec& c : invariant) s->add_clause(c);
  for (const LitVec& c : invariant) {
    LitVec assume;
    for (Lit l : c) assume.push_back(~sys.prime(l));
    if (s->solve(assume) != SatResult::Unsat) return fail("consecution fails for " + show(c));
  }
  // INV ⇒ ¬bad
  if (s->solve({sys.bad_lit}) != SatResult::Unsat) return fail("invariant does not imply the property");
  return out;
}

aig::Trace concretize(const aig::Aig& g, const aig::TransitionSystem& sys, const std::vector<TraceStep>& trace) {
  aig::Trace t;
  std::vector<std::int8_t> val(sys.num_vars, -1);
  auto load = [&](const Cube& c) {
    for (Lit l : c) val[l.var()] = l.negated() ? 0 : 1;
  };
  if (!trace.empty()) {
    load(trace.front().state);
    for (const aig::Latch& l : g.latches) {
      std::int8_t v = val[l.node];
      if (v < 0) v = l.init == aig::LatchInit::One ? 1 : 0;
      t.init.push_back(static_cast<std::uint8_t>(v));
    }
  }
  for (const TraceStep& step : trace) {
    std::fill(val.begin(), val.end(), -1);
    load(step.inputs);
    std::vector<std::uint8_t> in;
    for (std::uint32_t node : g.inputs) in.push_back(val[node] > 0 ? 1 : 0);
    t.inputs.push_back(std::move(in));
  }
  return t;
}

Check certify_trace(const aig::Aig& g, const aig::Trace& t, std::optional<std::size_t> property) {
  Check out;
  const aig::ReplayResult r = aig::replay(g, t, property);
  if (!r.ok) {
    out.ok = false;
    out.failure = "trace replay failed: " + r.error;
  }
  return out;
}

Check verify_result(const aig::Aig& g, const aig::TransitionSystem& sys, const Result& r,
                    std::optional<std::size_t> property) {
  switch (r.verdict) {
    case Verdict::Safe:
      return certify_invariant(sys, r.invariant);
    case Verdict::Unsafe:
      return certify_trace(g, concretize(g, sys, r.trace), property);
    default:
      return {false, "no verdict to verify"};
  }
}

}  // namespace ic3

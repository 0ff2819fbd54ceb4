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

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "sat/solver.hpp"

namespace sat {

Var Solver::activation_var() {
  if (act_var_ == kNoVar) {
    act_var_ = new_var();
    domain_.mark_permanent(act_var_);
  }
  return act_var_;
}

Lit Solver::install_temporary(std::span<const LitVec> clauses) {
  if (temp_installed_) throw std::logic_error("install_temporary: a temporary clause is already installed");
  const Var a = activation_var();
  const Lit act = pos_lit(a);
  backtrack(0);
  model_valid_ = false;
  temp_installed_ = true;
  if (!ok_) return ~act;

  LitVec ps;
  for (const LitVec& c : clauses) {
    ps.assign(c.begin(), c.end());
    ps.push_back(act);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    bool satisfied = false;
    std::size_t j = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i + 1 < ps.size() && ps[i + 1] == ~ps[i]) satisfied = true;
      const LBool v = value(ps[i]);
      if (v == LBool::True) satisfied = true;
      if (v != LBool::False) ps[j++] = ps[i];
    }
    ps.resize(j);
    if (satisfied) continue;
    if (ps.size() == 1) {
      // c is false at the root: the guarded query is trivially unsatisfiable.
      assert(ps[0] == act);
      unchecked_enqueue(act, kNoCRef);
      continue;
    }
    // Keep the activation literal out of the watched pair when possible so the
    // clause is visited only when c itself runs low.
    auto it = std::find(ps.begin(), ps.end(), act);
    std::iter_swap(it, ps.end() - 1);
    const CRef cr = ca_.alloc(ps, ClauseKind::Temporary);
    ca_[cr].set_from_temp(true);
    attach(cr);
    temp_refs_.push_back(cr);
  }
  return ~act;
}

void Solver::unassign_root(Var v) {
  assert(decision_level() == 0);
  auto it = std::find_if(trail_.begin(), trail_.end(), [v](Lit l) { return l.var() == v; });
  if (it == trail_.end()) return;
  const auto idx = static_cast<std::size_t>(it - trail_.begin());
  trail_.erase(it);
  if (qhead_ > idx) --qhead_;
  assigns_[v] = LBool::Undef;
  reason_[v] = kNoCRef;
  branching_.push(v);
}

void Solver::purge_temporary() {
  backtrack(0);
  model_valid_ = false;
  for (auto* list : {&temp_refs_, &tagged_}) {
    for (CRef cr : *list) {
      detach_strict(cr);
      ca_[cr].set_deleted();
      ca_.free(cr);
      ++stats_.purged;
    }
    list->clear();
  }
  // Nothing contains ¬a, so a root assignment of a implied nothing else.
  if (act_var_ != kNoVar && assigns_[act_var_] != LBool::Undef) unassign_root(act_var_);
  temp_installed_ = false;
  if (opts_.track_ancestry && act_var_ != kNoVar && occurrences(act_var_) != 0) ++stats_.purge_leaks;
}

}  // namespace sat

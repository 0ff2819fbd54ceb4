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

#include "sat/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sat {

namespace {

// Finite subsequences of the Luby sequence: 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
double luby(double y, std::uint64_t x) {
  std::uint64_t size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

class ScopedTimer {
 public:
  ScopedTimer(bool on, double& sink) : on_(on), sink_(sink) {
    if (on_) start_ = std::chrono::steady_clock::now();
  }
  ~ScopedTimer() {
    if (on_) sink_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool on_;
  double& sink_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

Solver::Solver(SolverOptions opts)
    : opts_(opts), branching_(opts.bucket_branching, opts.num_buckets, opts.var_decay) {}

Var Solver::new_var() {
  const Var v = num_vars();
  assigns_.push_back(LBool::Undef);
  level_.push_back(0);
  reason_.push_back(kNoCRef);
  phase_.push_back(0);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  root_revisit_flag_.push_back(0);
  root_revisit_flag_.push_back(0);
  branching_.add_var(v);
  domain_.add_var();
  branching_.push(v);
  return v;
}

CRef Solver::add_clause(std::span<const Lit> lits, ClauseKind kind) {
  backtrack(0);
  model_valid_ = false;
  if (!ok_) return kNoCRef;

  LitVec ps(lits.begin(), lits.end());
  for (Lit l : ps)
    if (l.var() >= num_vars()) throw std::out_of_range("add_clause: unknown variable " + std::to_string(l.var()));
  std::sort(ps.begin(), ps.end());
  std::size_t j = 0;
  Lit prev = kUndefLit;
  for (Lit l : ps) {
    if (l == prev) continue;
    if (prev != kUndefLit && l == ~prev) {
      if (kind == ClauseKind::Origin || kind == ClauseKind::Lemma)
        throw std::invalid_argument("add_clause: tautological clause rejected");
      return kNoCRef;
    }
    prev = l;
    if (value(l) == LBool::True) return kNoCRef;
    if (value(l) == LBool::False) continue;
    ps[j++] = l;
  }
  ps.resize(j);

  if (ps.empty()) {
    ok_ = false;
    return kNoCRef;
  }
  if (ps.size() == 1) {
    unchecked_enqueue(ps[0], kNoCRef);
    return kNoCRef;
  }
  const CRef cr = ca_.alloc(ps, kind);
  attach(cr);
  if (kind == ClauseKind::Learned)
    learnts_.push_back(cr);
  else
    clauses_.push_back(cr);
  return cr;
}

void Solver::attach(CRef cr) {
  const Clause& c = ca_[cr];
  assert(c.size() >= 2);
  watches_[(~c[0]).code()].push_back({cr, c[1]});
  watches_[(~c[1]).code()].push_back({cr, c[0]});
}

void Solver::detach_strict(CRef cr) {
  const Clause& c = ca_[cr];
  for (int k = 0; k < 2; ++k) {
    auto& ws = watches_[(~c[k]).code()];
    auto it = std::find_if(ws.begin(), ws.end(), [cr](const Watcher& w) { return w.cref == cr; });
    assert(it != ws.end());
    *it = ws.back();
    ws.pop_back();
  }
}

void Solver::unchecked_enqueue(Lit l, CRef from) {
  assert(value(l) == LBool::Undef);
  const Var v = l.var();
  assigns_[v] = lbool_of(!l.negated());
  level_[v] = decision_level();
  // Reasons are only consulted above the root level.
  reason_[v] = decision_level() == 0 ? kNoCRef : from;
  trail_.push_back(l);
}

void Solver::assign_decision(Lit l) {
  new_decision_level();
  unchecked_enqueue(l, kNoCRef);
}

void Solver::note_root_skip(Lit p) {
  if (decision_level() != 0 || root_revisit_flag_[p.code()]) return;
  root_revisit_flag_[p.code()] = 1;
  root_revisit_.push_back(p);
}

CRef Solver::propagate_literal(Lit p) {
  CRef confl = kNoCRef;
  std::vector<Watcher>& ws = watches_[p.code()];
  const Lit false_lit = ~p;
  Watcher* i = ws.data();
  Watcher* j = ws.data();
  Watcher* end = ws.data() + ws.size();
  while (i != end) {
    if (value(i->blocker) == LBool::True) {
      *j++ = *i++;
      continue;
    }
    const CRef cr = i->cref;
    const Lit old_blocker = i->blocker;
    Clause& c = ca_[cr];
    if (c[0] == false_lit) {
      c[0] = c[1];
      c[1] = false_lit;
    }
    ++i;
    const Lit first = c[0];
    const Watcher w{cr, first};
    if (first != old_blocker && value(first) == LBool::True) {
      *j++ = w;
      continue;
    }
    // Look for a replacement watch; an unassigned literal outside the domain
    // makes the whole clause irrelevant for this solve.
    bool moved = false;
    bool skip = false;
    const std::uint32_t sz = c.size();
    for (std::uint32_t k = 2; k < sz; ++k) {
      const Lit l = c[k];
      const LBool val = value(l);
      if (val == LBool::False) continue;
      if (val == LBool::Undef && !domain_.contains(l.var())) {
        skip = true;
        break;
      }
      c[1] = l;
      c[k] = false_lit;
      watches_[(~c[1]).code()].push_back(w);
      moved = true;
      break;
    }
    if (moved) continue;
    *j++ = w;
    if (skip) {
      note_root_skip(p);
      continue;
    }
    if (value(first) == LBool::False) {
      confl = cr;
      qhead_ = trail_.size();
      while (i != end) *j++ = *i++;
    } else if (!domain_.contains(first.var())) {
      note_root_skip(p);
    } else {
      unchecked_enqueue(first, cr);
    }
  }
  ws.resize(static_cast<std::size_t>(j - ws.data()));
  return confl;
}

CRef Solver::propagate() {
  CRef confl = kNoCRef;
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    ++stats_.propagations;
    confl = propagate_literal(p);
    if (confl != kNoCRef) break;
  }
  return confl;
}

bool Solver::revisit_root() {
  assert(decision_level() == 0);
  if (!root_revisit_.empty()) {
    LitVec pending;
    pending.swap(root_revisit_);
    for (Lit p : pending) root_revisit_flag_[p.code()] = 0;
    for (Lit p : pending) {
      if (value(p) != LBool::True) continue;
      if (propagate_literal(p) != kNoCRef) return false;
    }
  }
  return propagate() == kNoCRef;
}

void Solver::prepare_branching() {
  ScopedTimer t(opts_.profile_branching, stats_.branching_seconds);
  if (domain_.active()) {
    for (Var v : domain_.permanent_vars())
      if (assigns_[v] == LBool::Undef) branching_.push(v);
    for (Var v : domain_.temporary_vars())
      if (assigns_[v] == LBool::Undef) branching_.push(v);
  } else if (discarded_) {
    for (Var v = 0; v < num_vars(); ++v)
      if (assigns_[v] == LBool::Undef) branching_.push(v);
    discarded_ = false;
  }
}

Lit Solver::pick_branch() {
  ScopedTimer t(opts_.profile_branching, stats_.branching_seconds);
  for (;;) {
    const std::optional<Var> v = branching_.pop();
    if (!v) return kUndefLit;
    if (assigns_[*v] != LBool::Undef) continue;
    if (!domain_.contains(*v)) {
      discarded_ = true;
      continue;
    }
    return Lit(*v, phase_[*v] == 0);
  }
}

bool Solver::decide() {
  const Lit next = pick_branch();
  if (next == kUndefLit) return false;
  ++stats_.decisions;
  assign_decision(next);
  return true;
}

void Solver::backtrack(std::uint32_t lvl) {
  if (decision_level() <= lvl) return;
  model_valid_ = false;
  ScopedTimer t(opts_.profile_branching, stats_.branching_seconds);
  for (std::size_t c = trail_.size(); c-- > trail_lim_[lvl];) {
    const Var x = trail_[c].var();
    assigns_[x] = LBool::Undef;
    phase_[x] = trail_[c].negated() ? 0 : 1;
    branching_.push(x);
  }
  qhead_ = trail_lim_[lvl];
  trail_.resize(trail_lim_[lvl]);
  trail_lim_.resize(lvl);
}

void Solver::restart() {
  ++stats_.restarts;
  backtrack(std::min<std::uint32_t>(decision_level(), static_cast<std::uint32_t>(assumptions_.size())));
}

void Solver::clause_bump(Clause& c) {
  c.set_activity(static_cast<float>(c.activity() + cla_inc_));
  if (c.activity() > 1e20f) {
    for (CRef r : learnts_) ca_[r].set_activity(ca_[r].activity() * 1e-20f);
    for (CRef r : tagged_) ca_[r].set_activity(ca_[r].activity() * 1e-20f);
    cla_inc_ *= 1e-20;
  }
}

bool Solver::lit_redundant(Lit p, std::uint32_t abstract_levels, bool& from_temp) {
  analyze_stack_.clear();
  analyze_stack_.push_back(p);
  const std::size_t top = analyze_toclear_.size();
  bool touched_temp = false;
  while (!analyze_stack_.empty()) {
    const CRef r = reason_[analyze_stack_.back().var()];
    assert(r != kNoCRef);
    const Clause& c = ca_[r];
    touched_temp |= c.from_temp();
    analyze_stack_.pop_back();
    for (std::uint32_t i = 1; i < c.size(); ++i) {
      const Lit q = c[i];
      const Var v = q.var();
      if (seen_[v] || level_[v] == 0) continue;
      if (reason_[v] != kNoCRef && (abstract_level(v) & abstract_levels) != 0) {
        seen_[v] = 1;
        analyze_stack_.push_back(q);
        analyze_toclear_.push_back(q);
      } else {
        for (std::size_t j = top; j < analyze_toclear_.size(); ++j) seen_[analyze_toclear_[j].var()] = 0;
        analyze_toclear_.resize(top);
        return false;
      }
    }
  }
  from_temp |= touched_temp;
  return true;
}

void Solver::analyze_into(CRef confl, Analysis& out) {
  LitVec& learnt = out.learned;
  learnt.clear();
  learnt.push_back(kUndefLit);
  out.from_temp = false;
  to_bump_.clear();

  int path_count = 0;
  Lit p = kUndefLit;
  std::size_t index = trail_.size();
  do {
    assert(confl != kNoCRef);
    Clause& c = ca_[confl];
    if (c.learned()) clause_bump(c);
    out.from_temp |= c.from_temp();
    for (std::uint32_t j = (p == kUndefLit) ? 0 : 1; j < c.size(); ++j) {
      const Lit q = c[j];
      const Var v = q.var();
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      to_bump_.push_back(v);
      if (level_[v] >= decision_level())
        ++path_count;
      else
        learnt.push_back(q);
    }
    while (!seen_[trail_[--index].var()]) {
    }
    p = trail_[index];
    confl = reason_[p.var()];
    seen_[p.var()] = 0;
    --path_count;
  } while (path_count > 0);
  learnt[0] = ~p;

  analyze_toclear_.assign(learnt.begin(), learnt.end());
  if (opts_.minimize) {
    std::uint32_t abstract = 0;
    for (std::size_t i = 1; i < learnt.size(); ++i) abstract |= abstract_level(learnt[i].var());
    std::size_t j = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      const Var v = learnt[i].var();
      if (reason_[v] == kNoCRef || !lit_redundant(learnt[i], abstract, out.from_temp)) learnt[j++] = learnt[i];
    }
    learnt.resize(j);
  }

  out.backtrack_level = 0;
  if (learnt.size() > 1) {
    std::size_t max_i = 1;
    for (std::size_t i = 2; i < learnt.size(); ++i)
      if (level_[learnt[i].var()] > level_[learnt[max_i].var()]) max_i = i;
    std::swap(learnt[1], learnt[max_i]);
    out.backtrack_level = level_[learnt[1].var()];
  }
  for (Lit l : analyze_toclear_) seen_[l.var()] = 0;

  ScopedTimer t(opts_.profile_branching, stats_.branching_seconds);
  for (Var v : to_bump_) branching_.bump(v);
}

Solver::Analysis Solver::analyze(CRef conflict) {
  Analysis a;
  analyze_into(conflict, a);
  return a;
}

void Solver::analyze_final(Lit p) {
  // p is the negation of a falsified assumption.
  core_.clear();
  core_.push_back(~p);
  if (decision_level() == 0) return;
  seen_[p.var()] = 1;
  for (std::size_t i = trail_.size(); i-- > trail_lim_[0];) {
    const Var x = trail_[i].var();
    if (!seen_[x]) continue;
    if (reason_[x] == kNoCRef) {
      assert(level_[x] > 0);
      core_.push_back(trail_[i]);
    } else {
      const Clause& c = ca_[reason_[x]];
      for (std::uint32_t j = 1; j < c.size(); ++j)
        if (level_[c[j].var()] > 0) seen_[c[j].var()] = 1;
    }
    seen_[x] = 0;
  }
  seen_[p.var()] = 0;
}

bool Solver::locked(CRef cr) const {
  const Clause& c = ca_[cr];
  return value(c[0]) == LBool::True && reason_[c[0].var()] == cr;
}

std::size_t Solver::learned_limit() const {
  const double base = std::max<double>(opts_.min_learned_limit, 2.0 * static_cast<double>(clauses_.size()));
  return static_cast<std::size_t>(base * learned_growth_);
}

void Solver::reduce_learned_db() {
  ++stats_.reductions;
  std::sort(learnts_.begin(), learnts_.end(),
            [this](CRef a, CRef b) { return ca_[a].activity() < ca_[b].activity(); });
  const std::size_t half = learnts_.size() / 2;
  std::size_t j = 0;
  bool removed = false;
  for (std::size_t i = 0; i < learnts_.size(); ++i) {
    const CRef cr = learnts_[i];
    if (i < half && !locked(cr)) {
      ca_[cr].set_deleted();
      ca_.free(cr);
      ++stats_.removed_learned;
      removed = true;
    } else {
      learnts_[j++] = cr;
    }
  }
  learnts_.resize(j);
  if (removed) clean_watches();
  learned_growth_ *= opts_.learned_limit_growth;
}

void Solver::clean_watches() {
  for (auto& ws : watches_)
    std::erase_if(ws, [this](const Watcher& w) { return ca_[w.cref].deleted(); });
}

void Solver::collect_garbage() {
  assert(decision_level() == 0);
  ClauseArena to;
  to.reserve(ca_.size() - ca_.wasted());
  for (auto& ws : watches_)
    for (Watcher& w : ws) ca_.reloc(w.cref, to);
  for (CRef& r : clauses_) ca_.reloc(r, to);
  for (CRef& r : learnts_) ca_.reloc(r, to);
  for (CRef& r : tagged_) ca_.reloc(r, to);
  for (CRef& r : temp_refs_) ca_.reloc(r, to);
  ca_.swap(to);
  ++stats_.collections;
}

void Solver::record_learned(const Analysis& a) {
  const LitVec& learnt = a.learned;
  if (opts_.track_ancestry) audit_learned(a);
  ++stats_.learned;
  if (learnt.size() == 1) {
    unchecked_enqueue(learnt[0], kNoCRef);
    return;
  }
  const CRef cr = ca_.alloc(learnt, ClauseKind::Learned);
  Clause& c = ca_[cr];
  c.set_from_temp(a.from_temp);
  attach(cr);
  if (act_var_ != kNoVar && c.contains(pos_lit(act_var_))) {
    c.set_tagged();
    tagged_.push_back(cr);
  } else {
    learnts_.push_back(cr);
  }
  clause_bump(ca_[cr]);
  unchecked_enqueue(learnt[0], cr);
}

void Solver::audit_learned(const Analysis& a) {
  ++stats_.ancestry_checked;
  if (act_var_ == kNoVar) return;
  const Lit act = pos_lit(act_var_);
  const bool has_act = std::find(a.learned.begin(), a.learned.end(), act) != a.learned.end();
  if (std::find(a.learned.begin(), a.learned.end(), ~act) != a.learned.end()) ++stats_.negated_activation;
  if (a.from_temp) {
    ++stats_.ancestry_derived;
    if (!has_act) ++stats_.ancestry_violations;
  }
}

SatResult Solver::search(std::int64_t nof_conflicts) {
  std::int64_t conflict_count = 0;
  Analysis analysis;
  for (;;) {
    const CRef confl = propagate();
    if (confl != kNoCRef) {
      ++stats_.conflicts;
      ++solve_conflicts_;
      ++conflict_count;
      if (decision_level() == 0) {
        ok_ = false;
        return SatResult::Unsat;
      }
      analyze_into(confl, analysis);
      backtrack(analysis.backtrack_level);
      record_learned(analysis);
      branching_.decay();
      clause_decay();
      continue;
    }
    if (conflict_budget_ >= 0 && solve_conflicts_ >= static_cast<std::uint64_t>(conflict_budget_))
      return SatResult::Unknown;
    if (nof_conflicts >= 0 && conflict_count >= nof_conflicts) {
      restart();
      return SatResult::Unknown;
    }
    if (learnts_.size() >= learned_limit()) reduce_learned_db();

    Lit next = kUndefLit;
    while (decision_level() < assumptions_.size()) {
      const Lit p = assumptions_[decision_level()];
      const LBool val = value(p);
      if (val == LBool::True) {
        new_decision_level();
      } else if (val == LBool::False) {
        analyze_final(~p);
        return SatResult::Unsat;
      } else {
        next = p;
        break;
      }
    }
    if (next != kUndefLit) {
      assign_decision(next);
      continue;
    }
    if (!decide()) return SatResult::Sat;
  }
}

SatResult Solver::solve(std::span<const Lit> assumptions) {
  backtrack(0);
  model_valid_ = false;
  core_.clear();
  ++stats_.solves;
  solve_conflicts_ = 0;
  if (!ok_) return last_result_ = SatResult::Unsat;
  for (Lit l : assumptions)
    if (l.var() >= num_vars()) throw std::out_of_range("solve: unknown assumption variable");
  if (ca_.wasted() > ca_.size() / 5 && ca_.wasted() > 4096) collect_garbage();

  assumptions_.assign(assumptions.begin(), assumptions.end());
  prepare_branching();
  if (!revisit_root()) {
    ok_ = false;
    return last_result_ = SatResult::Unsat;
  }

  SatResult status = SatResult::Unknown;
  for (std::uint64_t restarts = 0;; ++restarts) {
    const auto budget = static_cast<std::int64_t>(luby(2.0, restarts) * opts_.restart_base);
    status = search(budget);
    if (status != SatResult::Unknown) break;
    if (conflict_budget_ >= 0 && solve_conflicts_ >= static_cast<std::uint64_t>(conflict_budget_)) break;
  }
  last_result_ = status;
  if (status == SatResult::Sat) {
    model_valid_ = true;
  } else {
    backtrack(0);
  }
  return status;
}

LBool Solver::model_value(Var v) const {
  if (!model_valid_) throw std::logic_error("model requested without a current SAT answer");
  return assigns_[v];
}

std::vector<LBool> Solver::model() const {
  if (!model_valid_) throw std::logic_error("model requested without a current SAT answer");
  return assigns_;
}

const LitVec& Solver::unsat_core() const {
  if (last_result_ != SatResult::Unsat) throw std::logic_error("unsat core requested after a non-UNSAT answer");
  return core_;
}

std::vector<LitVec> Solver::learned_clauses() const {
  std::vector<LitVec> out;
  for (const auto* list : {&learnts_, &tagged_})
    for (CRef r : *list) {
      const auto lits = ca_[r].literals();
      out.emplace_back(lits.begin(), lits.end());
    }
  return out;
}

std::vector<LitVec> Solver::all_clauses() const {
  std::vector<LitVec> out;
  for (const auto* list : {&clauses_, &learnts_, &tagged_, &temp_refs_})
    for (CRef r : *list) {
      const auto lits = ca_[r].literals();
      out.emplace_back(lits.begin(), lits.end());
    }
  for (Lit l : trail_)
    if (level_[l.var()] == 0) out.push_back({l});
  return out;
}

bool Solver::check_watches(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  std::unordered_map<CRef, int> seen;
  for (std::uint32_t code = 0; code < watches_.size(); ++code)
    for (const Watcher& w : watches_[code]) {
      const Clause& c = ca_[w.cref];
      if (c.deleted()) return fail("watcher of a deleted clause");
      if ((~c[0]).code() != code && (~c[1]).code() != code) return fail("watcher on a non-watched literal");
      ++seen[w.cref];
    }
  for (const auto* list : {&clauses_, &learnts_, &tagged_, &temp_refs_})
    for (CRef r : *list) {
      auto it = seen.find(r);
      if (it == seen.end() || it->second != 2) return fail("clause not watched exactly twice");
    }
  return true;
}

std::size_t Solver::occurrences(Var v) const {
  std::size_t n = 0;
  for (const auto* list : {&clauses_, &learnts_, &tagged_, &temp_refs_})
    for (CRef r : *list)
      for (Lit l : ca_[r].literals())
        if (l.var() == v) ++n;
  return n;
}

}  // namespace sat

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

#include "gipsat/frame_solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

namespace gipsat {

const char* to_string(QueryKind k) {
  switch (k) {
    case QueryKind::Gen: return "gen";
    case QueryKind::Block: return "block";
    case QueryKind::Push: return "push";
    default: return "bad";
  }
}

namespace {

void accumulate(sat::SolverStats& into, const sat::SolverStats& s) {
  into.solves += s.solves;
  into.decisions += s.decisions;
  into.propagations += s.propagations;
  into.conflicts += s.conflicts;
  into.learned += s.learned;
  into.restarts += s.restarts;
  into.reductions += s.reductions;
  into.removed_learned += s.removed_learned;
  into.purged += s.purged;
  into.collections += s.collections;
  into.ancestry_checked += s.ancestry_checked;
  into.ancestry_derived += s.ancestry_derived;
  into.ancestry_violations += s.ancestry_violations;
  into.negated_activation += s.negated_activation;
  into.purge_leaks += s.purge_leaks;
  into.branching_seconds += s.branching_seconds;
}

}  // namespace

FrameSolver::FrameSolver(const aig::TransitionSystem& sys, std::uint32_t level, FrameOptions opts)
    : sys_(sys), level_(level), opts_(opts) {
  init_of_.assign(sys_.num_vars, -1);
  for (Lit l : sys_.init_cube) init_of_[l.var()] = l.negated() ? 0 : 1;
  build();
}

void FrameSolver::build() {
  sat::SolverOptions so;
  so.bucket_branching = opts_.buckets;
  so.num_buckets = opts_.num_buckets;
  so.track_ancestry = opts_.track_ancestry;
  so.profile_branching = opts_.profile_branching;
  solver_ = std::make_unique<sat::Solver>(so);
  sat::Solver& s = *solver_;
  for (std::uint32_t v = 0; v < sys_.num_vars; ++v) s.new_var();
  if (opts_.reuse_activation) {
    const bool fresh = !s.has_activation_var();
    s.activation_var();
    if (fresh && stats_.activation_vars == 0) stats_.activation_vars = 1;
  }
  for (const LitVec& c : sys_.trans_cnf) s.add_clause(c, sat::ClauseKind::Origin);
  if (level_ == 0)
    for (Lit l : sys_.init_cube) s.add_clause({l}, sat::ClauseKind::Origin);
  if (opts_.domain) {
    std::vector<Var> init_vars;
    for (Lit l : sys_.init_cube) init_vars.push_back(l.var());
    s.domain().mark_permanent(init_vars);
  }
  for (const LitVec& lemma : lemmas_) {
    s.add_clause(lemma, sat::ClauseKind::Lemma);
    if (opts_.domain)
      for (Lit l : lemma) s.domain().mark_permanent(l.var());
  }
  stats_.peak_vars = std::max(stats_.peak_vars, s.num_vars());
}

void FrameSolver::rebuild() {
  accumulate(retired_, solver_->stats());
  build();
  ++stats_.resets;
  legacy_since_reset_ = 0;
  if (sticky_cube_) install_sticky(*sticky_cube_);
}

sat::SolverStats FrameSolver::solver_stats() const {
  sat::SolverStats s = retired_;
  accumulate(s, solver_->stats());
  return s;
}

void FrameSolver::add_lemma(const LitVec& lemma) {
  if (lemma.empty()) throw std::invalid_argument("add_lemma: empty lemma");
  for (Lit l : lemma)
    if (!sys_.is_state(l.var()))
      throw std::invalid_argument("add_lemma: variable " + std::to_string(l.var()) + " is not a state variable");
  LitVec key = lemma;
  std::sort(key.begin(), key.end());
  if (!lemma_set_.insert(key).second) ++stats_.duplicate_lemmas;
  lemmas_.push_back(key);
  solver_->add_clause(key, sat::ClauseKind::Lemma);
  if (opts_.domain)
    for (Lit l : key) solver_->domain().mark_permanent(l.var());
}

SatResult FrameSolver::solve(std::span<const Lit> assumption, const LitVec* constraint, std::span<const Lit> droot,
                             QueryKind kind) {
  const auto t0 = std::chrono::steady_clock::now();
  sat::Solver& s = *solver_;
  sat::Domain& dom = s.domain();

  if (opts_.domain && !dom.sticky()) {
    // Assumption and constraint variables are always in the domain, whatever droot says.
    std::vector<Var> extra;
    for (Lit l : assumption) extra.push_back(l.var());
    if (constraint)
      for (Lit l : *constraint) extra.push_back(l.var());
    dom.activate_temporary(sys_.dep, extra, droot);
    ++stats_.domain_closures;
  }

  LitVec assumps(assumption.begin(), assumption.end());
  Var legacy_act = sat::kNoVar;
  if (constraint) {
    if (opts_.reuse_activation) {
      assumps.push_back(s.install_temporary(*constraint));
    } else {
      legacy_act = s.new_var();
      ++stats_.activation_vars;
      ++legacy_since_reset_;
      if (opts_.domain) dom.mark_permanent(legacy_act);
      LitVec cl = *constraint;
      cl.push_back(sat::pos_lit(legacy_act));
      s.add_clause(cl, sat::ClauseKind::Temporary);
      assumps.push_back(sat::neg_lit(legacy_act));
    }
  }
  if (opts_.domain) {
    stats_.domain_fraction_sum += static_cast<double>(dom.size()) / static_cast<double>(s.num_vars());
    ++stats_.domain_samples;
  }

  const SatResult r = s.solve(assumps);
  last_result_ = r;
  last_core_.clear();
  if (r == SatResult::Sat) {
    snapshot_model();
  } else if (r == SatResult::Unsat) {
    const Var act = opts_.reuse_activation ? s.activation_var() : legacy_act;
    for (Lit l : s.unsat_core())
      if (l.var() != act) last_core_.push_back(l);
  }

  if (constraint) {
    if (opts_.reuse_activation) {
      s.purge_temporary();
    } else {
      s.add_clause({sat::pos_lit(legacy_act)}, sat::ClauseKind::Origin);
    }
  }
  if (opts_.domain && !dom.sticky()) dom.deactivate_temporary();
  stats_.peak_vars = std::max(stats_.peak_vars, s.num_vars());
  if (!opts_.reuse_activation && legacy_since_reset_ >= opts_.reset_interval) rebuild();

  KindStats& ks = stats_.kinds[static_cast<std::size_t>(kind)];
  ++ks.calls;
  if (r == SatResult::Sat) ++ks.sat;
  ks.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SatResult FrameSolver::relind(const Cube& c, QueryKind kind) {
  if (c.empty()) throw std::invalid_argument("relind: empty cube");
  LitVec assumption;
  assumption.reserve(c.size());
  LitVec clause;
  clause.reserve(c.size());
  for (Lit l : c) {
    assumption.push_back(primed(l));
    clause.push_back(~l);
  }
  LitVec droot = c;
  droot.insert(droot.end(), assumption.begin(), assumption.end());
  last_cube_ = c;
  stats_.kinds[static_cast<std::size_t>(kind)].cube_literals += c.size();
  return solve(assumption, &clause, droot, kind);
}

bool FrameSolver::excludes_init(const Cube& c) const {
  for (Lit l : c) {
    const std::int8_t iv = init_of_[l.var()];
    if (iv >= 0 && (iv == 1) == l.negated()) return true;
  }
  return false;
}

Cube FrameSolver::inductive_core() const {
  if (last_result_ != SatResult::Unsat) throw std::logic_error("inductive_core: last query was not UNSAT");
  std::unordered_set<Lit> core(last_core_.begin(), last_core_.end());
  Cube out;
  for (Lit l : last_cube_)
    if (core.count(primed(l))) out.push_back(l);
  if (out.empty()) return last_cube_;
  if (!excludes_init(out)) {
    for (Lit l : last_cube_) {
      if (!excludes_init(Cube{l})) continue;
      out.insert(std::lower_bound(out.begin(), out.end(), l,
                                  [](Lit a, Lit b) { return a.var() < b.var(); }),
                 l);
      break;
    }
  }
  return out;
}

SatResult FrameSolver::has_bad() {
  const Lit bad = sys_.bad_lit;
  return solve(std::span<const Lit>(&bad, 1), nullptr, std::span<const Lit>(&bad, 1), QueryKind::Bad);
}

void FrameSolver::snapshot_model() {
  const sat::Solver& s = *solver_;
  last_pred_.state.clear();
  last_pred_.inputs.clear();
  for (Var v : sys_.state_vars) {
    const sat::LBool val = s.model_value(v);
    if (val != sat::LBool::Undef) last_pred_.state.push_back(Lit(v, val == sat::LBool::False));
  }
  for (Var v : sys_.input_vars) {
    const sat::LBool val = s.model_value(v);
    if (val != sat::LBool::Undef) last_pred_.inputs.push_back(Lit(v, val == sat::LBool::False));
  }
}

Predecessor FrameSolver::get_predecessor() const {
  if (last_result_ != SatResult::Sat) throw std::logic_error("get_predecessor: last query was not SAT");
  return last_pred_;
}

void FrameSolver::install_sticky(const Cube& b) {
  LitVec roots = b;
  for (Lit l : b) roots.push_back(primed(l));
  solver_->domain().set_sticky(sys_.dep, {}, roots);
}

void FrameSolver::set_domain(const Cube& b) {
  if (!opts_.domain) return;
  sticky_cube_ = b;
  install_sticky(b);
  ++stats_.domain_closures;
}

void FrameSolver::unset_domain() {
  if (!opts_.domain) return;
  sticky_cube_.reset();
  solver_->domain().unset_sticky();
}

}  // namespace gipsat

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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sat/branching.hpp"
#include "sat/clause.hpp"
#include "sat/domain.hpp"
#include "sat/types.hpp"

namespace sat {

struct SolverOptions {
  bool bucket_branching = true;
  std::uint32_t num_buckets = 15;
  double var_decay = 0.95;
  double clause_decay = 0.999;
  std::uint32_t restart_base = 100;   // conflicts per Luby unit
  std::uint32_t min_learned_limit = 4000;
  double learned_limit_growth = 1.1;
  bool minimize = true;               // recursive self-subsuming minimization
  bool track_ancestry = false;        // record whether learned clauses descend from temporary clauses
  bool profile_branching = false;     // time spent in push/pop/bump
};

struct SolverStats {
  std::uint64_t solves = 0;
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t learned = 0;
  std::uint64_t restarts = 0;
  std::uint64_t reductions = 0;
  std::uint64_t removed_learned = 0;
  std::uint64_t purged = 0;
  std::uint64_t collections = 0;
  // Temporary-clause ancestry audit (only with track_ancestry).
  std::uint64_t ancestry_checked = 0;
  std::uint64_t ancestry_derived = 0;
  std::uint64_t ancestry_violations = 0;
  std::uint64_t negated_activation = 0;
  std::uint64_t purge_leaks = 0;
  double branching_seconds = 0.0;
};

struct Watcher {
  CRef cref;
  Lit blocker;
};

// Incremental CDCL solver with assumption-based solving, UNSAT cores, a variable
// domain that restricts both decisions and propagation, and temporary clauses
// guarded by one reusable activation variable.
class Solver {
 public:
  explicit Solver(SolverOptions opts = {});
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  Var new_var();
  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(assigns_.size()); }

  // Attaches a clause at decision level 0. Duplicate literals are removed and
  // root-level false literals dropped. Returns kNoCRef for units, satisfied
  // clauses and root conflicts (the latter clears okay()).
  CRef add_clause(std::span<const Lit> lits, ClauseKind kind = ClauseKind::Origin);
  CRef add_clause(std::initializer_list<Lit> lits, ClauseKind kind = ClauseKind::Origin) {
    return add_clause(std::span<const Lit>(lits.begin(), lits.size()), kind);
  }
  bool okay() const { return ok_; }

  SatResult solve(std::span<const Lit> assumptions = {});
  SatResult solve(std::initializer_list<Lit> assumptions) {
    return solve(std::span<const Lit>(assumptions.begin(), assumptions.size()));
  }
  void set_conflict_budget(std::int64_t conflicts) { conflict_budget_ = conflicts; }

  LBool value(Var v) const { return assigns_[v]; }
  LBool value(Lit l) const { return lit_value(assigns_[l.var()], l); }

  // Model of the last SAT answer; valid until the next attach, solve or purge.
  bool model_valid() const { return model_valid_; }
  LBool model_value(Var v) const;
  LBool model_value(Lit l) const { return lit_value(model_value(l.var()), l); }
  std::vector<LBool> model() const;

  // Subset of the last assumptions that is already unsatisfiable.
  const LitVec& unsat_core() const;

  // Temporary clauses --------------------------------------------------------

  // The reusable activation variable (allocated on first use, always in domain).
  Var activation_var();
  bool has_activation_var() const { return act_var_ != kNoVar; }
  // Attaches c ∨ a for every c; the caller must assume the returned literal ¬a.
  Lit install_temporary(std::span<const LitVec> clauses);
  Lit install_temporary(const LitVec& clause) { return install_temporary(std::span<const LitVec>(&clause, 1)); }
  bool temporary_installed() const { return temp_installed_; }
  // Removes the temporary clauses and every learned clause containing a.
  void purge_temporary();
  std::size_t tagged_count() const { return tagged_.size(); }

  // Number of literal occurrences of v across all live clauses (full scan).
  std::size_t occurrences(Var v) const;
  std::size_t watch_count(Lit l) const { return watches_[l.code()].size(); }

  Domain& domain() { return domain_; }
  const Domain& domain() const { return domain_; }
  Branching& branching() { return branching_; }
  const Branching& branching() const { return branching_; }
  const SolverStats& stats() const { return stats_; }
  const SolverOptions& options() const { return opts_; }

  // Every live clause is watched exactly by its first two literals.
  bool check_watches(std::string* why = nullptr) const;

  std::size_t num_learned() const { return learnts_.size(); }
  std::size_t num_clauses() const { return clauses_.size(); }
  std::vector<LitVec> learned_clauses() const;
  std::vector<LitVec> all_clauses() const;

  // Low-level search interface ----------------------------------------------

  std::uint32_t decision_level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }
  std::uint32_t level(Var v) const { return level_[v]; }
  CRef reason(Var v) const { return reason_[v]; }
  const LitVec& trail() const { return trail_; }
  const Clause& clause(CRef r) const { return ca_[r]; }

  // Opens a decision level and assigns l.
  void assign_decision(Lit l);
  // Pops branching candidates until an unassigned in-domain variable is found and
  // decides it with its saved phase. False when no candidate remains.
  bool decide();
  // Two-watched-literal propagation restricted to the domain.
  CRef propagate();

  struct Analysis {
    LitVec learned;   // learned[0] is the asserting literal
    std::uint32_t backtrack_level = 0;
    bool from_temp = false;
  };
  Analysis analyze(CRef conflict);

  void backtrack(std::uint32_t level);
  void restart();
  void reduce_learned_db();

 private:
  void attach(CRef cr);
  void detach_strict(CRef cr);
  void unchecked_enqueue(Lit l, CRef from);
  void new_decision_level() { trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size())); }
  CRef propagate_literal(Lit p);
  void note_root_skip(Lit p);
  bool revisit_root();
  void prepare_branching();
  Lit pick_branch();
  void analyze_into(CRef confl, Analysis& out);
  bool lit_redundant(Lit p, std::uint32_t abstract_levels, bool& from_temp);
  std::uint32_t abstract_level(Var v) const { return 1u << (level_[v] & 31u); }
  void analyze_final(Lit p);
  SatResult search(std::int64_t nof_conflicts);
  bool locked(CRef cr) const;
  void clause_bump(Clause& c);
  void clause_decay() { cla_inc_ /= opts_.clause_decay; }
  void record_learned(const Analysis& a);
  void audit_learned(const Analysis& a);
  void clean_watches();
  void collect_garbage();
  std::size_t learned_limit() const;
  void unassign_root(Var v);

  SolverOptions opts_;
  SolverStats stats_;
  bool ok_ = true;

  ClauseArena ca_;
  std::vector<CRef> clauses_;   // origin, lemma and untracked temporary clauses
  std::vector<CRef> learnts_;   // reducible learned clauses
  std::vector<CRef> tagged_;    // learned clauses containing the activation literal
  std::vector<CRef> temp_refs_; // installed temporary clauses
  std::vector<std::vector<Watcher>> watches_;

  std::vector<LBool> assigns_;
  std::vector<std::uint32_t> level_;
  std::vector<CRef> reason_;
  std::vector<std::uint8_t> phase_;
  std::vector<std::uint8_t> seen_;
  LitVec trail_;
  std::vector<std::uint32_t> trail_lim_;
  std::size_t qhead_ = 0;

  LitVec root_revisit_;
  std::vector<std::uint8_t> root_revisit_flag_;
  bool discarded_ = false;

  Branching branching_;
  Domain domain_;

  LitVec assumptions_;
  LitVec core_;
  SatResult last_result_ = SatResult::Unknown;
  bool model_valid_ = false;

  Var act_var_ = kNoVar;
  bool temp_installed_ = false;

  double cla_inc_ = 1.0;
  double learned_growth_ = 1.0;
  std::int64_t conflict_budget_ = -1;
  std::uint64_t solve_conflicts_ = 0;

  LitVec analyze_stack_;
  LitVec analyze_toclear_;
  std::vector<Var> to_bump_;
};

}  // namespace sat

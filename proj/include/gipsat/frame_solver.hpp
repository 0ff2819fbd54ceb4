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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "aig/transys.hpp"
#include "sat/solver.hpp"

namespace gipsat {

using sat::Lit;
using sat::LitVec;
using sat::SatResult;
using sat::Var;

// A cube or clause over state variables, sorted by variable.
using Cube = LitVec;

struct FrameOptions {
  bool domain = true;             // restrict decide/propagate to the query's domain
  bool buckets = true;            // bucket VSIDS instead of a binary heap
  bool reuse_activation = true;   // one activation variable for every temporary clause
  std::uint32_t num_buckets = 15;
  std::uint32_t reset_interval = 1000;  // legacy mode: rebuild after this many activation variables
  bool track_ancestry = false;
  bool profile_branching = false;
};

enum class QueryKind : std::uint8_t { Gen = 0, Block = 1, Push = 2, Bad = 3 };
inline constexpr std::size_t kNumQueryKinds = 4;
const char* to_string(QueryKind k);

struct KindStats {
  std::uint64_t calls = 0;
  std::uint64_t sat = 0;
  double seconds = 0.0;
  std::uint64_t cube_literals = 0;
};

struct FrameStats {
  std::array<KindStats, kNumQueryKinds> kinds{};
  std::uint64_t duplicate_lemmas = 0;
  std::uint64_t resets = 0;
  std::uint64_t activation_vars = 0;    // allocated over the lifetime, across resets
  std::uint64_t domain_closures = 0;
  double domain_fraction_sum = 0.0;     // |domain| / |vars| summed over solves
  std::uint64_t domain_samples = 0;
  std::uint32_t peak_vars = 0;
};

struct Predecessor {
  Cube state;
  Cube inputs;
};

// sat(lemmas ∧ T [∧ I]) with the query helpers of IC3. Every frame owns one.
class FrameSolver {
 public:
  FrameSolver(const aig::TransitionSystem& sys, std::uint32_t level, FrameOptions opts = {});

  std::uint32_t level() const { return level_; }
  const aig::TransitionSystem& system() const { return sys_; }
  const FrameOptions& options() const { return opts_; }

  // The lemma is a clause over state variables. Duplicates are attached again
  // and counted.
  void add_lemma(const LitVec& lemma);
  const std::vector<LitVec>& lemmas() const { return lemmas_; }

  // sat(F ∧ constraint ∧ assumption) within COI(droot) ∪ V(F).
  SatResult solve(std::span<const Lit> assumption, const LitVec* constraint, std::span<const Lit> droot,
                  QueryKind kind);
  // sat(F ∧ ¬c ∧ T ∧ c'): SAT iff the cube c has a predecessor outside c.
  SatResult relind(const Cube& c, QueryKind kind);
  // Sub-cube of the last relind cube that is still relatively inductive and disjoint from I.
  Cube inductive_core() const;
  SatResult has_bad();
  Predecessor get_predecessor() const;

  // Keeps the domain V(F) ∪ COI(b ∪ b') across solves until unset_domain.
  void set_domain(const Cube& b);
  void unset_domain();

  // Syntactic check that the cube contradicts the initial cube.
  bool excludes_init(const Cube& c) const;

  sat::Solver& solver() { return *solver_; }
  const sat::Solver& solver() const { return *solver_; }
  const FrameStats& stats() const { return stats_; }
  sat::SolverStats solver_stats() const;   // accumulated across legacy resets
  bool okay() const { return solver_->okay(); }

 private:
  void build();
  void rebuild();
  void install_sticky(const Cube& b);
  void snapshot_model();
  Lit primed(Lit l) const { return sys_.prime(l); }

  const aig::TransitionSystem& sys_;
  std::uint32_t level_;
  FrameOptions opts_;
  std::unique_ptr<sat::Solver> solver_;
  sat::SolverStats retired_;   // statistics of solvers discarded by legacy resets
  std::vector<LitVec> lemmas_;
  std::set<LitVec> lemma_set_;
  std::vector<std::int8_t> init_of_;   // per variable: -1 unconstrained, else the initial value
  std::uint32_t legacy_since_reset_ = 0;
  std::optional<Cube> sticky_cube_;   // argument of the active set_domain

  SatResult last_result_ = SatResult::Unknown;
  Cube last_cube_;
  LitVec last_core_;
  Predecessor last_pred_;
  FrameStats stats_;
};

}  // namespace gipsat

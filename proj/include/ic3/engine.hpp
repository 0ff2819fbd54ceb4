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

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aig/transys.hpp"
#include "gipsat/frame_solver.hpp"

namespace ic3 {

using gipsat::Cube;
using gipsat::QueryKind;
using sat::Lit;
using sat::LitVec;
using sat::SatResult;

struct Limits {
  double time_seconds = 0.0;        // 0: unlimited
  std::size_t memory_mb = 0;        // 0: unlimited (peak resident set size)
  std::size_t max_obligations = 0;  // 0: unlimited
};

struct EngineOptions {
  gipsat::FrameOptions frame;
  Limits limits;
  bool log_queries = false;
};

enum class Verdict { Safe, Unsafe, Unknown };
const char* to_string(Verdict v);

struct TraceStep {
  Cube state;
  Cube inputs;
};

struct Result {
  Verdict verdict = Verdict::Unknown;
  std::vector<LitVec> invariant;   // lemmas; the property itself is implicit
  std::vector<TraceStep> trace;    // initial state first, bad state last
  std::uint32_t depth = 0;         // number of frames when the run ended
  std::string reason;              // why the run is Unknown
};

struct QueryRecord {
  std::uint32_t level;
  std::size_t lemma_count;   // lemmas attached to that frame's solver at query time
  QueryKind kind;
  Cube cube;                 // empty for bad queries
  SatResult verdict;
};

struct EngineStats {
  std::array<gipsat::KindStats, gipsat::kNumQueryKinds> kinds{};
  sat::SolverStats solver;
  std::uint64_t lemmas = 0;
  std::uint64_t pushed = 0;
  std::uint64_t subsumed = 0;
  std::uint64_t obligations = 0;
  std::uint64_t resets = 0;
  std::uint64_t activation_vars = 0;
  std::uint64_t duplicate_lemmas = 0;
  std::uint64_t domain_closures = 0;
  double domain_fraction_sum = 0.0;
  std::uint64_t domain_samples = 0;
  std::uint32_t peak_vars = 0;
  std::uint32_t frames = 0;
  double seconds = 0.0;

  std::uint64_t total_calls() const;
  double domain_fraction() const { return domain_samples ? domain_fraction_sum / domain_samples : 0.0; }
};

class Engine {
 public:
  Engine(const aig::TransitionSystem& sys, EngineOptions opts = {});
  ~Engine();

  Result check();

  // Step interface. reset(k) discards all state and creates frames 0..k with
  // empty lemma sets.
  void reset(std::uint32_t k);
  // Blocks the cube at the given level, recursively. False when a
  // counterexample was found; it is then available from counterexample().
  bool block_cube(const Cube& c, std::uint32_t level, const Cube& inputs = {});
  // Drops literals of b while it stays relatively inductive to F_{level-1}.
  Cube generalize(Cube b, std::uint32_t level);
  // Pushes lemmas forward through frames 1..k-1; true when some F_i = F_{i+1},
  // in which case invariant() holds the fixpoint lemmas.
  bool propagate(std::uint32_t k);
  std::vector<TraceStep> counterexample() const;
  const std::vector<LitVec>& invariant() const { return invariant_; }

  std::size_t num_frames() const { return frames_.size(); }
  const gipsat::FrameSolver& frame(std::size_t i) const { return *frames_[i]; }
  // Non-subsumed lemmas of F_i (i ≥ 1).
  std::vector<LitVec> frame_lemmas(std::size_t i) const;
  const std::vector<QueryRecord>& query_log() const { return log_; }
  EngineStats stats() const;

 private:
  struct Obligation {
    Cube cube;
    Cube inputs;
    std::uint32_t level;
    std::int64_t successor;   // index into obligations_, -1 for the bad state
  };
  struct LimitReached {
    std::string what;
  };

  void check_limits();
  void new_frame();
  SatResult relind_at(std::uint32_t level, const Cube& c, QueryKind kind);
  SatResult has_bad_at(std::uint32_t level);
  // False: a counterexample rooted at cex_ was found.
  bool block(std::size_t root);
  void add_lemma(const Cube& blocked, std::uint32_t level);
  std::vector<TraceStep> build_trace(std::size_t start) const;

  const aig::TransitionSystem& sys_;
  EngineOptions opts_;
  std::vector<std::unique_ptr<gipsat::FrameSolver>> frames_;
  std::vector<std::vector<LitVec>> delta_;   // F_i = ∪_{j ≥ i} delta_j
  std::vector<Obligation> obligations_;
  std::vector<QueryRecord> log_;
  std::int64_t cex_ = -1;
  std::vector<LitVec> invariant_;
  std::uint64_t pushed_ = 0;
  std::uint64_t subsumed_ = 0;
  std::uint64_t lemma_count_ = 0;
  std::chrono::steady_clock::time_point start_;
  double seconds_ = 0.0;
};

// Syntactic subsumption between clauses sorted by literal: a ⊆ b.
bool subsumes(const LitVec& a, const LitVec& b);

}  // namespace ic3

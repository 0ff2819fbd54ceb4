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

#include "ic3/engine.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace ic3 {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Safe: return "safe";
    case Verdict::Unsafe: return "unsafe";
    default: return "unknown";
  }
}

std::uint64_t EngineStats::total_calls() const {
  std::uint64_t n = 0;
  for (const auto& k : kinds) n += k.calls;
  return n;
}

bool subsumes(const LitVec& a, const LitVec& b) {
  if (a.size() > b.size()) return false;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

LitVec negate(const Cube& c) {
  LitVec out;
  out.reserve(c.size());
  for (Lit l : c) out.push_back(~l);
  return out;
}

}  // namespace

Engine::Engine(const aig::TransitionSystem& sys, EngineOptions opts) : sys_(sys), opts_(opts) {}
Engine::~Engine() = default;

void Engine::check_limits() {
  const Limits& lim = opts_.limits;
  if (lim.time_seconds > 0) {
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (t > lim.time_seconds) throw LimitReached{"time limit"};
  }
  if (lim.memory_mb > 0) {
    rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    if (static_cast<std::size_t>(ru.ru_maxrss) / 1024 > lim.memory_mb) throw LimitReached{"memory limit"};
  }
}

void Engine::new_frame() {
  const auto level = static_cast<std::uint32_t>(frames_.size());
  frames_.push_back(std::make_unique<gipsat::FrameSolver>(sys_, level, opts_.frame));
  delta_.emplace_back();
}

SatResult Engine::relind_at(std::uint32_t level, const Cube& c, QueryKind kind) {
  check_limits();
  gipsat::FrameSolver& f = *frames_[level];
  const std::size_t lemmas = f.lemmas().size();
  const SatResult r = f.relind(c, kind);
  if (opts_.log_queries) log_.push_back({level, lemmas, kind, c, r});
  return r;
}

SatResult Engine::has_bad_at(std::uint32_t level) {
  check_limits();
  gipsat::FrameSolver& f = *frames_[level];
  const std::size_t lemmas = f.lemmas().size();
  const SatResult r = f.has_bad();
  if (opts_.log_queries) log_.push_back({level, lemmas, QueryKind::Bad, {}, r});
  return r;
}

std::vector<LitVec> Engine::frame_lemmas(std::size_t i) const {
  std::vector<LitVec> out;
  for (std::size_t j = std::max<std::size_t>(i, 1); j < delta_.size(); ++j)
    out.insert(out.end(), delta_[j].begin(), delta_[j].end());
  return out;
}

Cube Engine::generalize(Cube b, std::uint32_t level) {
  gipsat::FrameSolver& f = *frames_[level - 1];
  f.set_domain(b);
  const Cube original = b;
  for (Lit l : original) {
    auto it = std::find(b.begin(), b.end(), l);
    if (it == b.end()) continue;
    Cube cand;
    cand.reserve(b.size() - 1);
    for (Lit x : b)
      if (x != l) cand.push_back(x);
    if (cand.empty() || !f.excludes_init(cand)) continue;
    if (relind_at(level - 1, cand, QueryKind::Gen) == SatResult::Unsat) {
      b = f.inductive_core();
      f.set_domain(b);
    }
  }
  f.unset_domain();
  return b;
}

void Engine::add_lemma(const Cube& blocked, std::uint32_t level) {
  LitVec lemma = negate(blocked);
  std::sort(lemma.begin(), lemma.end());
  for (std::uint32_t j = 1; j <= level; ++j) {
    auto& d = delta_[j];
    const std::size_t before = d.size();
    std::erase_if(d, [&](const LitVec& old) { return subsumes(lemma, old); });
    subsumed_ += before - d.size();
  }
  delta_[level].push_back(lemma);
  for (std::uint32_t j = 1; j <= level; ++j) frames_[j]->add_lemma(lemma);
  ++lemma_count_;
}

bool Engine::block(std::size_t root) {
  using Entry = std::tuple<std::uint32_t, std::uint64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::uint64_t seq = 0;
  std::size_t created = 0;
  queue.push({obligations_[root].level, seq++, root});
  const auto k = static_cast<std::uint32_t>(frames_.size() - 1);

  while (!queue.empty()) {
    const auto [level, s, idx] = queue.top();
    (void)s;
    if (level == 0) {
      cex_ = static_cast<std::int64_t>(idx);
      return false;
    }
    const Cube cube = obligations_[idx].cube;
    if (relind_at(level - 1, cube, QueryKind::Block) == SatResult::Sat) {
      gipsat::Predecessor p = frames_[level - 1]->get_predecessor();
      const bool initial = !frames_[level - 1]->excludes_init(p.state);
      obligations_.push_back({std::move(p.state), std::move(p.inputs), level - 1, static_cast<std::int64_t>(idx)});
      const std::size_t pi = obligations_.size() - 1;
      if (initial) {
        // Every completion of the predecessor reaches the cube, and one of them is initial.
        cex_ = static_cast<std::int64_t>(pi);
        return false;
      }
      if (opts_.limits.max_obligations && ++created > opts_.limits.max_obligations)
        throw LimitReached{"obligation limit"};
      queue.push({level - 1, seq++, pi});
      continue;
    }
    queue.pop();
    const Cube core = frames_[level - 1]->inductive_core();
    const Cube g = generalize(core, level);
    add_lemma(g, level);
    if (level + 1 <= k) {
      obligations_[idx].level = level + 1;
      queue.push({level + 1, seq++, idx});
    }
  }
  return true;
}

bool Engine::propagate(std::uint32_t k) {
  for (std::uint32_t i = 1; i < k; ++i) {
    const std::vector<LitVec> candidates = delta_[i];
    for (const LitVec& c : candidates) {
      if (relind_at(i, negate(c), QueryKind::Push) != SatResult::Unsat) continue;
      auto it = std::find(delta_[i].begin(), delta_[i].end(), c);
      if (it == delta_[i].end()) continue;
      delta_[i].erase(it);
      delta_[i + 1].push_back(c);
      frames_[i + 1]->add_lemma(c);
      ++pushed_;
    }
    if (delta_[i].empty()) {
      invariant_ = frame_lemmas(i + 1);
      return true;
    }
  }
  return false;
}

std::vector<TraceStep> Engine::build_trace(std::size_t start) const {
  std::vector<TraceStep> trace;
  for (auto i = static_cast<std::int64_t>(start); i >= 0; i = obligations_[static_cast<std::size_t>(i)].successor) {
    const Obligation& o = obligations_[static_cast<std::size_t>(i)];
    trace.push_back({o.cube, o.inputs});
  }
  return trace;
}

void Engine::reset(std::uint32_t k) {
  start_ = std::chrono::steady_clock::now();
  frames_.clear();
  delta_.clear();
  obligations_.clear();
  log_.clear();
  invariant_.clear();
  cex_ = -1;
  pushed_ = subsumed_ = lemma_count_ = 0;
  for (std::uint32_t i = 0; i <= k; ++i) new_frame();
}

bool Engine::block_cube(const Cube& c, std::uint32_t level, const Cube& inputs) {
  if (level >= frames_.size()) throw std::out_of_range("block_cube: level beyond the last frame");
  obligations_.push_back({c, inputs, level, -1});
  const std::size_t root = obligations_.size() - 1;
  if (level == 0) {
    cex_ = static_cast<std::int64_t>(root);
    return false;
  }
  return block(root);
}

std::vector<TraceStep> Engine::counterexample() const {
  if (cex_ < 0) return {};
  return build_trace(static_cast<std::size_t>(cex_));
}

Result Engine::check() {
  Result res;
  auto finish = [&]() {
    seconds_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    res.depth = static_cast<std::uint32_t>(frames_.size());
    return res;
  };
  try {
    reset(0);
    if (has_bad_at(0) == SatResult::Sat) {
      const gipsat::Predecessor p = frames_[0]->get_predecessor();
      res.verdict = Verdict::Unsafe;
      res.trace = {{p.state, p.inputs}};
      return finish();
    }
    new_frame();
    for (;;) {
      const auto k = static_cast<std::uint32_t>(frames_.size() - 1);
      while (has_bad_at(k) == SatResult::Sat) {
        gipsat::Predecessor p = frames_[k]->get_predecessor();
        const bool initial = !frames_[k]->excludes_init(p.state);
        obligations_.push_back({std::move(p.state), std::move(p.inputs), k, -1});
        const std::size_t root = obligations_.size() - 1;
        if (initial || !block(root)) {
          res.verdict = Verdict::Unsafe;
          res.trace = build_trace(initial ? root : static_cast<std::size_t>(cex_));
          return finish();
        }
      }
      new_frame();
      if (propagate(k + 1)) {
        res.verdict = Verdict::Safe;
        res.invariant = invariant_;
        return finish();
      }
    }
  } catch (const LimitReached& e) {
    res.verdict = Verdict::Unknown;
    res.reason = e.what;
  }
  return finish();
}

EngineStats Engine::stats() const {
  EngineStats s;
  for (const auto& f : frames_) {
    const gipsat::FrameStats& fs = f->stats();
    for (std::size_t k = 0; k < gipsat::kNumQueryKinds; ++k) {
      s.kinds[k].calls += fs.kinds[k].calls;
      s.kinds[k].sat += fs.kinds[k].sat;
      s.kinds[k].seconds += fs.kinds[k].seconds;
      s.kinds[k].cube_literals += fs.kinds[k].cube_literals;
    }
    const sat::SolverStats ss = f->solver_stats();
    s.solver.solves += ss.solves;
    s.solver.decisions += ss.decisions;
    s.solver.propagations += ss.propagations;
    s.solver.conflicts += ss.conflicts;
    s.solver.learned += ss.learned;
    s.solver.restarts += ss.restarts;
    s.solver.reductions += ss.reductions;
    s.solver.removed_learned += ss.removed_learned;
    s.solver.purged += ss.purged;
    s.solver.collections += ss.collections;
    s.solver.ancestry_checked += ss.ancestry_checked;
    s.solver.ancestry_derived += ss.ancestry_derived;
    s.solver.ancestry_violations += ss.ancestry_violations;
    s.solver.negated_activation += ss.negated_activation;
    s.solver.purge_leaks += ss.purge_leaks;
    s.solver.branching_seconds += ss.branching_seconds;
    s.resets += fs.resets;
    s.activation_vars += fs.activation_vars;
    s.duplicate_lemmas += fs.duplicate_lemmas;
    s.domain_closures += fs.domain_closures;
    s.domain_fraction_sum += fs.domain_fraction_sum;
    s.domain_samples += fs.domain_samples;
    s.peak_vars = std::max(s.peak_vars, fs.peak_vars);
  }
  s.lemmas = lemma_count_;
  s.pushed = pushed_;
  s.subsumed = subsumed_;
  s.obligations = obligations_.size();
  s.frames = static_cast<std::uint32_t>(frames_.size());
  s.seconds = seconds_;
  return s;
}

}  // namespace ic3

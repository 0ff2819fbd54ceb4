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

#include "ic3/difftest.hpp"

#include <map>
#include <memory>
#include <sstream>

namespace ic3 {

bool DiffReport::ok() const {
  if (reproducer) return false;
  for (const AxisReport& a : axes)
    if (a.mismatches) return false;
  return true;
}

std::vector<AxisReport> standard_axes(const gipsat::FrameOptions& base, bool fault_on_domain_axis) {
  std::vector<AxisReport> axes;
  auto add = [&](const std::string& name, gipsat::FrameOptions o, bool fault) {
    AxisReport a;
    a.name = name;
    a.options = o;
    a.fault = fault;
    axes.push_back(a);
  };
  gipsat::FrameOptions on = base;
  on.domain = true;
  add("dm-on", on, fault_on_domain_axis);
  gipsat::FrameOptions off = base;
  off.domain = false;
  add("dm-off", off, false);
  gipsat::FrameOptions nobkt = base;
  nobkt.buckets = false;
  add("bkt-off", nobkt, false);
  gipsat::FrameOptions nowr = base;
  nowr.reuse_activation = false;
  add("wr-off", nowr, false);
  return axes;
}

namespace {

std::string cube_text(const Cube& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i].dimacs();
  return os.str();
}

std::string reproducer(const AxisReport& axis, const QueryRecord& q, const std::vector<LitVec>& lemmas,
                       SatResult got) {
  std::ostringstream os;
  os << "axis " << axis.name << ": " << gipsat::to_string(q.kind) << " query at frame " << q.level
     << " expected " << sat::to_string(q.verdict) << " got " << sat::to_string(got) << '\n';
  os << "cube: " << cube_text(q.cube) << '\n';
  os << "frame lemmas (" << q.lemma_count << "):\n";
  for (std::size_t i = 0; i < q.lemma_count && i < lemmas.size(); ++i) os << "  " << cube_text(lemmas[i]) << '\n';
  return os.str();
}

}  // namespace

DiffReport replay_queries(const aig::TransitionSystem& sys, const Engine& engine, std::vector<AxisReport> axes,
                          std::size_t max_queries) {
  DiffReport report;
  const auto& log = engine.query_log();
  report.logged = log.size();
  const std::size_t n = max_queries == 0 ? log.size() : std::min(max_queries, log.size());
  for (AxisReport& axis : axes) {
    std::map<std::uint32_t, std::unique_ptr<gipsat::FrameSolver>> frames;
    std::map<std::uint32_t, std::size_t> fed;
    for (std::size_t qi = 0; qi < n; ++qi) {
      const QueryRecord& q = log[qi];
      auto& f = frames[q.level];
      if (!f) {
        f = std::make_unique<gipsat::FrameSolver>(sys, q.level, axis.options);
        f->solver().domain().set_fault_drop_deepest(axis.fault);
      }
      const std::vector<LitVec>& lemmas = engine.frame(q.level).lemmas();
      for (std::size_t& k = fed[q.level]; k < q.lemma_count; ++k) {
        f->add_lemma(lemmas[k]);
        // Legacy resets build a new solver; keep the fault setting on it.
        f->solver().domain().set_fault_drop_deepest(axis.fault);
      }
      const SatResult got = q.kind == QueryKind::Bad ? f->has_bad() : f->relind(q.cube, q.kind);
      f->solver().domain().set_fault_drop_deepest(axis.fault);
      ++axis.replayed;
      if (got != q.verdict) {
        ++axis.mismatches;
        if (!report.reproducer) report.reproducer = reproducer(axis, q, lemmas, got);
      }
    }
    double frac_sum = 0.0;
    std::uint64_t samples = 0;
    for (const auto& [level, f] : frames) {
      const sat::SolverStats s = f->solver_stats();
      axis.decisions += s.decisions;
      axis.propagations += s.propagations;
      frac_sum += f->stats().domain_fraction_sum;
      samples += f->stats().domain_samples;
    }
    axis.domain_fraction = samples ? frac_sum / static_cast<double>(samples) : 0.0;
  }
  report.axes = std::move(axes);
  return report;
}

DiffReport difftest(const aig::TransitionSystem& sys, EngineOptions opts, std::size_t max_queries, bool fault) {
  opts.log_queries = true;
  Engine engine(sys, opts);
  const Result r = engine.check();
  DiffReport report = replay_queries(sys, engine, standard_axes(opts.frame, fault), max_queries);
  report.verdict = r.verdict;
  return report;
}

std::string format_report(const DiffReport& r) {
  std::ostringstream os;
  os << "difftest verdict=" << to_string(r.verdict) << " logged=" << r.logged << '\n';
  for (const AxisReport& a : r.axes)
    os << "axis " << a.name << (a.fault ? " (fault)" : "") << ": replayed=" << a.replayed
       << " mismatches=" << a.mismatches << " decisions=" << a.decisions << " propagations=" << a.propagations
       << " domain_fraction=" << a.domain_fraction << '\n';
  if (r.reproducer) os << "first mismatch:\n" << *r.reproducer;
  os << (r.ok() ? "difftest OK\n" : "difftest FAILED\n");
  return os.str();
}

}  // namespace ic3

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

#include <optional>
#include <string>
#include <vector>

#include "ic3/engine.hpp"

namespace ic3 {

struct AxisReport {
  std::string name;
  gipsat::FrameOptions options;
  bool fault = false;               // replay with a deliberately corrupted domain
  std::size_t replayed = 0;
  std::size_t mismatches = 0;
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  double domain_fraction = 0.0;     // mean over solves, domain axes only
};

struct DiffReport {
  Verdict verdict = Verdict::Unknown;
  std::size_t logged = 0;
  std::vector<AxisReport> axes;
  std::optional<std::string> reproducer;   // first mismatch in a self-contained form
  bool ok() const;
};

// The standard comparison axes relative to base: dm on, dm off, bkt off, wr off.
std::vector<AxisReport> standard_axes(const gipsat::FrameOptions& base, bool fault_on_domain_axis = false);

// Replays up to max_queries logged queries (0 = all) on fresh frame solvers per
// axis, feeding each frame the same lemmas it had when the query was issued.
DiffReport replay_queries(const aig::TransitionSystem& sys, const Engine& engine, std::vector<AxisReport> axes,
                          std::size_t max_queries);

// Runs the engine with query logging and replays the log on the standard axes.
DiffReport difftest(const aig::TransitionSystem& sys, EngineOptions opts, std::size_t max_queries,
                    bool fault = false);

std::string format_report(const DiffReport& r);

}  // namespace ic3

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

#include "ic3/stats.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace ic3 {

std::vector<StatEntry> stat_entries(const EngineStats& s) {
  std::vector<StatEntry> out;
  auto count = [&](const std::string& k, double v) { out.push_back({k, v, true}); };
  auto real = [&](const std::string& k, double v) { out.push_back({k, v, false}); };
  for (std::size_t i = 0; i < gipsat::kNumQueryKinds; ++i) {
    const gipsat::KindStats& ks = s.kinds[i];
    const std::string p = gipsat::to_string(static_cast<QueryKind>(i));
    count(p + ".calls", static_cast<double>(ks.calls));
    count(p + ".sat", static_cast<double>(ks.sat));
    real(p + ".seconds", ks.seconds);
    real(p + ".mean_seconds", ks.calls ? ks.seconds / static_cast<double>(ks.calls) : 0.0);
    if (static_cast<QueryKind>(i) != QueryKind::Bad)
      real(p + ".mean_cube", ks.calls ? static_cast<double>(ks.cube_literals) / static_cast<double>(ks.calls) : 0.0);
  }
  count("solves", static_cast<double>(s.total_calls()));
  count("decisions", static_cast<double>(s.solver.decisions));
  count("propagations", static_cast<double>(s.solver.propagations));
  count("conflicts", static_cast<double>(s.solver.conflicts));
  count("learned", static_cast<double>(s.solver.learned));
  count("purged", static_cast<double>(s.solver.purged));
  count("restarts", static_cast<double>(s.solver.restarts));
  count("lemmas", static_cast<double>(s.lemmas));
  count("pushed", static_cast<double>(s.pushed));
  count("subsumed", static_cast<double>(s.subsumed));
  count("obligations", static_cast<double>(s.obligations));
  count("frames", static_cast<double>(s.frames));
  count("resets", static_cast<double>(s.resets));
  count("activation_vars", static_cast<double>(s.activation_vars));
  count("peak_vars", static_cast<double>(s.peak_vars));
  real("domain_fraction", s.domain_fraction());
  real("branching_seconds", s.solver.branching_seconds);
  real("branching_fraction", s.seconds > 0 ? s.solver.branching_seconds / s.seconds : 0.0);
  real("seconds", s.seconds);
  return out;
}

std::string format_stats(const std::vector<StatEntry>& entries) {
  std::ostringstream os;
  for (const StatEntry& e : entries) {
    os << e.key << '=';
    if (e.integral)
      os << static_cast<unsigned long long>(e.value);
    else
      os << std::setprecision(std::numeric_limits<double>::max_digits10) << e.value;
    os << '\n';
  }
  return os.str();
}

}  // namespace ic3

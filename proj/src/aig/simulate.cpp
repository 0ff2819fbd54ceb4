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

#include "aig/simulate.hpp"

#include <string>

namespace aig {

std::vector<std::uint8_t> evaluate(const Aig& g, const std::vector<std::uint8_t>& latch_values,
                                   const std::vector<std::uint8_t>& input_values) {
  std::vector<std::uint8_t> val(g.num_nodes(), 0);
  for (std::size_t k = 0; k < g.inputs.size(); ++k) val[g.inputs[k]] = input_values[k] ? 1 : 0;
  for (std::size_t k = 0; k < g.latches.size(); ++k) val[g.latches[k].node] = latch_values[k] ? 1 : 0;
  for (const AndGate& a : g.ands) val[a.node] = (value_of(val, a.fanin0) && value_of(val, a.fanin1)) ? 1 : 0;
  return val;
}

std::vector<std::uint8_t> next_state(const Aig& g, const std::vector<std::uint8_t>& values) {
  std::vector<std::uint8_t> s(g.latches.size());
  for (std::size_t k = 0; k < g.latches.size(); ++k) s[k] = value_of(values, g.latches[k].next) ? 1 : 0;
  return s;
}

ReplayResult replay(const Aig& g, const Trace& t, std::optional<std::size_t> property) {
  ReplayResult r;
  if (t.init.size() != g.latches.size()) {
    r.error = "initial state has " + std::to_string(t.init.size()) + " bits, expected " +
              std::to_string(g.latches.size());
    return r;
  }
  for (std::size_t k = 0; k < g.latches.size(); ++k) {
    const LatchInit init = g.latches[k].init;
    if ((init == LatchInit::Zero && t.init[k]) || (init == LatchInit::One && !t.init[k])) {
      r.error = "latch " + std::to_string(k) + " violates its reset value";
      return r;
    }
  }
  if (t.inputs.empty()) {
    r.error = "trace has no steps";
    return r;
  }
  std::vector<std::uint8_t> state = t.init;
  for (std::size_t step = 0; step < t.inputs.size(); ++step) {
    if (t.inputs[step].size() != g.inputs.size()) {
      r.error = "input vector " + std::to_string(step) + " has the wrong width";
      return r;
    }
    const auto val = evaluate(g, state, t.inputs[step]);
    if (step + 1 == t.inputs.size()) {
      for (std::size_t b = 0; b < g.bads.size(); ++b)
        if ((!property || *property == b) && value_of(val, g.bads[b])) {
          r.ok = true;
          r.bad_index = b;
          return r;
        }
      r.error = "no bad literal holds at the final step";
      return r;
    }
    state = next_state(g, val);
  }
  return r;
}

}  // namespace aig

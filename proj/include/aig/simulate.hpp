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
#include <vector>

#include "aig/aig.hpp"

namespace aig {

// Concrete counterexample: initial latch values and one input vector per step.
struct Trace {
  std::vector<std::uint8_t> init;
  std::vector<std::vector<std::uint8_t>> inputs;
};

// Values of every node for one combinational evaluation.
std::vector<std::uint8_t> evaluate(const Aig& g, const std::vector<std::uint8_t>& latch_values,
                                   const std::vector<std::uint8_t>& input_values);

inline bool value_of(const std::vector<std::uint8_t>& values, AigLit l) {
  return (values[l.index()] != 0) != l.negated();
}

std::vector<std::uint8_t> next_state(const Aig& g, const std::vector<std::uint8_t>& values);

struct ReplayResult {
  bool ok = false;
  std::size_t bad_index = 0;   // first bad asserted at the last step
  std::string error;
};

// Checks that the trace starts in an initial state (free latches may take
// any value) and that some bad literal (or bads[*property]) holds at its final step.
ReplayResult replay(const Aig& g, const Trace& t, std::optional<std::size_t> property = std::nullopt);

}  // namespace aig

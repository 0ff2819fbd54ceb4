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

#include "aig/simulate.hpp"
#include "aig/transys.hpp"
#include "sat/types.hpp"

namespace ic3 {

// AIGER witness: "1", "b<index>", initial latch bits, one input line per step, ".".
std::string format_witness(const aig::Trace& t, std::size_t bad_index);

struct ParsedWitness {
  std::size_t bad_index = 0;
  aig::Trace trace;
};
// Inverse of format_witness; nullopt on malformed text.
std::optional<ParsedWitness> parse_witness(const std::string& text);

// Inductive invariant as DIMACS-style clause lines over AIG node indices,
// one line per lemma followed by the property clause.
std::string format_invariant(const aig::TransitionSystem& sys, const std::vector<sat::LitVec>& invariant);

}  // namespace ic3

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

#include "aig/aig.hpp"
#include "aig/simulate.hpp"
#include "aig/transys.hpp"
#include "ic3/engine.hpp"

namespace ic3 {

struct Check {
  bool ok = true;
  std::string failure;
};

// The three inductive-invariant conditions, each with fresh solvers using the
// classic configuration: I ⇒ INV, INV ∧ T ⇒ INV', INV ⇒ ¬bad.
Check certify_invariant(const aig::TransitionSystem& sys, const std::vector<LitVec>& invariant);

// Total assignment for every step: cube values first, then the reset value, then 0.
aig::Trace concretize(const aig::Aig& g, const aig::TransitionSystem& sys, const std::vector<TraceStep>& trace);

Check certify_trace(const aig::Aig& g, const aig::Trace& t, std::optional<std::size_t> property = std::nullopt);

// Safe results are checked on sys; Unsafe results are replayed on g.
Check verify_result(const aig::Aig& g, const aig::TransitionSystem& sys, const Result& r,
                    std::optional<std::size_t> property = std::nullopt);

}  // namespace ic3

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

#include <random>

#include "aig/aig.hpp"

namespace testkit {

struct RandomAigParams {
  std::uint32_t inputs = 2;
  std::uint32_t latches = 4;
  std::uint32_t ands = 20;
  std::uint32_t bads = 1;
  double p_init_one = 0.2;
  double p_init_free = 0.0;
  double p_constant_fanin = 0.02;
};

// Canonically numbered random circuit. Gates prefer recent fanins so that
// deep cones appear; bads are drawn from the gates.
aig::Aig random_aig(std::mt19937_64& rng, const RandomAigParams& p);

}  // namespace testkit

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

#include "support/random_aig.hpp"

namespace testkit {

aig::Aig random_aig(std::mt19937_64& rng, const RandomAigParams& p) {
  aig::Aig g;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::uint32_t base = p.inputs + p.latches;
  g.max_index = base + p.ands;
  for (std::uint32_t i = 0; i < p.inputs; ++i) g.inputs.push_back(i + 1);

  auto pick = [&](std::uint32_t below) {
    // below = number of usable non-constant nodes (indices 1..below)
    if (below == 0 || coin(rng) < p.p_constant_fanin) return aig::AigLit(0, coin(rng) < 0.5);
    std::uint32_t idx;
    if (below > 4 && coin(rng) < 0.6) {
      std::uniform_int_distribution<std::uint32_t> recent(below > 8 ? below - 8 : 1, below);
      idx = recent(rng);
    } else {
      std::uniform_int_distribution<std::uint32_t> any(1, below);
      idx = any(rng);
    }
    return aig::AigLit(idx, coin(rng) < 0.5);
  };

  for (std::uint32_t k = 0; k < p.ands; ++k) {
    const std::uint32_t node = base + k + 1;
    aig::AigLit a = pick(node - 1), b = pick(node - 1);
    g.ands.push_back({node, a, b});
  }
  for (std::uint32_t k = 0; k < p.latches; ++k) {
    aig::Latch l;
    l.node = p.inputs + k + 1;
    l.next = pick(g.max_index);
    const double r = coin(rng);
    l.init = r < p.p_init_one ? aig::LatchInit::One
             : r < p.p_init_one + p.p_init_free ? aig::LatchInit::Free
                                                : aig::LatchInit::Zero;
    g.latches.push_back(l);
  }
  for (std::uint32_t k = 0; k < p.bads; ++k) {
    if (p.ands == 0) {
      g.bads.push_back(pick(g.max_index));
      continue;
    }
    std::uniform_int_distribution<std::uint32_t> gate(base + 1 + p.ands / 2, base + p.ands);
    g.bads.push_back(aig::AigLit(gate(rng), coin(rng) < 0.5));
  }
  return g;
}

}  // namespace testkit

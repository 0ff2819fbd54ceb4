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

#include "aig/simplify.hpp"

#include <unordered_map>
#include <vector>

namespace aig {

Aig simplify(const Aig& g, SimplifyStats* stats) {
  g.validate();
  SimplifyStats local;
  std::vector<AigLit> map(g.num_nodes());
  for (std::uint32_t v = 0; v < g.num_nodes(); ++v) map[v] = AigLit(v, false);
  auto remap = [&](AigLit l) { return map[l.index()] ^ l.negated(); };

  Aig out;
  out.inputs = g.inputs;
  out.num_justice = g.num_justice;
  out.num_fairness = g.num_fairness;
  out.bads_from_outputs = g.bads_from_outputs;
  std::uint32_t next = static_cast<std::uint32_t>(g.inputs.size() + g.latches.size()) + 1;
  for (std::uint32_t v : g.inputs) next = std::max(next, v + 1);
  for (const Latch& l : g.latches) next = std::max(next, l.node + 1);

  std::unordered_map<std::uint64_t, std::uint32_t> strash;
  for (const AndGate& a : g.ands) {
    AigLit x = remap(a.fanin0), y = remap(a.fanin1);
    if (x > y) std::swap(x, y);
    AigLit r;
    if (x == kFalse || x == ~y) {
      r = kFalse;
      ++local.folded;
    } else if (x == kTrue || x == y) {
      r = y;
      ++local.folded;
    } else {
      const std::uint64_t key = (static_cast<std::uint64_t>(x.code()) << 32) | y.code();
      auto [it, fresh] = strash.try_emplace(key, next);
      if (fresh) {
        out.ands.push_back({next, x, y});
        ++next;
      } else {
        ++local.merged;
      }
      r = AigLit(it->second, false);
    }
    map[a.node] = r;
  }
  out.max_index = next - 1;
  for (const Latch& l : g.latches) out.latches.push_back({l.node, remap(l.next), l.init});
  for (AigLit l : g.outputs) out.outputs.push_back(remap(l));
  for (AigLit l : g.bads) out.bads.push_back(remap(l));
  for (AigLit l : g.constraints) out.constraints.push_back(remap(l));
  if (stats) *stats = local;
  return out;
}

}  // namespace aig

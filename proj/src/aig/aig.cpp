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

#include "aig/aig.hpp"

#include <sstream>
#include <stdexcept>

namespace aig {

void Aig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("aig: " + msg); };
  std::vector<std::uint8_t> kind(num_nodes(), 0);
  auto claim = [&](std::uint32_t node, std::uint8_t k) {
    if (node == 0 || node > max_index) fail("node " + std::to_string(node) + " out of range");
    if (kind[node] != 0) fail("node " + std::to_string(node) + " defined twice");
    kind[node] = k;
  };
  for (std::uint32_t n : inputs) claim(n, 1);
  for (const Latch& l : latches) claim(l.node, 2);
  for (const AndGate& a : ands) {
    claim(a.node, 3);
    if (a.fanin0.index() >= a.node || a.fanin1.index() >= a.node)
      fail("and node " + std::to_string(a.node) + " has a fanin with a larger index");
  }
  auto check_lit = [&](AigLit l, const char* what) {
    if (l.index() > max_index) fail(std::string(what) + " literal out of range");
    if (l.index() != 0 && kind[l.index()] == 0) fail(std::string(what) + " literal refers to an undefined node");
  };
  for (const AndGate& a : ands) {
    check_lit(a.fanin0, "fanin");
    check_lit(a.fanin1, "fanin");
  }
  for (const Latch& l : latches) check_lit(l.next, "next-state");
  for (AigLit l : outputs) check_lit(l, "output");
  for (AigLit l : bads) check_lit(l, "bad");
  for (AigLit l : constraints) check_lit(l, "constraint");
}

std::string summary(const Aig& g) {
  std::ostringstream os;
  os << "M=" << g.max_index << " I=" << g.inputs.size() << " L=" << g.latches.size() << " O=" << g.outputs.size()
     << " A=" << g.ands.size() << " B=" << g.bads.size();
  return os.str();
}

}  // namespace aig

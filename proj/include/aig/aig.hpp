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

#include <cstdint>
#include <string>
#include <vector>

namespace aig {

// AIGER-style literal: 2*index + negated. Index 0 is the constant FALSE node.
class AigLit {
 public:
  constexpr AigLit() = default;
  constexpr AigLit(std::uint32_t index, bool negated) : code_(index * 2 + (negated ? 1u : 0u)) {}
  static constexpr AigLit from_code(std::uint32_t code) {
    AigLit l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t index() const { return code_ >> 1; }
  constexpr bool negated() const { return (code_ & 1u) != 0; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr AigLit operator~() const { return from_code(code_ ^ 1u); }
  constexpr AigLit operator^(bool flip) const { return from_code(code_ ^ (flip ? 1u : 0u)); }
  constexpr bool operator==(const AigLit&) const = default;
  constexpr auto operator<=>(const AigLit&) const = default;

 private:
  std::uint32_t code_ = 0;
};

inline constexpr AigLit kFalse = AigLit(0, false);
inline constexpr AigLit kTrue = AigLit(0, true);

enum class LatchInit : std::uint8_t { Zero, One, Free };

struct Latch {
  std::uint32_t node;
  AigLit next;
  LatchInit init = LatchInit::Zero;
  bool operator==(const Latch&) const = default;
};

struct AndGate {
  std::uint32_t node;
  AigLit fanin0;
  AigLit fanin1;
  bool operator==(const AndGate&) const = default;
};

// Nodes are numbered canonically: inputs 1..I, latches I+1..I+L, and-gates
// afterwards in topological order.
struct Aig {
  std::uint32_t max_index = 0;
  std::vector<std::uint32_t> inputs;
  std::vector<Latch> latches;
  std::vector<AndGate> ands;
  std::vector<AigLit> outputs;
  std::vector<AigLit> bads;         // outputs when the file declares no bad section
  std::vector<AigLit> constraints;  // invariant constraints (not supported by the checker)
  std::size_t num_justice = 0;
  std::size_t num_fairness = 0;
  bool bads_from_outputs = false;

  std::uint32_t num_nodes() const { return max_index + 1; }

  // Throws std::invalid_argument describing the first violated structural invariant.
  void validate() const;

  bool operator==(const Aig&) const = default;
};

// "aag M I L O A" style one-line summary.
std::string summary(const Aig& g);

}  // namespace aig

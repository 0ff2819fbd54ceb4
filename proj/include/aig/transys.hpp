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
#include <span>
#include <vector>

#include "aig/aig.hpp"
#include "sat/types.hpp"

namespace aig {

struct EncodeOptions {
  // Check only bads[property] instead of the disjunction of all bads.
  std::optional<std::size_t> property;
  // Leave latches with an unconstrained reset out of the initial cube
  // (by default they start at 0).
  bool free_unconstrained = false;
};

// CNF view of an AIG. Node k is solver variable k; variable 0 is constant FALSE.
struct TransitionSystem {
  std::uint32_t num_vars = 0;
  std::vector<sat::LitVec> trans_cnf;
  sat::LitVec init_cube;
  sat::Lit bad_lit = sat::Lit(0, false);
  std::vector<sat::Var> state_vars;
  std::vector<sat::Var> input_vars;
  std::vector<sat::Lit> next_root;  // per variable; kUndefLit for non-state variables
  sat::DependencyMap dep;
  std::vector<sat::Var> bad_sources;  // the AIG bad literals' variables (one per checked property)
  std::size_t num_gates_encoded = 0;

  bool is_state(sat::Var v) const { return v < next_root.size() && next_root[v] != sat::kUndefLit; }
  bool is_input(sat::Var v) const { return v < kind_.size() && kind_[v] == 1; }
  // x' for a literal over a state variable.
  sat::Lit prime(sat::Lit l) const { return next_root[l.var()] ^ l.negated(); }
  // Initial value of a state variable, or nullopt when unconstrained.
  std::optional<bool> init_value(sat::Var v) const;

 private:
  friend TransitionSystem tseitin_encode(const Aig&, const EncodeOptions&);
  std::vector<std::uint8_t> kind_;      // 0 other, 1 input, 2 latch
  std::vector<std::int8_t> init_val_;   // -1 none, 0, 1
};

inline sat::Lit to_sat(AigLit l) { return sat::Lit(l.index(), l.negated()); }

TransitionSystem tseitin_encode(const Aig& g, const EncodeOptions& opts = {});

// Least dep-closed variable set containing every root variable, sorted ascending.
std::vector<sat::Var> coi(const TransitionSystem& sys, std::span<const sat::Lit> roots);

}  // namespace aig

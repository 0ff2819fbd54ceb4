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
#include <functional>
#include <limits>
#include <vector>

namespace sat {

using Var = std::uint32_t;
inline constexpr Var kNoVar = std::numeric_limits<Var>::max();

// A literal packs a variable and its polarity; complementing flips the low bit.
class Lit {
 public:
  constexpr Lit() = default;
  constexpr Lit(Var v, bool negated) : code_(v * 2 + (negated ? 1u : 0u)) {}

  static constexpr Lit from_code(std::uint32_t code) {
    Lit l;
    l.code_ = code;
    return l;
  }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negated() const { return (code_ & 1u) != 0; }
  constexpr std::uint32_t code() const { return code_; }

  constexpr Lit operator~() const { return from_code(code_ ^ 1u); }
  constexpr Lit operator^(bool flip) const { return from_code(code_ ^ (flip ? 1u : 0u)); }

  constexpr bool operator==(const Lit&) const = default;
  constexpr auto operator<=>(const Lit&) const = default;

  // Signed DIMACS-style integer, variable v printed as v.
  constexpr long long dimacs() const {
    return negated() ? -static_cast<long long>(var()) : static_cast<long long>(var());
  }

 private:
  std::uint32_t code_ = std::numeric_limits<std::uint32_t>::max();
};

inline constexpr Lit kUndefLit{};

inline constexpr Lit pos_lit(Var v) { return Lit(v, false); }
inline constexpr Lit neg_lit(Var v) { return Lit(v, true); }

using LitVec = std::vector<Lit>;

enum class LBool : std::uint8_t { False = 0, True = 1, Undef = 2 };

inline constexpr LBool lbool_of(bool b) { return b ? LBool::True : LBool::False; }

// Value of a literal given the value of its variable.
inline constexpr LBool lit_value(LBool var_value, Lit l) {
  if (var_value == LBool::Undef) return LBool::Undef;
  return lbool_of((var_value == LBool::True) != l.negated());
}

enum class SatResult { Sat, Unsat, Unknown };

inline const char* to_string(SatResult r) {
  switch (r) {
    case SatResult::Sat: return "SAT";
    case SatResult::Unsat: return "UNSAT";
    default: return "UNKNOWN";
  }
}

// Fanin variables of every variable; leaves map to an empty list.
using DependencyMap = std::vector<std::vector<Var>>;

}  // namespace sat

template <>
struct std::hash<sat::Lit> {
  std::size_t operator()(const sat::Lit& l) const noexcept { return std::hash<std::uint32_t>{}(l.code()); }
};

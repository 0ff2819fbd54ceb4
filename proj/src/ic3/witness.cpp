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

#include "ic3/witness.hpp"

#include <sstream>

namespace ic3 {

std::string format_witness(const aig::Trace& t, std::size_t bad_index) {
  std::ostringstream os;
  os << "1\nb" << bad_index << '\n';
  for (std::uint8_t b : t.init) os << (b ? '1' : '0');
  os << '\n';
  for (const auto& in : t.inputs) {
    for (std::uint8_t b : in) os << (b ? '1' : '0');
    os << '\n';
  }
  os << ".\n";
  return os.str();
}

std::optional<ParsedWitness> parse_witness(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto bits = [](const std::string& s, std::vector<std::uint8_t>& out) {
    for (char ch : s) {
      if (ch != '0' && ch != '1') return false;
      out.push_back(ch == '1' ? 1 : 0);
    }
    return true;
  };
  ParsedWitness w;
  if (!std::getline(is, line) || line != "1") return std::nullopt;
  if (!std::getline(is, line) || line.size() < 2 || line[0] != 'b') return std::nullopt;
  try {
    w.bad_index = std::stoul(line.substr(1));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!std::getline(is, line) || !bits(line, w.trace.init)) return std::nullopt;
  for (;;) {
    if (!std::getline(is, line)) return std::nullopt;
    if (line == ".") break;
    std::vector<std::uint8_t> in;
    if (!bits(line, in)) return std::nullopt;
    w.trace.inputs.push_back(std::move(in));
  }
  return w;
}

std::string format_invariant(const aig::TransitionSystem& sys, const std::vector<sat::LitVec>& invariant) {
  std::ostringstream os;
  const bool trivial_property = sys.bad_lit.var() == 0;
  os << "c inductive invariant over AIG node indices; last clause is the property\n";
  os << "p cnf " << (sys.num_vars > 0 ? sys.num_vars - 1 : 0) << ' '
     << invariant.size() + (trivial_property ? 0 : 1) << '\n';
  for (const sat::LitVec& c : invariant) {
    for (sat::Lit l : c) os << l.dimacs() << ' ';
    os << "0\n";
  }
  if (trivial_property)
    os << "c property holds trivially (bad is constant false)\n";
  else
    os << (~sys.bad_lit).dimacs() << " 0\n";
  return os.str();
}

}  // namespace ic3

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
#include <span>
#include <vector>

#include "sat/types.hpp"

namespace sat {

// Variables eligible for decision and propagation.
//
// The permanent part only grows (lemma variables, initial-state variables, the
// activation variable). The temporary part is the closure of a query's roots under
// the fanin dependency map, installed for one solve or, in sticky mode, until
// explicitly removed. While inactive every variable is in the domain.
class Domain {
 public:
  enum class Membership : std::uint8_t { Out = 0, Permanent = 1, Temporary = 2 };

  void add_var();
  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(flag_.size()); }

  bool contains(Var v) const { return !active_ || flag_[v] != Membership::Out; }
  bool active() const { return active_; }
  bool sticky() const { return sticky_; }
  Membership membership(Var v) const { return flag_[v]; }

  void mark_permanent(std::span<const Var> vars);
  void mark_permanent(Var v) { mark_permanent(std::span<const Var>(&v, 1)); }

  // temporary := (extra ∪ closure(roots)) minus permanent; no-op while sticky.
  void activate_temporary(const DependencyMap& dep, std::span<const Var> extra, std::span<const Lit> roots);
  // Clears the temporary part unless sticky.
  void deactivate_temporary();

  void set_sticky(const DependencyMap& dep, std::span<const Var> extra, std::span<const Lit> roots);
  void unset_sticky();

  std::span<const Var> permanent_vars() const { return permanent_list_; }
  std::span<const Var> temporary_vars() const { return temp_list_; }
  std::size_t size() const { return active_ ? permanent_list_.size() + temp_list_.size() : flag_.size(); }

  std::uint64_t closure_computations() const { return closures_; }

  // Fault injection for the differential harness: drop the deepest non-root
  // variable of every computed closure.
  void set_fault_drop_deepest(bool on) { fault_drop_ = on; }

 private:
  void clear_temporary();
  void install(const DependencyMap& dep, std::span<const Var> extra, std::span<const Lit> roots);
  void add_temporary(Var v);

  std::vector<Membership> flag_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Var> permanent_list_;
  std::vector<Var> temp_list_;
  std::vector<Var> stack_;
  bool active_ = false;
  bool sticky_ = false;
  bool fault_drop_ = false;
  std::uint64_t closures_ = 0;
};

}  // namespace sat

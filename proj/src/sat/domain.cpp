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

#include "sat/domain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sat {

void Domain::add_var() {
  flag_.push_back(Membership::Out);
  stamp_.push_back(0);
}

void Domain::mark_permanent(std::span<const Var> vars) {
  bool upgraded = false;
  for (Var v : vars) {
    if (flag_[v] == Membership::Permanent) continue;
    if (flag_[v] == Membership::Temporary) upgraded = true;
    flag_[v] = Membership::Permanent;
    permanent_list_.push_back(v);
  }
  if (upgraded)
    std::erase_if(temp_list_, [&](Var v) { return flag_[v] != Membership::Temporary; });
}

void Domain::add_temporary(Var v) {
  if (flag_[v] != Membership::Out) return;
  flag_[v] = Membership::Temporary;
  temp_list_.push_back(v);
}

void Domain::install(const DependencyMap& dep, std::span<const Var> extra, std::span<const Lit> roots) {
  ++closures_;
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  for (Var v : extra) {
    if (v >= flag_.size()) throw std::out_of_range("domain: unknown variable " + std::to_string(v));
    add_temporary(v);
  }
  stack_.clear();
  for (Lit r : roots) {
    const Var v = r.var();
    if (v >= flag_.size()) throw std::out_of_range("domain: unknown root variable " + std::to_string(v));
    if (stamp_[v] == epoch_) continue;
    stamp_[v] = epoch_;
    stack_.push_back(v);
  }
  while (!stack_.empty()) {
    const Var v = stack_.back();
    stack_.pop_back();
    add_temporary(v);
    if (v >= dep.size()) continue;
    for (Var f : dep[v]) {
      if (stamp_[f] == epoch_) continue;
      stamp_[f] = epoch_;
      stack_.push_back(f);
    }
  }
  if (fault_drop_) {
    auto is_root = [&](Var v) {
      return std::any_of(roots.begin(), roots.end(), [v](Lit r) { return r.var() == v; }) ||
             std::find(extra.begin(), extra.end(), v) != extra.end();
    };
    for (auto it = temp_list_.rbegin(); it != temp_list_.rend(); ++it) {
      if (is_root(*it)) continue;
      flag_[*it] = Membership::Out;
      temp_list_.erase(std::next(it).base());
      break;
    }
  }
  active_ = true;
}

void Domain::clear_temporary() {
  for (Var v : temp_list_)
    if (flag_[v] == Membership::Temporary) flag_[v] = Membership::Out;
  temp_list_.clear();
}

void Domain::activate_temporary(const DependencyMap& dep, std::span<const Var> extra, std::span<const Lit> roots) {
  if (sticky_) return;
  clear_temporary();
  install(dep, extra, roots);
}

void Domain::deactivate_temporary() {
  if (sticky_) return;
  clear_temporary();
  active_ = false;
}

void Domain::set_sticky(const DependencyMap& dep, std::span<const Var> extra, std::span<const Lit> roots) {
  clear_temporary();
  install(dep, extra, roots);
  sticky_ = true;
}

void Domain::unset_sticky() {
  sticky_ = false;
  clear_temporary();
  active_ = false;
}

}  // namespace sat

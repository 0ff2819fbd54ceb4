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

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "sat/types.hpp"

namespace sat {

// Double-ended priority queue of variables keyed by an external score array.
//
// Classic two-elements-per-node layout: node i holds slots 2i (interval low end)
// and 2i+1 (interval high end). Every node's interval is nested in its parent's.
// The last node may hold a single element that is both its low and high end.
// Positions of stored variables are written into a shared position array so a
// variable's key can be increased in place.
class IntervalHeap {
 public:
  IntervalHeap(const std::vector<double>* score, std::vector<std::uint32_t>* pos) : score_(score), pos_(pos) {}

  bool empty() const { return a_.empty(); }
  std::size_t size() const { return a_.size(); }
  const std::vector<Var>& elements() const { return a_; }

  Var min() const {
    assert(!a_.empty());
    return a_[0];
  }
  Var max() const {
    assert(!a_.empty());
    return a_.size() == 1 ? a_[0] : a_[1];
  }

  void push(Var v) {
    const std::size_t idx = a_.size();
    a_.push_back(v);
    (*pos_)[v] = static_cast<std::uint32_t>(idx);
    if (idx & 1u) {
      // Second slot of the last node.
      if (key(idx) < key(idx - 1)) {
        swap_slots(idx, idx - 1);
        sift_up_min(idx - 1);
      } else {
        sift_up_max(idx);
      }
      return;
    }
    const std::size_t node = idx / 2;
    if (node == 0) return;
    const std::size_t parent = (node - 1) / 2;
    if (key(idx) < key(2 * parent))
      sift_up_min(idx);
    else if (key(idx) > key(2 * parent + 1))
      sift_up_max(idx);
  }

  Var pop_min() {
    assert(!a_.empty());
    const Var out = a_[0];
    move_last_to(0);
    if (!a_.empty()) sift_down_min(0);
    return out;
  }

  Var pop_max() {
    assert(!a_.empty());
    if (a_.size() == 1) {
      const Var out = a_[0];
      a_.pop_back();
      return out;
    }
    const Var out = a_[1];
    move_last_to(1);
    if (a_.size() > 1) sift_down_max(0);
    return out;
  }

  // Restores heap order after the key of v was increased.
  void increased(Var v) {
    const std::size_t idx = (*pos_)[v];
    assert(idx < a_.size() && a_[idx] == v);
    if ((idx & 1u) == 0 && idx + 1 < a_.size()) {
      if (key(idx) > key(idx + 1)) {
        swap_slots(idx, idx + 1);
        sift_down_min(idx / 2);
        sift_up_max(idx + 1);
      } else {
        sift_down_min(idx / 2);
      }
    } else {
      sift_up_max(idx);
    }
  }

  // Double-ended heap property; used by tests and debug checks.
  bool valid() const {
    for (std::size_t i = 0; i < a_.size(); ++i)
      if ((*pos_)[a_[i]] != i) return false;
    for (std::size_t node = 0; 2 * node < a_.size(); ++node) {
      const std::size_t lo = 2 * node;
      const std::size_t hi = lo + 1 < a_.size() ? lo + 1 : lo;
      if (key(lo) > key(hi)) return false;
      if (node == 0) continue;
      const std::size_t p = (node - 1) / 2;
      if (key(lo) < key(2 * p) || key(hi) > key(2 * p + 1)) return false;
    }
    return true;
  }

 private:
  double key(std::size_t idx) const { return (*score_)[a_[idx]]; }

  void swap_slots(std::size_t i, std::size_t j) {
    std::swap(a_[i], a_[j]);
    (*pos_)[a_[i]] = static_cast<std::uint32_t>(i);
    (*pos_)[a_[j]] = static_cast<std::uint32_t>(j);
  }

  void move_last_to(std::size_t idx) {
    const Var last = a_.back();
    a_.pop_back();
    if (idx < a_.size()) {
      a_[idx] = last;
      (*pos_)[last] = static_cast<std::uint32_t>(idx);
    }
  }

  // Element at low slot idx moves toward the root along low ends.
  void sift_up_min(std::size_t idx) {
    std::size_t node = idx / 2;
    while (node > 0) {
      const std::size_t p = (node - 1) / 2;
      if (!(key(2 * node) < key(2 * p))) break;
      swap_slots(2 * node, 2 * p);
      node = p;
    }
  }

  // Element at high slot idx (or a single-element last node) moves up along high ends.
  void sift_up_max(std::size_t idx) {
    std::size_t node = idx / 2;
    while (node > 0) {
      const std::size_t p = (node - 1) / 2;
      if (!(key(idx) > key(2 * p + 1))) break;
      swap_slots(idx, 2 * p + 1);
      idx = 2 * p + 1;
      node = p;
    }
  }

  void sift_down_min(std::size_t node) {
    const std::size_t n = a_.size();
    for (;;) {
      const std::size_t lo = 2 * node;
      if (lo + 1 < n && key(lo) > key(lo + 1)) swap_slots(lo, lo + 1);
      const std::size_t c1 = 2 * node + 1;
      const std::size_t c2 = c1 + 1;
      if (2 * c1 >= n) return;
      std::size_t m = c1;
      if (2 * c2 < n && key(2 * c2) < key(2 * c1)) m = c2;
      if (!(key(2 * m) < key(lo))) return;
      swap_slots(lo, 2 * m);
      node = m;
    }
  }

  void sift_down_max(std::size_t node) {
    const std::size_t n = a_.size();
    for (;;) {
      const std::size_t lo = 2 * node;
      const std::size_t hi = lo + 1;
      if (hi >= n) return;
      if (key(lo) > key(hi)) swap_slots(lo, hi);
      const std::size_t c1 = 2 * node + 1;
      const std::size_t c2 = c1 + 1;
      if (2 * c1 >= n) return;
      auto high_slot = [&](std::size_t c) { return 2 * c + 1 < n ? 2 * c + 1 : 2 * c; };
      std::size_t best = high_slot(c1);
      if (2 * c2 < n && key(high_slot(c2)) > key(best)) best = high_slot(c2);
      if (!(key(best) > key(hi))) return;
      swap_slots(hi, best);
      if ((best & 1u) == 0) return;  // single-element last node
      node = best / 2;
    }
  }

  const std::vector<double>* score_;
  std::vector<std::uint32_t>* pos_;
  std::vector<Var> a_;
};

}  // namespace sat

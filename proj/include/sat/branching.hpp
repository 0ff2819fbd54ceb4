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
#include <optional>
#include <string>
#include <vector>

#include "sat/interval_heap.hpp"
#include "sat/types.hpp"

namespace sat {

inline constexpr double kRescaleThreshold = 1e100;
inline constexpr double kRescaleFactor = 1e-100;

// Bucket-based VSIDS.
//
// Variables are partitioned into a fixed number of buckets such that every score
// in bucket b is <= every score in bucket b-1. Each bucket keeps its members in an
// interval heap (for the boundary repair after a bump) and its decision candidates
// in an unordered queue. push and pop touch only the queues; a bump costs one
// interval-heap repair plus at most one swap per bucket boundary.
class BucketVsids {
 public:
  explicit BucketVsids(std::uint32_t num_buckets = 15, double decay = 0.95);
  BucketVsids(const BucketVsids&) = delete;
  BucketVsids& operator=(const BucketVsids&) = delete;

  void add_var(Var v);
  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(score_.size()); }
  std::uint32_t num_buckets() const { return static_cast<std::uint32_t>(heaps_.size()); }

  void bump(Var v);
  void decay() { inc_ /= decay_; }

  void push(Var v);
  std::optional<Var> pop();

  double score(Var v) const { return score_[v]; }
  double increment() const { return inc_; }
  std::uint32_t bucket_of(Var v) const { return bucket_[v]; }
  bool enqueued(Var v) const { return in_queue_[v] != 0; }
  std::uint32_t head() const { return head_; }
  const IntervalHeap& heap(std::uint32_t b) const { return heaps_[b]; }
  std::size_t queue_size(std::uint32_t b) const { return queues_[b].size(); }

  // Full structural check: heap property, bucket monotonicity, queue bookkeeping.
  bool check_invariants(std::string* why = nullptr) const;

 private:
  struct Queue {
    std::vector<Var> buf;
    std::size_t begin = 0;
    std::size_t size() const { return buf.size() - begin; }
    bool empty() const { return begin == buf.size(); }
  };

  void update(Var v);
  void rescale();
  void move_bucket(Var v, std::uint32_t to);
  void queue_append(std::uint32_t b, Var v);
  void queue_remove(std::uint32_t b, Var v);
  Var queue_pop_front(std::uint32_t b);

  double decay_;
  double inc_ = 1.0;
  bool any_bumped_ = false;
  std::vector<double> score_;
  std::vector<std::uint32_t> heap_pos_;
  std::vector<std::uint32_t> bucket_;
  std::vector<std::uint32_t> queue_pos_;
  std::vector<std::uint8_t> in_queue_;
  std::vector<IntervalHeap> heaps_;
  std::vector<Queue> queues_;
  std::uint32_t head_ = 0;
};

// Classical VSIDS over a binary max-heap; the branching used when buckets are off.
class HeapVsids {
 public:
  explicit HeapVsids(double decay = 0.95) : decay_(decay) {}

  void add_var(Var v);
  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(score_.size()); }
  void bump(Var v);
  void decay() { inc_ /= decay_; }
  void push(Var v);
  std::optional<Var> pop();
  double score(Var v) const { return score_[v]; }
  bool enqueued(Var v) const { return pos_[v] != kAbsent; }
  std::size_t size() const { return heap_.size(); }

 private:
  static constexpr std::uint32_t kAbsent = 0xffffffffu;
  bool higher(Var a, Var b) const { return score_[a] > score_[b]; }
  void sift_up(std::size_t i);
  void sift_down(std::size_t i);

  double decay_;
  double inc_ = 1.0;
  std::vector<double> score_;
  std::vector<std::uint32_t> pos_;
  std::vector<Var> heap_;
};

// Runtime switch between the two heuristics.
class Branching {
 public:
  Branching(bool buckets, std::uint32_t num_buckets, double decay)
      : use_buckets_(buckets), buckets_(num_buckets, decay), heap_(decay) {}

  bool uses_buckets() const { return use_buckets_; }
  void add_var(Var v) { use_buckets_ ? buckets_.add_var(v) : heap_.add_var(v); }
  void bump(Var v) { use_buckets_ ? buckets_.bump(v) : heap_.bump(v); }
  void decay() { use_buckets_ ? buckets_.decay() : heap_.decay(); }
  void push(Var v) { use_buckets_ ? buckets_.push(v) : heap_.push(v); }
  std::optional<Var> pop() { return use_buckets_ ? buckets_.pop() : heap_.pop(); }
  bool enqueued(Var v) const { return use_buckets_ ? buckets_.enqueued(v) : heap_.enqueued(v); }
  double score(Var v) const { return use_buckets_ ? buckets_.score(v) : heap_.score(v); }

  BucketVsids& buckets() { return buckets_; }
  const BucketVsids& buckets() const { return buckets_; }

 private:
  bool use_buckets_;
  BucketVsids buckets_;
  HeapVsids heap_;
};

}  // namespace sat

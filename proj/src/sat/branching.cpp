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

#include "sat/branching.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace sat {

BucketVsids::BucketVsids(std::uint32_t num_buckets, double decay) : decay_(decay) {
  if (num_buckets == 0) num_buckets = 1;
  heaps_.reserve(num_buckets);
  for (std::uint32_t b = 0; b < num_buckets; ++b) heaps_.emplace_back(&score_, &heap_pos_);
  queues_.resize(num_buckets);
  head_ = num_buckets;
}

void BucketVsids::add_var(Var v) {
  assert(v == score_.size());
  score_.push_back(0.0);
  heap_pos_.push_back(0);
  queue_pos_.push_back(0);
  in_queue_.push_back(0);
  // While every score is zero any placement is monotone, so spread round-robin.
  // Afterwards a zero-score variable can only go to the last bucket.
  const std::uint32_t b = any_bumped_ ? num_buckets() - 1 : v % num_buckets();
  bucket_.push_back(b);
  heaps_[b].push(v);
}

void BucketVsids::bump(Var v) {
  score_[v] += inc_;
  any_bumped_ = true;
  if (score_[v] > kRescaleThreshold) rescale();
  heaps_[bucket_[v]].increased(v);
  update(v);
}

void BucketVsids::rescale() {
  for (double& s : score_) s *= kRescaleFactor;
  inc_ *= kRescaleFactor;
}

void BucketVsids::update(Var v) {
  std::uint32_t b = bucket_[v];
  while (b > 0) {
    IntervalHeap& lower = heaps_[b];
    IntervalHeap& upper = heaps_[b - 1];
    if (upper.empty()) {
      // Fewer variables than buckets: the maximum climbs into the gap.
      const Var vmax = lower.pop_max();
      upper.push(vmax);
      move_bucket(vmax, b - 1);
      --b;
      continue;
    }
    if (!(score_[lower.max()] > score_[upper.min()])) break;
    const Var vmax = lower.pop_max();
    const Var vmin = upper.pop_min();
    lower.push(vmin);
    upper.push(vmax);
    move_bucket(vmin, b);
    move_bucket(vmax, b - 1);
    --b;
  }
}

void BucketVsids::move_bucket(Var v, std::uint32_t to) {
  const std::uint32_t from = bucket_[v];
  bucket_[v] = to;
  if (from != to && in_queue_[v]) {
    queue_remove(from, v);
    queue_append(to, v);
    head_ = std::min(head_, to);
  }
}

void BucketVsids::push(Var v) {
  if (in_queue_[v]) return;
  in_queue_[v] = 1;
  const std::uint32_t b = bucket_[v];
  queue_append(b, v);
  head_ = std::min(head_, b);
}

std::optional<Var> BucketVsids::pop() {
  while (head_ < num_buckets()) {
    if (!queues_[head_].empty()) {
      const Var v = queue_pop_front(head_);
      in_queue_[v] = 0;
      return v;
    }
    ++head_;
  }
  return std::nullopt;
}

void BucketVsids::queue_append(std::uint32_t b, Var v) {
  Queue& q = queues_[b];
  queue_pos_[v] = static_cast<std::uint32_t>(q.buf.size());
  q.buf.push_back(v);
}

void BucketVsids::queue_remove(std::uint32_t b, Var v) {
  Queue& q = queues_[b];
  const std::size_t idx = queue_pos_[v];
  assert(idx >= q.begin && idx < q.buf.size() && q.buf[idx] == v);
  const Var last = q.buf.back();
  q.buf[idx] = last;
  queue_pos_[last] = static_cast<std::uint32_t>(idx);
  q.buf.pop_back();
  if (q.empty()) {
    q.buf.clear();
    q.begin = 0;
  }
}

Var BucketVsids::queue_pop_front(std::uint32_t b) {
  Queue& q = queues_[b];
  const Var v = q.buf[q.begin++];
  if (q.empty()) {
    q.buf.clear();
    q.begin = 0;
  } else if (q.begin >= 64 && q.begin * 2 >= q.buf.size()) {
    q.buf.erase(q.buf.begin(), q.buf.begin() + static_cast<std::ptrdiff_t>(q.begin));
    q.begin = 0;
    for (std::size_t i = 0; i < q.buf.size(); ++i) queue_pos_[q.buf[i]] = static_cast<std::uint32_t>(i);
  }
  return v;
}

bool BucketVsids::check_invariants(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<std::uint32_t> seen_heap(score_.size(), 0);
  for (std::uint32_t b = 0; b < num_buckets(); ++b) {
    if (!heaps_[b].valid()) return fail("interval heap " + std::to_string(b) + " broken");
    for (Var v : heaps_[b].elements()) {
      if (bucket_[v] != b) return fail("var_bucket mismatch for " + std::to_string(v));
      ++seen_heap[v];
    }
  }
  for (Var v = 0; v < score_.size(); ++v)
    if (seen_heap[v] != 1) return fail("var " + std::to_string(v) + " not in exactly one heap");
  // Monotonicity across the nearest non-empty neighbours.
  std::optional<double> upper_min;
  for (std::uint32_t b = 0; b < num_buckets(); ++b) {
    if (heaps_[b].empty()) continue;
    if (upper_min && score_[heaps_[b].max()] > *upper_min) {
      std::ostringstream os;
      os << "bucket " << b << " max " << score_[heaps_[b].max()] << " exceeds min above " << *upper_min;
      return fail(os.str());
    }
    upper_min = score_[heaps_[b].min()];
  }
  std::vector<std::uint32_t> seen_queue(score_.size(), 0);
  for (std::uint32_t b = 0; b < num_buckets(); ++b) {
    const Queue& q = queues_[b];
    if (!q.empty() && b < head_) return fail("non-empty queue below head");
    for (std::size_t i = q.begin; i < q.buf.size(); ++i) {
      const Var v = q.buf[i];
      if (bucket_[v] != b) return fail("queued var in wrong bucket queue");
      if (queue_pos_[v] != i) return fail("queue position stale");
      ++seen_queue[v];
    }
  }
  for (Var v = 0; v < score_.size(); ++v) {
    if (seen_queue[v] > 1) return fail("var queued twice");
    if ((seen_queue[v] == 1) != (in_queue_[v] != 0)) return fail("enqueued flag mismatch");
  }
  return true;
}

void HeapVsids::add_var([[maybe_unused]] Var v) {
  assert(v == score_.size());
  score_.push_back(0.0);
  pos_.push_back(kAbsent);
}

void HeapVsids::bump(Var v) {
  if ((score_[v] += inc_) > kRescaleThreshold) {
    for (double& s : score_) s *= kRescaleFactor;
    inc_ *= kRescaleFactor;
  }
  if (pos_[v] != kAbsent) sift_up(pos_[v]);
}

void HeapVsids::push(Var v) {
  if (pos_[v] != kAbsent) return;
  pos_[v] = static_cast<std::uint32_t>(heap_.size());
  heap_.push_back(v);
  sift_up(heap_.size() - 1);
}

std::optional<Var> HeapVsids::pop() {
  if (heap_.empty()) return std::nullopt;
  const Var top = heap_[0];
  pos_[top] = kAbsent;
  const Var last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    pos_[last] = 0;
    sift_down(0);
  }
  return top;
}

void HeapVsids::sift_up(std::size_t i) {
  const Var v = heap_[i];
  while (i > 0) {
    const std::size_t p = (i - 1) / 2;
    if (!higher(v, heap_[p])) break;
    heap_[i] = heap_[p];
    pos_[heap_[i]] = static_cast<std::uint32_t>(i);
    i = p;
  }
  heap_[i] = v;
  pos_[v] = static_cast<std::uint32_t>(i);
}

void HeapVsids::sift_down(std::size_t i) {
  const Var v = heap_[i];
  for (;;) {
    std::size_t c = 2 * i + 1;
    if (c >= heap_.size()) break;
    if (c + 1 < heap_.size() && higher(heap_[c + 1], heap_[c])) ++c;
    if (!higher(heap_[c], v)) break;
    heap_[i] = heap_[c];
    pos_[heap_[i]] = static_cast<std::uint32_t>(i);
    i = c;
  }
  heap_[i] = v;
  pos_[v] = static_cast<std::uint32_t>(i);
}

}  // namespace sat

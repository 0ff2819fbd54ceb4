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

#include <bit>
#include <cassert>
#include <cstdint>
#include <limits>
#include <new>
#include <span>
#include <vector>

#include "sat/types.hpp"

namespace sat {

enum class ClauseKind : std::uint8_t { Origin = 0, Lemma = 1, Learned = 2, Temporary = 3 };

using CRef = std::uint32_t;
inline constexpr CRef kNoCRef = std::numeric_limits<CRef>::max();

// Clause header followed in memory by its literals. Lives only inside a ClauseArena.
class Clause {
 public:
  std::uint32_t size() const { return size_; }
  ClauseKind kind() const { return static_cast<ClauseKind>(flags_ & 3u); }
  bool learned() const { return kind() == ClauseKind::Learned; }

  bool deleted() const { return (flags_ & kDeleted) != 0; }
  void set_deleted() { flags_ |= kDeleted; }

  // Resolution ancestry includes a temporary clause (instrumented solvers only).
  bool from_temp() const { return (flags_ & kFromTemp) != 0; }
  void set_from_temp(bool b) { flags_ = b ? (flags_ | kFromTemp) : (flags_ & ~kFromTemp); }

  // Owned by the temporary-clause purge list, invisible to learned-clause reduction.
  bool tagged() const { return (flags_ & kTagged) != 0; }
  void set_tagged() { flags_ |= kTagged; }

  float activity() const { return std::bit_cast<float>(extra_); }
  void set_activity(float a) { extra_ = std::bit_cast<std::uint32_t>(a); }

  Lit& operator[](std::uint32_t i) { return lits()[i]; }
  Lit operator[](std::uint32_t i) const { return lits()[i]; }
  std::span<Lit> literals() { return {lits(), size_}; }
  std::span<const Lit> literals() const { return {lits(), size_}; }

  bool contains(Lit l) const {
    for (Lit x : literals())
      if (x == l) return true;
    return false;
  }

 private:
  friend class ClauseArena;
  static constexpr std::uint32_t kDeleted = 4u;
  static constexpr std::uint32_t kFromTemp = 8u;
  static constexpr std::uint32_t kTagged = 16u;
  static constexpr std::uint32_t kRelocated = 32u;

  Clause(std::span<const Lit> ls, ClauseKind kind)
      : size_(static_cast<std::uint32_t>(ls.size())), flags_(static_cast<std::uint32_t>(kind)) {
    for (std::uint32_t i = 0; i < size_; ++i) lits()[i] = ls[i];
  }
  Lit* lits() { return reinterpret_cast<Lit*>(this + 1); }
  const Lit* lits() const { return reinterpret_cast<const Lit*>(this + 1); }

  std::uint32_t size_;
  std::uint32_t flags_;
  std::uint32_t extra_ = 0;  // activity bits, or forwarding reference while relocating
};

static_assert(sizeof(Clause) == 3 * sizeof(std::uint32_t));
static_assert(sizeof(Lit) == sizeof(std::uint32_t));

// Region allocator for clauses, addressed by 32-bit word offsets.
class ClauseArena {
 public:
  static constexpr std::uint32_t kHeaderWords = 3;

  CRef alloc(std::span<const Lit> lits, ClauseKind kind) {
    const auto ref = static_cast<CRef>(mem_.size());
    mem_.resize(mem_.size() + kHeaderWords + lits.size());
    new (&mem_[ref]) Clause(lits, kind);
    return ref;
  }

  void free(CRef r) { wasted_ += kHeaderWords + (*this)[r].size(); }

  Clause& operator[](CRef r) { return *reinterpret_cast<Clause*>(&mem_[r]); }
  const Clause& operator[](CRef r) const { return *reinterpret_cast<const Clause*>(&mem_[r]); }

  std::size_t size() const { return mem_.size(); }
  std::size_t wasted() const { return wasted_; }

  // Copies clause r into `to` (once) and rewrites r with the new reference.
  void reloc(CRef& r, ClauseArena& to) {
    Clause& c = (*this)[r];
    if (c.flags_ & Clause::kRelocated) {
      r = c.extra_;
      return;
    }
    const CRef nr = to.alloc(c.literals(), c.kind());
    Clause& n = to[nr];
    n.flags_ = c.flags_;
    n.extra_ = c.extra_;
    c.flags_ |= Clause::kRelocated;
    c.extra_ = nr;
    r = nr;
  }

  void swap(ClauseArena& other) noexcept {
    mem_.swap(other.mem_);
    std::swap(wasted_, other.wasted_);
  }

  void reserve(std::size_t words) { mem_.reserve(words); }

 private:
  std::vector<std::uint32_t> mem_;
  std::size_t wasted_ = 0;
};

}  // namespace sat

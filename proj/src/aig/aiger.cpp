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

#include "aig/aiger.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace aig {

namespace {

struct Header {
  bool binary = false;
  std::uint64_t m = 0, i = 0, l = 0, o = 0, a = 0, b = 0, c = 0, j = 0, f = 0;
};

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= s_.size(); }
  int peek() const { return at_end() ? -1 : static_cast<unsigned char>(s_[pos_]); }
  unsigned char get() { return static_cast<unsigned char>(s_[pos_++]); }
  std::string_view rest() const { return s_.substr(pos_); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_blanks() {
    while (peek() == ' ' || peek() == '\t') ++pos_;
  }

  std::uint64_t uint(const char* what) {
    skip_blanks();
    if (peek() < '0' || peek() > '9') fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (peek() >= '0' && peek() <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) fail(std::string(what) + " too large");
    }
    return v;
  }

  bool at_eol() {
    skip_blanks();
    return peek() == '\n' || peek() == '\r' || at_end();
  }

  void eol(const char* context) {
    skip_blanks();
    if (peek() == '\r') ++pos_;
    if (peek() != '\n') fail(std::string("expected end of line after ") + context);
    ++pos_;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Header parse_header(Cursor& cur) {
  Header h;
  const std::string_view r = cur.rest();
  if (r.substr(0, 3) == "aag")
    h.binary = false;
  else if (r.substr(0, 3) == "aig")
    h.binary = true;
  else
    cur.fail("malformed header: expected 'aag' or 'aig'");
  for (int k = 0; k < 3; ++k) cur.get();
  if (cur.peek() != ' ') cur.fail("malformed header: expected space after format tag");
  h.m = cur.uint("M in header");
  h.i = cur.uint("I in header");
  h.l = cur.uint("L in header");
  h.o = cur.uint("O in header");
  h.a = cur.uint("A in header");
  std::uint64_t* extra[] = {&h.b, &h.c, &h.j, &h.f};
  for (std::uint64_t* e : extra) {
    if (cur.at_eol()) break;
    *e = cur.uint("header field");
  }
  if (!cur.at_eol()) cur.fail("malformed header: too many fields");
  if (h.m < h.i + h.l + h.a) cur.fail("malformed header: M < I + L + A");
  if (h.binary && h.m != h.i + h.l + h.a) cur.fail("malformed header: binary format requires M = I + L + A");
  cur.eol("header");
  return h;
}

std::uint32_t literal(Cursor& cur, const Header& h, const char* what) {
  cur.skip_blanks();
  const std::size_t at = cur.pos();
  const std::uint64_t v = cur.uint(what);
  if (v > 2 * h.m + 1) throw ParseError(at, std::string(what) + " " + std::to_string(v) + " exceeds 2M+1");
  return static_cast<std::uint32_t>(v);
}

std::uint32_t varint(Cursor& cur) {
  std::uint64_t x = 0;
  int shift = 0;
  for (;;) {
    if (cur.at_end()) cur.fail("truncated binary delta encoding");
    const unsigned char ch = cur.get();
    x |= static_cast<std::uint64_t>(ch & 0x7f) << shift;
    if ((ch & 0x80) == 0) break;
    shift += 7;
    if (shift > 28) cur.fail("binary delta encoding overflows 32 bits");
  }
  if (x > std::numeric_limits<std::uint32_t>::max()) cur.fail("binary delta encoding overflows 32 bits");
  return static_cast<std::uint32_t>(x);
}

void skip_trailer(Cursor& cur) {
  // Symbol table and comment section; contents are not needed.
  while (!cur.at_end()) {
    const int ch = cur.peek();
    if (ch == 'c') {
      const std::string_view r = cur.rest();
      if (r.size() == 1 || r[1] == '\n' || r[1] == '\r') return;
    }
    if (ch == '\n') {
      cur.get();
      continue;
    }
    if (ch != 'i' && ch != 'l' && ch != 'o' && ch != 'b' && ch != 'c' && ch != 'j' && ch != 'f')
      cur.fail("unexpected content after circuit definition");
    cur.get();
    if (cur.peek() < '0' || cur.peek() > '9') cur.fail("malformed symbol table entry");
    while (!cur.at_end() && cur.peek() != '\n') cur.get();
  }
}

struct RawLatch {
  std::uint32_t lit, next, init;
  std::size_t offset;
};
struct RawAnd {
  std::uint32_t lhs, rhs0, rhs1;
  std::size_t offset;
};

LatchInit decode_init(std::uint32_t init, std::uint32_t latch_lit, std::size_t offset) {
  if (init == 0) return LatchInit::Zero;
  if (init == 1) return LatchInit::One;
  if (init == latch_lit) return LatchInit::Free;
  throw ParseError(offset, "latch reset must be 0, 1 or the latch literal");
}

// Assigns canonical indices to an ASCII circuit and rewrites every literal.
Aig canonicalize(const Header& h, const std::vector<std::pair<std::uint32_t, std::size_t>>& inputs,
                 const std::vector<RawLatch>& latches, const std::vector<RawAnd>& ands,
                 const std::vector<std::pair<std::uint32_t, std::size_t>>& outputs,
                 const std::vector<std::pair<std::uint32_t, std::size_t>>& bads,
                 const std::vector<std::pair<std::uint32_t, std::size_t>>& constraints) {
  enum : std::uint8_t { kUndef, kInput, kLatch, kAnd };
  const std::size_t n = h.m + 1;
  std::vector<std::uint8_t> kind(n, kUndef);
  std::vector<std::uint32_t> and_of(n, 0);
  auto define = [&](std::uint32_t lit, std::size_t off, std::uint8_t k, const char* what) {
    if (lit & 1u) throw ParseError(off, std::string(what) + " literal must be even");
    if (lit < 2) throw ParseError(off, std::string(what) + " cannot redefine the constant");
    const std::uint32_t idx = lit >> 1;
    if (kind[idx] != kUndef) throw ParseError(off, "node " + std::to_string(idx) + " defined twice");
    kind[idx] = k;
  };
  for (auto [lit, off] : inputs) define(lit, off, kInput, "input");
  for (const RawLatch& l : latches) define(l.lit, l.offset, kLatch, "latch");
  for (std::uint32_t k = 0; k < ands.size(); ++k) {
    define(ands[k].lhs, ands[k].offset, kAnd, "and-gate");
    and_of[ands[k].lhs >> 1] = k;
  }
  auto check_ref = [&](std::uint32_t lit, std::size_t off) {
    if ((lit >> 1) != 0 && kind[lit >> 1] == kUndef)
      throw ParseError(off, "literal " + std::to_string(lit) + " refers to an undefined node");
  };
  for (const RawAnd& a : ands) {
    check_ref(a.rhs0, a.offset);
    check_ref(a.rhs1, a.offset);
  }
  for (const RawLatch& l : latches) check_ref(l.next, l.offset);
  for (auto [lit, off] : outputs) check_ref(lit, off);
  for (auto [lit, off] : bads) check_ref(lit, off);
  for (auto [lit, off] : constraints) check_ref(lit, off);

  std::vector<std::uint32_t> new_index(n, 0);
  std::uint32_t next_index = 1;
  for (auto [lit, off] : inputs) new_index[lit >> 1] = next_index++;
  for (const RawLatch& l : latches) new_index[l.lit >> 1] = next_index++;

  // Iterative post-order DFS; state 1 = on stack, 2 = numbered.
  std::vector<std::uint8_t> state(n, 0);
  std::vector<std::uint32_t> order;
  order.reserve(ands.size());
  std::vector<std::pair<std::uint32_t, int>> stack;
  for (const RawAnd& root : ands) {
    const std::uint32_t r = root.lhs >> 1;
    if (state[r] == 2) continue;
    stack.push_back({r, 0});
    state[r] = 1;
    while (!stack.empty()) {
      auto& [node, child] = stack.back();
      const RawAnd& g = ands[and_of[node]];
      if (child < 2) {
        const std::uint32_t f = (child == 0 ? g.rhs0 : g.rhs1) >> 1;
        ++child;
        if (kind[f] != kAnd || state[f] == 2) continue;
        if (state[f] == 1) throw ParseError(ands[and_of[f]].offset, "combinational cycle through and-gate");
        state[f] = 1;
        stack.push_back({f, 0});
        continue;
      }
      state[node] = 2;
      order.push_back(node);
      stack.pop_back();
    }
  }
  for (std::uint32_t node : order) new_index[node] = next_index++;

  auto map = [&](std::uint32_t lit) { return AigLit(new_index[lit >> 1], (lit & 1u) != 0); };
  Aig g;
  g.max_index = next_index - 1;
  for (std::size_t k = 0; k < inputs.size(); ++k) g.inputs.push_back(static_cast<std::uint32_t>(k + 1));
  for (const RawLatch& l : latches)
    g.latches.push_back({new_index[l.lit >> 1], map(l.next), decode_init(l.init, l.lit, l.offset)});
  for (std::uint32_t node : order) {
    const RawAnd& a = ands[and_of[node]];
    g.ands.push_back({new_index[node], map(a.rhs0), map(a.rhs1)});
  }
  for (auto [lit, off] : outputs) g.outputs.push_back(map(lit));
  for (auto [lit, off] : bads) g.bads.push_back(map(lit));
  for (auto [lit, off] : constraints) g.constraints.push_back(map(lit));
  return g;
}

}  // namespace

Aig parse_aiger(std::string_view bytes) {
  Cursor cur(bytes);
  const Header h = parse_header(cur);
  using Entry = std::pair<std::uint32_t, std::size_t>;
  std::vector<Entry> inputs, outputs, bads, constraints;
  std::vector<RawLatch> latches;
  std::vector<RawAnd> ands;

  if (!h.binary) {
    for (std::uint64_t k = 0; k < h.i; ++k) {
      const std::size_t off = cur.pos();
      inputs.push_back({literal(cur, h, "input"), off});
      cur.eol("input");
    }
  } else {
    for (std::uint64_t k = 0; k < h.i; ++k) inputs.push_back({static_cast<std::uint32_t>(2 * (k + 1)), 0});
  }
  for (std::uint64_t k = 0; k < h.l; ++k) {
    RawLatch l{};
    l.offset = cur.pos();
    l.lit = h.binary ? static_cast<std::uint32_t>(2 * (h.i + k + 1)) : literal(cur, h, "latch");
    l.next = literal(cur, h, "latch next-state");
    l.init = cur.at_eol() ? 0 : literal(cur, h, "latch reset");
    cur.eol("latch");
    latches.push_back(l);
  }
  auto lit_lines = [&](std::uint64_t count, std::vector<Entry>& out, const char* what) {
    for (std::uint64_t k = 0; k < count; ++k) {
      const std::size_t off = cur.pos();
      out.push_back({literal(cur, h, what), off});
      cur.eol(what);
    }
  };
  lit_lines(h.o, outputs, "output");
  lit_lines(h.b, bads, "bad");
  lit_lines(h.c, constraints, "constraint");
  std::vector<std::uint64_t> justice_sizes;
  for (std::uint64_t k = 0; k < h.j; ++k) {
    justice_sizes.push_back(cur.uint("justice size"));
    cur.eol("justice size");
  }
  std::vector<Entry> dropped;
  for (std::uint64_t sz : justice_sizes) lit_lines(sz, dropped, "justice");
  lit_lines(h.f, dropped, "fairness");

  if (!h.binary) {
    for (std::uint64_t k = 0; k < h.a; ++k) {
      RawAnd a{};
      a.offset = cur.pos();
      a.lhs = literal(cur, h, "and-gate");
      a.rhs0 = literal(cur, h, "and-gate fanin");
      a.rhs1 = literal(cur, h, "and-gate fanin");
      cur.eol("and-gate");
      ands.push_back(a);
    }
    skip_trailer(cur);
    Aig g = canonicalize(h, inputs, latches, ands, outputs, bads, constraints);
    g.num_justice = h.j;
    g.num_fairness = h.f;
    if (g.bads.empty()) {
      g.bads = g.outputs;
      g.bads_from_outputs = true;
    }
    return g;
  }

  Aig g;
  g.max_index = static_cast<std::uint32_t>(h.m);
  for (std::uint64_t k = 0; k < h.i; ++k) g.inputs.push_back(static_cast<std::uint32_t>(k + 1));
  for (const RawLatch& l : latches) {
    if (l.next > 2 * h.m + 1) throw ParseError(l.offset, "latch next-state literal out of range");
    g.latches.push_back({l.lit >> 1, AigLit::from_code(l.next), decode_init(l.init, l.lit, l.offset)});
  }
  for (std::uint64_t k = 0; k < h.a; ++k) {
    const std::size_t off = cur.pos();
    const auto lhs = static_cast<std::uint32_t>(2 * (h.i + h.l + k + 1));
    const std::uint32_t d0 = varint(cur);
    if (d0 == 0 || d0 > lhs) throw ParseError(off, "and-gate fanin index not below the node being declared");
    const std::uint32_t rhs0 = lhs - d0;
    const std::uint32_t d1 = varint(cur);
    if (d1 > rhs0) throw ParseError(off, "and-gate second fanin delta exceeds first fanin");
    const std::uint32_t rhs1 = rhs0 - d1;
    g.ands.push_back({lhs >> 1, AigLit::from_code(rhs0), AigLit::from_code(rhs1)});
  }
  skip_trailer(cur);
  for (auto [lit, off] : outputs) g.outputs.push_back(AigLit::from_code(lit));
  for (auto [lit, off] : bads) g.bads.push_back(AigLit::from_code(lit));
  for (auto [lit, off] : constraints) g.constraints.push_back(AigLit::from_code(lit));
  g.num_justice = h.j;
  g.num_fairness = h.f;
  if (g.bads.empty()) {
    g.bads = g.outputs;
    g.bads_from_outputs = true;
  }
  return g;
}

Aig read_aiger_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_aiger(bytes);
}

namespace {

void write_header(std::ostringstream& os, const char* tag, const Aig& g) {
  os << tag << ' ' << g.max_index << ' ' << g.inputs.size() << ' ' << g.latches.size() << ' '
     << g.outputs.size() << ' ' << g.ands.size();
  const std::size_t b = g.bads_from_outputs ? 0 : g.bads.size();
  if (b != 0 || !g.constraints.empty()) os << ' ' << b << ' ' << g.constraints.size();
  os << '\n';
}

void write_init(std::ostringstream& os, const Latch& l) {
  if (l.init == LatchInit::One)
    os << " 1";
  else if (l.init == LatchInit::Free)
    os << ' ' << 2 * l.node;
}

void write_properties(std::ostringstream& os, const Aig& g) {
  for (AigLit l : g.outputs) os << l.code() << '\n';
  if (!g.bads_from_outputs)
    for (AigLit l : g.bads) os << l.code() << '\n';
  for (AigLit l : g.constraints) os << l.code() << '\n';
}

void put_varint(std::ostringstream& os, std::uint32_t x) {
  while (x & ~0x7fu) {
    os.put(static_cast<char>((x & 0x7f) | 0x80));
    x >>= 7;
  }
  os.put(static_cast<char>(x));
}

}  // namespace

std::string write_aag(const Aig& g) {
  std::ostringstream os;
  write_header(os, "aag", g);
  for (std::uint32_t n : g.inputs) os << 2 * n << '\n';
  for (const Latch& l : g.latches) {
    os << 2 * l.node << ' ' << l.next.code();
    write_init(os, l);
    os << '\n';
  }
  write_properties(os, g);
  for (const AndGate& a : g.ands) os << 2 * a.node << ' ' << a.fanin0.code() << ' ' << a.fanin1.code() << '\n';
  return os.str();
}

std::string write_aig(const Aig& g) {
  const auto ni = static_cast<std::uint32_t>(g.inputs.size());
  const auto nl = static_cast<std::uint32_t>(g.latches.size());
  for (std::uint32_t k = 0; k < ni; ++k)
    if (g.inputs[k] != k + 1) throw std::invalid_argument("write_aig: inputs not canonically numbered");
  for (std::uint32_t k = 0; k < nl; ++k)
    if (g.latches[k].node != ni + k + 1) throw std::invalid_argument("write_aig: latches not canonically numbered");
  for (std::size_t k = 0; k < g.ands.size(); ++k)
    if (g.ands[k].node != ni + nl + k + 1) throw std::invalid_argument("write_aig: and-gates not canonically numbered");
  if (g.max_index != ni + nl + g.ands.size()) throw std::invalid_argument("write_aig: M must equal I + L + A");

  std::ostringstream os;
  write_header(os, "aig", g);
  for (const Latch& l : g.latches) {
    os << l.next.code();
    write_init(os, l);
    os << '\n';
  }
  write_properties(os, g);
  for (const AndGate& a : g.ands) {
    std::uint32_t r0 = a.fanin0.code(), r1 = a.fanin1.code();
    if (r0 < r1) std::swap(r0, r1);
    const std::uint32_t lhs = 2 * a.node;
    put_varint(os, lhs - r0);
    put_varint(os, r0 - r1);
  }
  return os.str();
}

}  // namespace aig

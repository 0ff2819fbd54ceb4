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

// Command-line front end: checker <file.aig|aag> [options]

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "aig/aiger.hpp"
#include "aig/simplify.hpp"
#include "aig/transys.hpp"
#include "ic3/certify.hpp"
#include "ic3/difftest.hpp"
#include "ic3/engine.hpp"
#include "ic3/stats.hpp"
#include "ic3/witness.hpp"

namespace {

constexpr int kExitSafe = 20;
constexpr int kExitUnsafe = 10;
constexpr int kExitUnknown = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

nlohmann::json stats_json(const std::vector<ic3::StatEntry>& entries) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& e : entries) {
    if (e.integral)
      j[e.key] = static_cast<std::uint64_t>(e.value);
    else
      j[e.key] = e.value;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IC3 hardware model checker"};
  std::string path;
  bool no_dm = false, no_bkt = false, no_wr = false;
  std::uint32_t buckets = 15;
  double time_limit = 3600;
  std::size_t memory_limit = 16384;
  bool witness = false, certify = false, stats = false, json = false;
  std::optional<std::size_t> difftest;
  std::optional<std::size_t> property;
  bool no_simplify = false, free_unconstrained = false;

  app.add_option("file", path, "AIGER file (.aag or .aig)")->required();
  app.add_flag("--no-dm", no_dm, "disable domain-restricted decide/propagate");
  app.add_flag("--no-bkt", no_bkt, "binary-heap VSIDS instead of buckets");
  app.add_flag("--no-wr", no_wr, "fresh activation variable per temporary clause, periodic solver resets");
  app.add_option("--buckets", buckets, "number of VSIDS buckets")->check(CLI::PositiveNumber);
  app.add_option("--time-limit", time_limit, "seconds")->check(CLI::PositiveNumber);
  app.add_option("--memory-limit", memory_limit, "megabytes of peak resident memory")->check(CLI::PositiveNumber);
  app.add_flag("--witness", witness, "print a witness (unsafe) or the invariant (safe)");
  app.add_flag("--certify", certify, "check the result independently before printing it");
  app.add_flag("--stats", stats, "print key=value statistics");
  app.add_flag("--json", json, "print everything as one JSON object");
  app.add_option("--difftest", difftest, "replay up to N logged queries on every ablation axis (0 = all)");
  app.add_option("--property", property, "check only this bad/output index");
  app.add_flag("--no-simplify", no_simplify, "skip constant folding and structural hashing");
  app.add_flag("--free-unconstrained", free_unconstrained, "leave latches with unconstrained reset out of I");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  aig::Aig original;
  try {
    original = aig::read_aiger_file(path);
  } catch (const aig::ParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }

  aig::EncodeOptions eo;
  eo.property = property;
  eo.free_unconstrained = free_unconstrained;
  aig::TransitionSystem sys, reference;
  try {
    const aig::Aig working = no_simplify ? original : aig::simplify(original);
    sys = aig::tseitin_encode(working, eo);
    reference = aig::tseitin_encode(original, eo);
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kExitInput;
  }

  ic3::EngineOptions opts;
  opts.frame.domain = !no_dm;
  opts.frame.buckets = !no_bkt;
  opts.frame.reuse_activation = !no_wr;
  opts.frame.num_buckets = buckets;
  opts.frame.profile_branching = stats;
  opts.limits.time_seconds = time_limit;
  opts.limits.memory_mb = memory_limit;

  if (difftest) {
    const ic3::DiffReport rep = ic3::difftest(sys, opts, *difftest);
    std::cout << ic3::format_report(rep);
    return rep.ok() ? 0 : kExitInternal;
  }

  ic3::Engine engine(sys, opts);
  const ic3::Result r = engine.check();

  std::optional<aig::Trace> trace;
  std::size_t bad_index = property.value_or(0);
  if (r.verdict == ic3::Verdict::Unsafe) {
    trace = ic3::concretize(original, sys, r.trace);
    const aig::ReplayResult rr = aig::replay(original, *trace, property);
    if (rr.ok) bad_index = rr.bad_index;
  }
  if (certify && r.verdict != ic3::Verdict::Unknown) {
    const ic3::Check c = ic3::verify_result(original, reference, r, property);
    if (!c.ok) {
      std::cerr << "certification failed: " << c.failure << '\n';
      return kExitInternal;
    }
  }

  const char* line = r.verdict == ic3::Verdict::Safe ? "0" : r.verdict == ic3::Verdict::Unsafe ? "1" : "2";
  const int rc = r.verdict == ic3::Verdict::Safe     ? kExitSafe
                 : r.verdict == ic3::Verdict::Unsafe ? kExitUnsafe
                                                     : kExitUnknown;
  const auto entries = ic3::stat_entries(engine.stats());

  if (json) {
    nlohmann::json j;
    j["verdict"] = line;
    j["result"] = ic3::to_string(r.verdict);
    j["exit"] = rc;
    j["depth"] = r.depth;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (certify && r.verdict != ic3::Verdict::Unknown) j["certified"] = true;
    if (witness && trace) j["witness"] = ic3::format_witness(*trace, bad_index);
    if (witness && r.verdict == ic3::Verdict::Safe) j["invariant"] = ic3::format_invariant(reference, r.invariant);
    if (stats) j["stats"] = stats_json(entries);
    std::cout << j.dump(2) << '\n';
    return rc;
  }

  std::cout << line << '\n';
  if (witness && trace) std::cout << ic3::format_witness(*trace, bad_index);
  if (witness && r.verdict == ic3::Verdict::Safe) std::cout << ic3::format_invariant(reference, r.invariant);
  if (stats) std::cout << ic3::format_stats(entries);
  return rc;
}

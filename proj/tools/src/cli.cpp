// Copyright 2026 The nilrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nilrec_cli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilrec/affine_map.hpp"
#include "nilrec/bounds.hpp"
#include "nilrec/combinatorics.hpp"
#include "nilrec/error.hpp"
#include "nilrec/io.hpp"
#include "nilrec/orbit.hpp"
#include "nilrec/pipeline.hpp"
#include "nilrec/systems.hpp"
#include "nilrec/verification.hpp"

namespace nilrec::cli {

namespace {

namespace cb = combinatorics;
namespace ex = experiments;

struct Options {
  // construct
  std::string kind;
  int d = 2;
  int m = 1;
  std::uint64_t n_ambient = 0;
  std::string out_path;
  std::string slices_csv;
  std::optional<std::uint64_t> cap;
  // verify
  std::string file;
  // measure
  std::string system;
  std::string n_range = "1..5";
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string format = "table";
  std::optional<int> precision;
  double alpha = 0.41421356237309504880;
  double beta = 0.73205080756887729353;
  bool no_timestamp = false;
  // bounds
  std::string variant;
  std::string set_size = "1";
  std::string bound_kind = "nu";
  std::string epsilon = "1/10";
  // system / orbit
  std::optional<std::int64_t> reduce_n;
  std::uint64_t steps = 100000;
  int grid = 10;
  bool words = false;
};

std::uint64_t ResolveCap(const Options& o) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("NILREC_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw Error(Errc::kParse, "NILREC_CAP must be a positive integer");
    return v;
  }
  return cb::kDefaultEnumerationCap;
}

int ResolvePrecision(const Options& o) {
  if (o.precision) return *o.precision;
  return ex::PrecisionFromEnv(ex::kDefaultPrecisionDigits);
}

std::pair<std::int64_t, std::int64_t> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const auto lo = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const auto hi = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(Errc::kParse, "range must look like 'a..b' or 'a', got '" + text + "'");
  }
}

std::string Timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

void Emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    io::WriteFile(o.out_path, text);
  }
}

void PrintBoundComparison(std::ostream& out, ex::BoundKind kind, std::int64_t n,
                          std::size_t size, int digits) {
  if (n < 16) return;
  const auto lb = ex::ComputeLowerBound(kind, BigInt(static_cast<long>(n)), Rational(1, 10), digits);
  out << "bound " << ex::BoundKindName(kind) << "(N) with epsilon=1/10: " << lb.value.ToString(12)
      << " (constructed " << size << ")\n";
}

int CmdConstruct(const Options& o, std::ostream& out) {
  const std::uint64_t cap = ResolveCap(o);
  const int digits = ResolvePrecision(o);
  if (o.kind == "ap3") {
    if (o.n_ambient < 1) throw Error(Errc::kDomain, "construct ap3 needs --N >= 1");
    const auto built = cb::BehrendConstructDetailed(o.n_ambient, cap);
    if (!o.out_path.empty()) io::WriteFile(o.out_path, io::PointSetToJson(built.set));
    out << "ap3-free set in [" << o.n_ambient << "]: " << built.set.size() << " points ("
        << CertificateName(built.set.certificate()) << "), d=" << built.d
        << " digits=" << built.digits << (built.full_cube ? " cube" : " shell") << "\n";
    if (o.out_path.empty()) out << io::PointSetToJson(built.set);
    return kExitOk;
  }
  const cb::DigitProfile profile(o.d, o.m);
  const BigInt expected = cb::CornerFreeCardinality(profile);
  const LatticePointSet lambda = cb::CornerFreeEnumerate(profile, cap);
  const std::int64_t n = lambda.side();
  if (o.kind == "corner-free") {
    if (!o.out_path.empty()) io::WriteFile(o.out_path, io::PointSetToJson(lambda));
    out << "corner-free set in [" << n << "]^2: " << lambda.size() << " points (formula "
        << expected.get_str() << ", " << CertificateName(lambda.certificate()) << ")\n";
    PrintBoundComparison(out, ex::BoundKind::kNu, n, lambda.size(), digits);
    if (o.out_path.empty()) out << io::PointSetToJson(lambda);
    return kExitOk;
  }
  if (o.kind == "three-point-free") {
    const auto slice = cb::ThreePointFreeFromCornerFree(lambda);
    if (!o.out_path.empty()) io::WriteFile(o.out_path, io::PointSetToJson(slice.slice));
    if (!o.slices_csv.empty()) io::WriteFile(o.slices_csv, io::SliceSizesToCsv(slice.selection));
    const std::uint64_t total = lambda.size() * static_cast<std::uint64_t>(n);
    const std::uint64_t planes = 3 * static_cast<std::uint64_t>(n) - 2;
    out << "three-point-free slice s=" << slice.selection.s << " in [" << n
        << "]^3: " << slice.slice.size() << " points ("
        << CertificateName(slice.slice.certificate()) << "), pigeonhole floor "
        << (total + planes - 1) / planes << "\n";
    PrintBoundComparison(out, ex::BoundKind::kW, n, slice.slice.size(), digits);
    if (o.out_path.empty()) out << io::PointSetToJson(slice.slice);
    return kExitOk;
  }
  throw Error(Errc::kParse, "unknown construction '" + o.kind + "'");
}

int CmdVerify(const Options& o, std::ostream& out) {
  const auto parsed = io::PointSetFromJson(io::ReadFile(o.file));
  std::vector<Certificate> checks;
  if (parsed.claimed != Certificate::kNone) {
    checks.push_back(parsed.claimed);
  } else if (parsed.set.dim() == 1) {
    checks.push_back(Certificate::kAp3Free);
  } else if (parsed.set.dim() == 2) {
    checks.push_back(Certificate::kCornerFree);
  } else {
    checks.push_back(Certificate::kThreePointFree);
  }
  for (const auto c : checks) {
    const auto result = verification::Verify(parsed.set, c);
    if (result) {
      out << CertificateName(c) << ": violation\n" << io::WitnessToJson(*result) << "\n";
      return kExitViolation;
    }
    out << CertificateName(c) << ": ok (" << parsed.set.size() << " points)\n";
  }
  return kExitOk;
}

int CmdMeasure(const Options& o, std::ostream& out) {
  ex::PipelineConfig config;
  config.system = dynamics::ParseSystemKind(o.system);
  config.d = o.d;
  config.m = o.m;
  if (config.system == dynamics::SystemKind::kT12) {
    config.n_ambient = o.n_ambient == 0 ? 20 : o.n_ambient;
  }
  std::tie(config.n_lo, config.n_hi) = ParseRange(o.n_range);
  config.mc_samples = o.mc_samples;
  config.seed = o.seed;
  config.jobs = o.jobs;
  config.precision = ResolvePrecision(o);
  config.cap = ResolveCap(o);
  config.alpha = o.alpha;
  config.beta = o.beta;
  const auto report = ex::RunTheoremPipeline(config);
  std::string text;
  if (o.format == "json") {
    text = io::ReportToJson(report, o.no_timestamp ? "" : Timestamp());
  } else if (o.format == "csv") {
    text = io::ReportToCsv(report);
  } else {
    text = io::ReportToTable(report);
  }
  Emit(o, text, out);
  if (!o.out_path.empty()) {
    out << report.system << ": " << (report.all_pass ? "all checks pass" : "check failed")
        << ", report written to " << o.out_path << "\n";
  }
  return report.all_pass ? kExitOk : kExitViolation;
}

int CmdThreshold(const Options& o, std::ostream& out) {
  const int digits = ResolvePrecision(o);
  BigInt n(static_cast<unsigned long>(o.n_ambient));
  BigInt size;
  if (size.set_str(o.set_size, 10) != 0) throw Error(Errc::kParse, "--size must be an integer");
  const auto t = ex::ComputeExponentThreshold(ex::ParseThresholdVariant(o.variant), n, size, digits);
  out << ex::ThresholdVariantName(t.variant) << " N=" << n.get_str() << " size=" << size.get_str()
      << " ell*=" << t.ell_star.ToString(digits) << "\n";
  return kExitOk;
}

int CmdLowerBound(const Options& o, std::ostream& out) {
  const int digits = ResolvePrecision(o);
  const auto kind = ex::ParseBoundKind(o.bound_kind);
  const auto lb = ex::ComputeLowerBound(kind, BigInt(static_cast<unsigned long>(o.n_ambient)),
                                        ParseFraction(o.epsilon), digits);
  out << ex::BoundKindName(kind) << " N=" << o.n_ambient << " epsilon=" << o.epsilon
      << " exponent=" << lb.exponent.ToString(digits) << " bound=" << lb.value.ToString(digits)
      << "\n";
  return kExitOk;
}

int CmdSystem(const Options& o, std::ostream& out) {
  const auto s = dynamics::BuiltinSystem(dynamics::ParseSystemKind(o.system));
  out << io::SystemToJson(s);
  std::vector<dynamics::AffineTorusMap> gens;
  for (const auto& g : s.generators) gens.push_back(g.map);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto rep = dynamics::CheckCommute(gens[i], gens[j]);
      out << s.generators[i].name << "," << s.generators[j].name
          << ": commute=" << (rep.commute ? "yes" : "no") << " criterion="
          << (rep.criterion_applicable ? (rep.criterion ? "holds" : "fails") : "n/a") << "\n";
    }
  }
  const auto cls = dynamics::NilpotencyClass(gens, 8);
  out << "nilpotency class: " << (cls ? std::to_string(*cls) : std::string("> 8")) << "\n";
  if (o.reduce_n) {
    const auto red = dynamics::ReduceShifts(s, *o.reduce_n);
    out << "shift matrix at n=" << *o.reduce_n << " (full rank: " << (red.full_rank ? "yes" : "no")
        << "):\n";
    for (std::size_t i = 0; i < red.m.rows(); ++i) {
      out << " ";
      for (std::size_t j = 0; j < red.m.cols(); ++j) out << " " << red.m(i, j);
      out << "\n";
    }
    for (const auto& d : red.discrepancies) out << "note: " << d << "\n";
  }
  return kExitOk;
}

int CmdOrbit(const Options& o, std::ostream& out) {
  const auto s = dynamics::BuiltinSystem(dynamics::ParseSystemKind(o.system));
  std::vector<dynamics::AffineTorusMap> gens;
  for (const auto& g : s.generators) gens.push_back(g.map);
  dynamics::OrbitConfig config;
  config.steps = o.steps;
  config.grid = o.grid;
  config.seed = o.seed;
  config.alpha = o.alpha;
  config.beta = o.beta;
  config.random_words = o.words;
  std::vector<double> start(s.dim(), 0.1);
  const auto rep = dynamics::OrbitStatistics(gens, start, config);
  out << s.coordinates.size() << "-torus, " << rep.cells << " cells, " << rep.steps
      << " steps: discrepancy " << rep.discrepancy << ", max cell deviation "
      << rep.max_cell_deviation << "\n";
  return kExitOk;
}

int ExitFor(const Error& e) {
  switch (e.code()) {
    case Errc::kCertification:
      return kExitViolation;
    case Errc::kSizeCap:
      return kExitResourceCap;
    default:
      return kExitUsage;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Corner-free constructions and exact multiple-recurrence measures", "nilrec"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build and certify an extremal set");
  construct->add_option("kind", o.kind, "corner-free, three-point-free or ap3")
      ->required()
      ->check(CLI::IsMember({"corner-free", "three-point-free", "ap3"}));
  construct->add_option("--d", o.d, "Block parameter d >= 2");
  construct->add_option("--m", o.m, "Digit multiplicity m >= 1");
  construct->add_option("--N", o.n_ambient, "Ambient size for ap3");
  construct->add_option("--out", o.out_path, "Write the point set JSON here");
  construct->add_option("--slices-csv", o.slices_csv, "Write slice sizes (three-point-free)");
  construct->add_option("--cap", o.cap, "Enumeration cap (default 1000000, env NILREC_CAP)");
  construct->add_option("--precision", o.precision, "Digits for bound evaluation");

  auto* verify = app.add_subcommand("verify", "Check a point-set file against its certificate");
  verify->add_option("file", o.file, "Point-set JSON")->required();

  auto* measure = app.add_subcommand("measure", "Exact recurrence measures for a built-in system");
  measure->add_option("system", o.system, "t11, t12 or t13")
      ->required()
      ->check(CLI::IsMember({"t11", "t12", "t13"}));
  measure->add_option("--d", o.d, "Block parameter (t11, t13)");
  measure->add_option("--m", o.m, "Digit multiplicity (t11, t13)");
  measure->add_option("--N", o.n_ambient, "Ambient size (t12, default 20)");
  measure->add_option("--n", o.n_range, "Iterates, 'a..b' or 'a' (default 1..5)");
  measure->add_option("--mc-samples", o.mc_samples, "Monte Carlo samples per row (0 = off)");
  measure->add_option("--seed", o.seed, "Monte Carlo seed");
  measure->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  measure->add_option("--format", o.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  measure->add_option("--out", o.out_path, "Write the report here");
  measure->add_option("--precision", o.precision, "Digits for ell* (env NILREC_PRECISION)");
  measure->add_option("--cap", o.cap, "Enumeration cap");
  measure->add_option("--alpha", o.alpha, "Value of alpha for sampling");
  measure->add_option("--beta", o.beta, "Value of beta for sampling");
  measure->add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp field");

  auto* bounds = app.add_subcommand("bounds", "Threshold and lower-bound calculators");
  bounds->require_subcommand(1);
  auto* threshold = bounds->add_subcommand("threshold", "Exponent threshold ell*");
  threshold->add_option("--variant", o.variant, "commuting2, nilpotent2 or ap3strip")->required();
  threshold->add_option("--N", o.n_ambient, "Ambient size")->required();
  threshold->add_option("--size", o.set_size, "Set size")->required();
  threshold->add_option("--precision", o.precision, "Significant digits");
  auto* lower = bounds->add_subcommand("lower", "Asymptotic lower bound for nu(N) or w(N)");
  lower->add_option("--kind", o.bound_kind, "nu or w")->check(CLI::IsMember({"nu", "w"}));
  lower->add_option("--N", o.n_ambient, "N >= 16")->required();
  lower->add_option("--epsilon", o.epsilon, "epsilon as p/q or integer (default 1/10)");
  lower->add_option("--precision", o.precision, "Significant digits");

  auto* system = app.add_subcommand("system", "Print a built-in system and its algebra");
  system->add_option("system", o.system, "t11, t12 or t13")->required();
  system->add_option("--reduce", o.reduce_n, "Also print the shift reduction at this n");

  auto* orbit = app.add_subcommand("orbit", "Orbit equidistribution statistics");
  orbit->add_option("system", o.system, "t11, t12 or t13")->required();
  orbit->add_option("--steps", o.steps, "Orbit length");
  orbit->add_option("--grid", o.grid, "Cells per axis");
  orbit->add_option("--seed", o.seed, "Seed for random words");
  orbit->add_flag("--words", o.words, "Random words over generators and inverses");

  std::vector<const char*> argv{"nilrec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return CmdConstruct(o, out);
    if (verify->parsed()) return CmdVerify(o, out);
    if (measure->parsed()) return CmdMeasure(o, out);
    if (threshold->parsed()) return CmdThreshold(o, out);
    if (lower->parsed()) return CmdLowerBound(o, out);
    if (system->parsed()) return CmdSystem(o, out);
    if (orbit->parsed()) return CmdOrbit(o, out);
  } catch (const verification::CertificationError& e) {
    err << "error: " << e.what() << "\n" << io::WitnessToJson(e.witness()) << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    err << "error (" << ErrcName(e.code()) << "): " << e.what() << "\n";
    return ExitFor(e);
  }
  return kExitUsage;
}

}  // namespace nilrec::cli

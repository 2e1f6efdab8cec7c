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

#include "nilrec/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "nilrec/error.hpp"

namespace nilrec::io {

using Json = nlohmann::ordered_json;

namespace {

int WitnessDim(verification::WitnessKind kind) {
  switch (kind) {
    case verification::WitnessKind::kCorner:
      return 2;
    case verification::WitnessKind::kAp3:
      return 1;
    default:
      return 3;
  }
}

Json PointJson(const Point& p, int dim) {
  Json out = Json::array();
  for (int i = 0; i < dim; ++i) out.push_back(p[static_cast<std::size_t>(i)]);
  return out;
}

Json OptionalDouble(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json Config(const experiments::PipelineConfig& c) {
  Json out;
  out["system"] = dynamics::SystemKindName(c.system);
  if (c.system == dynamics::SystemKind::kT12) {
    out["N"] = c.n_ambient;
  } else {
    out["d"] = c.d;
    out["m"] = c.m;
  }
  out["n_lo"] = c.n_lo;
  out["n_hi"] = c.n_hi;
  out["mc_samples"] = c.mc_samples;
  out["seed"] = c.seed;
  out["precision"] = c.precision;
  out["cap"] = c.cap;
  out["alpha"] = c.alpha;
  out["beta"] = c.beta;
  return out;
}

}  // namespace

std::string PointSetToJson(const LatticePointSet& set) {
  Json out;
  out["dim"] = set.dim();
  out["side"] = set.side();
  out["certificate"] = CertificateName(set.certificate());
  Json points = Json::array();
  for (const auto& p : set.points()) points.push_back(PointJson(p, set.dim()));
  out["points"] = std::move(points);
  return out.dump() + "\n";
}

ParsedPointSet PointSetFromJson(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::kParse, std::string("invalid JSON: ") + e.what());
  }
  try {
    const int dim = j.at("dim").get<int>();
    const auto side = j.at("side").get<std::int64_t>();
    const auto cert_name = j.value("certificate", std::string("none"));
    const auto cert = ParseCertificate(cert_name);
    if (!cert) throw Error(Errc::kParse, "unknown certificate '" + cert_name + "'");
    if (dim < 1 || dim > 3) throw Error(Errc::kParse, "dim must be 1, 2 or 3");
    std::vector<Point> points;
    for (const auto& pj : j.at("points")) {
      if (!pj.is_array() || pj.size() != static_cast<std::size_t>(dim)) {
        throw Error(Errc::kParse, "point with the wrong number of coordinates");
      }
      Point p{0, 0, 0};
      for (int i = 0; i < dim; ++i) {
        p[static_cast<std::size_t>(i)] = pj[static_cast<std::size_t>(i)].get<std::int64_t>();
      }
      points.push_back(p);
    }
    return {LatticePointSet(dim, side, std::move(points)), *cert};
  } catch (const Json::exception& e) {
    throw Error(Errc::kParse, std::string("malformed point set: ") + e.what());
  }
}

std::string WitnessToJson(const verification::PatternWitness& w) {
  Json out;
  out["kind"] = verification::WitnessKindName(w.kind);
  Json points = Json::array();
  const int dim = WitnessDim(w.kind);
  for (const auto& p : w.points) points.push_back(PointJson(p, dim));
  out["points"] = std::move(points);
  return out.dump();
}

std::string SliceSizesToCsv(const combinatorics::SliceSelection& selection) {
  std::ostringstream out;
  out << "s,count\n";
  for (std::size_t s = 0; s < selection.slice_sizes.size(); ++s) {
    out << s << ',' << selection.slice_sizes[s] << '\n';
  }
  return out.str();
}

std::string ReportToJson(const experiments::MeasureReport& r,
                         const std::string& timestamp) {
  Json out;
  out["system"] = r.system;
  out["N"] = r.n_ambient;
  out["set_size"] = r.set_size;
  out["certificate"] = r.certificate;
  out["mu_A"] = ToFractionString(r.mu_a);
  out["variant"] = experiments::ThresholdVariantName(r.variant);
  out["ell_star"] = r.ell_star;
  if (r.slice_s) out["slice_s"] = *r.slice_s;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json rj;
    rj["n"] = row.n;
    rj["exact"] = ToFractionString(row.exact);
    rj["mc_estimate"] = OptionalDouble(row.mc_estimate);
    rj["mc_stderr"] = OptionalDouble(row.mc_stderr);
    if (row.pattern_2d) rj["pattern_2d"] = ToFractionString(*row.pattern_2d);
    if (row.upper_bound) {
      rj["upper_bound"] = ToFractionString(*row.upper_bound);
      rj["upper_bound_ok"] = row.upper_bound_ok;
    }
    Json checks = Json::array();
    for (const auto& c : row.checks) {
      checks.push_back({{"label", c.label},
                        {"ell", c.ell},
                        {"mu_A_pow_ell", c.power},
                        {"required", c.required},
                        {"verdict", experiments::VerdictName(c.verdict)}});
    }
    rj["checks"] = std::move(checks);
    rows.push_back(std::move(rj));
  }
  out["rows"] = std::move(rows);
  out["discrepancies"] = r.discrepancies;
  out["all_pass"] = r.all_pass;
  out["config"] = Config(r.config);
  if (!timestamp.empty()) out["timestamp"] = timestamp;
  return out.dump(2) + "\n";
}

std::string ReportToCsv(const experiments::MeasureReport& r) {
  std::ostringstream out;
  out << "system,N,set_size,n,exact,exact_float,mu_A,mc_estimate,mc_stderr\n";
  out << std::setprecision(17);
  for (const auto& row : r.rows) {
    out << r.system << ',' << r.n_ambient << ',' << r.set_size << ',' << row.n << ','
        << ToFractionString(row.exact) << ',' << row.exact.get_d() << ','
        << ToFractionString(r.mu_a) << ',';
    if (row.mc_estimate) out << *row.mc_estimate;
    out << ',';
    if (row.mc_stderr) out << *row.mc_stderr;
    out << '\n';
  }
  return out.str();
}

std::string ReportToTable(const experiments::MeasureReport& r) {
  std::ostringstream out;
  out << r.system << "  N=" << r.n_ambient << "  |set|=" << r.set_size << " ("
      << r.certificate << ")  mu(A)=" << ToFractionString(r.mu_a) << "\n";
  out << experiments::ThresholdVariantName(r.variant) << " ell* = " << r.ell_star << "\n";
  std::vector<std::string> labels;
  bool mc = false;
  for (const auto& row : r.rows) {
    mc = mc || row.mc_estimate.has_value();
    if (labels.empty()) {
      for (const auto& c : row.checks) labels.push_back(c.label);
    }
  }
  out << std::left << std::setw(6) << "n" << std::setw(26) << "exact";
  if (mc) out << std::setw(26) << "monte carlo";
  for (const auto& l : labels) out << std::setw(28) << ("mu_A^" + l);
  out << "result\n";
  for (const auto& row : r.rows) {
    out << std::setw(6) << row.n << std::setw(26) << ToFractionString(row.exact);
    if (mc) {
      std::ostringstream cell;
      if (row.mc_estimate) {
        cell << std::setprecision(4) << *row.mc_estimate << " +- " << *row.mc_stderr;
      }
      out << std::setw(26) << cell.str();
    }
    bool ok = row.upper_bound_ok;
    for (const auto& c : row.checks) {
      out << std::setw(28) << (c.power + " " + experiments::VerdictName(c.verdict));
      if (c.required && c.verdict != experiments::Verdict::kPass) ok = false;
    }
    for (std::size_t k = row.checks.size(); k < labels.size(); ++k) out << std::setw(28) << "-";
    out << (row.checks.empty() ? "skip" : ok ? "pass" : "fail") << "\n";
  }
  for (const auto& d : r.discrepancies) out << "note: " << d << "\n";
  return out.str();
}

std::string SystemToJson(const dynamics::RecurrenceSystem& s) {
  Json out;
  out["name"] = dynamics::SystemKindName(s.kind);
  out["dim"] = s.dim();
  out["coordinates"] = s.coordinates;
  Json gens = Json::array();
  for (const auto& g : s.generators) {
    Json gj;
    gj["name"] = g.name;
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.map.dim(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < g.map.dim(); ++k) row.push_back(g.map.matrix()(i, k));
      rows.push_back(std::move(row));
    }
    gj["matrix"] = std::move(rows);
    Json t = Json::array();
    for (const auto& v : g.map.translation()) {
      t.push_back({ToFractionString(v.q0()), ToFractionString(v.q1()),
                   ToFractionString(v.q2())});
    }
    gj["translation"] = std::move(t);
    gens.push_back(std::move(gj));
  }
  out["generators"] = std::move(gens);
  Json roles = Json::array();
  for (int r = 0; r < static_cast<int>(s.roles.size()); ++r) roles.push_back(s.RoleName(r));
  out["roles"] = std::move(roles);
  Json ind = Json::array();
  for (int c : s.indicator_coordinates) ind.push_back(s.coordinates[static_cast<std::size_t>(c)]);
  out["indicator_coordinates"] = std::move(ind);
  out["commuting"] = s.commuting;
  return out.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kParse, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(Errc::kParse, "write to '" + path + "' failed");
}

}  // namespace nilrec::io

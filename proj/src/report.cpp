#include "curvlab/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>

namespace curvlab {

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> table = {
      {"exact", 0.0},            // integer-valued structure checks
      {"self_adjoint", 1e-12},   // bracket self-adjointness on random triples
      {"norm_bridge", 1e-12},    // |Rm|^2 = 4 <R, R>
      {"sharp_comm", 1e-12},     // A#B = B#A entrywise
      {"tri_symmetry", 1e-10},   // tri under all argument permutations
      {"conjugation", 1e-10},    // invariants under orthogonal conjugation
      {"bianchi", 1e-12},        // projector residuals
      {"psd", 1e-12},            // nonneg draws stay PSD
      {"tachibana", 1e-10},      // gap >= -tol * (1+<R,R>)^{3/2}
      {"decomp", 1e-12},         // decomposition reassembly / trace splits
      {"decomp_orth", 1e-10},    // part orthogonality, norm split
      {"weyl_ricci", 1e-10},     // ricci(R_W) = 0
      {"identity_rel", 1e-9},    // bw / eq / closures / hu / main / sum
      {"lcf_gap", 1e-12},        // sign of the gap, scaled
      {"lcf_match", 1e-9},       // gap against closed form
      {"dim3", 1e-9},            // 3d equivalence residual
      {"optimizer", 1e-6},       // numeric vs closed-form extrema
      {"lagrange", 1e-12},       // first-order conditions at critical points
      {"enum_exact", 1e-14},     // enumerated-table consistency
      {"f_nonneg", 1e-12},       // f >= -tol * scale on samples
      {"equality_f", 1e-12},     // f = 0 on the equality family, scaled
      {"classify", 1e-8},        // classification tolerance
      {"soliton", 1e-15},        // Ric + Hess - g/2
      {"scaling", 1e-14},        // sigma^2/S^2 under tau-scaling
      {"model_zero", 1e-12},     // model quantities that vanish exactly
  };
  return table;
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {
      "lie", "curvature", "decomposition", "identities", "extremal", "models"};
  return names;
}

double RunConfig::tol(const std::string& name) const {
  auto o = tol_overrides.find(name);
  if (o != tol_overrides.end()) return o->second;
  auto d = default_tolerances().find(name);
  if (d == default_tolerances().end())
    throw UsageError("unknown tolerance name: " + name);
  return d->second;
}

void RunConfig::validate() const {
  if (dims.empty()) throw UsageError("no dimensions requested");
  for (int d : dims)
    if (d < 3 || d > 12)
      throw UsageError("dimension out of range [3, 12]: " + std::to_string(d));
  if (trials < 1) throw UsageError("trials must be >= 1");
  for (const auto& s : suites) {
    const auto& all = all_suites();
    if (std::find(all.begin(), all.end(), s) == all.end())
      throw UsageError("unknown suite: " + s);
  }
  for (const auto& [name, value] : tol_overrides) {
    if (!default_tolerances().count(name))
      throw UsageError("unknown tolerance name: " + name);
    if (value < 0.0) throw UsageError("tolerance must be >= 0: " + name);
  }
}

int Report::failures() const {
  int n = 0;
  for (const auto& r : records)
    if (!r.pass) ++n;
  return n;
}

bool Report::pass() const { return failures() == 0; }

namespace {

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json tols = nlohmann::json::object();
  for (const auto& [k, v] : c.tol_overrides) tols[k] = v;
  return nlohmann::json{
      {"dims", c.dims},
      {"trials", c.trials},
      {"seed", c.seed},
      {"suites", c.suites.empty() ? all_suites() : c.suites},
      {"tolerances", tols},
      {"format", c.format == ReportFormat::json ? "json" : "markdown"},
      {"out", c.out_path ? nlohmann::json(*c.out_path) : nlohmann::json(nullptr)},
  };
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace

std::string Report::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records)
    recs.push_back({{"suite", r.suite},
                    {"check", r.check},
                    {"dim", r.dim},
                    {"trials", r.trials},
                    {"max_rel_residual", r.max_rel_residual},
                    {"threshold", r.threshold},
                    {"pass", r.pass}});
  nlohmann::json doc = {
      {"summary",
       {{"pass", pass()},
        {"checks", static_cast<int>(records.size())},
        {"failures", failures()},
        {"wall_time_ms", wall_time_ms}}},
      {"records", recs},
      {"provenance", {{"seed", config.seed}, {"config", config_json(config)}}},
  };
  return doc.dump(2) + "\n";
}

std::string Report::to_markdown() const {
  std::string out;
  out += "# curvature operator verification report\n\n";
  out += "- seed: " + std::to_string(config.seed) +
         " | trials: " + std::to_string(config.trials) + " | dims:";
  for (int d : config.dims) out += " " + std::to_string(d);
  out += "\n- result: " + std::string(pass() ? "PASS" : "FAIL") + " (" +
         std::to_string(records.size()) + " checks, " + std::to_string(failures()) +
         " failures)\n";

  std::string current;
  for (const auto& r : records) {
    if (r.suite != current) {
      current = r.suite;
      out += "\n## " + current + "\n\n";
      out += "| check | dim | trials | max rel residual | threshold | pass |\n";
      out += "|---|---|---|---|---|---|\n";
    }
    out += "| " + r.check + " | " + std::to_string(r.dim) + " | " +
           std::to_string(r.trials) + " | " + sci(r.max_rel_residual) + " | " +
           sci(r.threshold) + " | " + (r.pass ? "yes" : "no") + " |\n";
  }
  return out;
}

std::string Report::render() const {
  return config.format == ReportFormat::json ? to_json() : to_markdown();
}

}  // namespace curvlab

// End-to-end acceptance run. Each numbered criterion prints one PASS/FAIL
// line; the process exits nonzero if any criterion fails. argv[1] must be
// the path to the command line binary.

#include "curvlab/curvature.hpp"
#include "curvlab/decomposition.hpp"
#include "curvlab/extremal.hpp"
#include "curvlab/identities.hpp"
#include "curvlab/lambda2.hpp"
#include "curvlab/models.hpp"
#include "curvlab/parallel.hpp"
#include "curvlab/rng.hpp"

#include "json.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace curvlab;

namespace {

int g_failures = 0;

/// Runs one criterion, reports [PASS]/[FAIL] with its wall time, and folds
/// any escaped exception into a failure instead of aborting the run.
void criterion(const char* label, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string("  [") + e.what() + "]";
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                   .count();
  if (!ok) ++g_failures;
  std::printf("[%s] %-52s %7.2fs%s\n", ok ? "PASS" : "FAIL", label, sec,
              note.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int run_cli(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  if (rc == -1 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 2;
  }
  const std::string cli = std::string("\"") + argv[1] + "\"";

  criterion("1. structure constants are integer-exact", [] {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n : {3, 4, 5}) {
      auto f = build_frame(n);
      int big_n = f->dim();
      for (int a = 0; a < big_n; ++a)
        for (int b = 0; b < big_n; ++b) {
          Eigen::MatrixXd br = lie_bracket(f->basis_matrix(a), f->basis_matrix(b));
          Eigen::MatrixXd span = Eigen::MatrixXd::Zero(n, n);
          for (int g = 0; g < big_n; ++g) {
            span += f->c(a, b, g) * f->basis_matrix(g);
            worst = std::max(worst, std::abs(f->c(a, b, g) + f->c(b, a, g)));
          }
          worst = std::max(worst, (br - span).cwiseAbs().maxCoeff());
        }
      for (int a = 0; a < big_n; ++a)
        for (int b = 0; b < big_n; ++b)
          for (int g = 0; g < big_n; ++g)
            for (int d = 0; d < big_n; ++d) {
              double jac = 0.0;
              for (int e = 0; e < big_n; ++e)
                jac += f->c(a, b, e) * f->c(e, g, d) + f->c(b, g, e) * f->c(e, a, d) +
                       f->c(g, a, e) * f->c(e, b, d);
              worst = std::max(worst, std::abs(jac));
            }
    }
    auto f3 = build_frame(3);
    bool pinned = f3->c(0, 1, f3->pair_index(1, 2)) == -1.0;
    return worst == 0.0 && pinned && seconds_since(t0) < 1.0;
  });

  criterion("2. structure identities on random operators", [] {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n = 3; n <= 8; ++n) {
      worst = std::max(worst, max_over_trials(200, [n](int t) {
                double w = 0.0;
                CurvOp r = random_curv(n, derive_seed(fnv1a("acc/structure"),
                                                      1000 * n + t));
                double nrm = op_norm(r);
                double cube = 1.0 + nrm * nrm * nrm;
                w = std::max(w, bw_residuals(r).max() / cube);
                w = std::max(w, huisken_residuals(r).max_rel());
                w = std::max(w, sum_consistency(r) / cube);
                w = std::max(w, main_identity_residual(r).max_rel());
                return w;
              }));
    }
    return worst <= 1e-9 && seconds_since(t0) < 30.0;
  });

  criterion("3. gap sign and closed form without weyl", [] {
    double ratio = 0.0;
    for (int n = 3; n <= 8; ++n) {
      ratio = std::max(ratio, max_over_trials(500, [n](int t) {
                CurvOp r = random_lcf_curv(n, derive_seed(fnv1a("acc/lcf"),
                                                          1000 * n + t));
                double gap = lcf_gap(r);
                double rr = op_inner(r, r);
                double sign_excess =
                    std::max(0.0, gap) / ((1.0 + rr) * (1.0 + rr));

                Decomposition d = decompose(r);
                double cf = lcf_closed_form(n, d.s, d.sigma_tilde2,
                                            d.lambda.array().cube().sum());
                double match = std::abs(gap - cf) /
                               (1.0 + std::max(std::abs(gap), std::abs(cf)));
                return std::max(sign_excess / 1e-12, match / 1e-9);
              }));
    }
    return ratio <= 1.0;
  });

  criterion("4. nonnegative operators pass the trace gap", [] {
    double ratio = 0.0;
    for (int n = 3; n <= 6; ++n) {
      ratio = std::max(ratio, max_over_trials(500, [n](int t) {
                CurvOp r = random_nonneg_curv(n, derive_seed(fnv1a("acc/nonneg"),
                                                             1000 * n + t));
                double rr = op_inner(r, r);
                double deficit =
                    std::max(0.0, -tachibana_gap(r)) / std::pow(1.0 + rr, 1.5);
                return deficit / 1e-10;
              }));
      CurvOp id = CurvOp::identity(build_frame(n));
      if (tachibana_gap(id) != 0.0) return false;
      CurvOp cyl = round_cylinder(n).op;
      double rr = op_inner(cyl, cyl);
      ratio = std::max(ratio, std::abs(tachibana_gap(cyl)) /
                                  (1e-12 * std::pow(1.0 + rr, 1.5)));
    }
    return ratio <= 1.0;
  });

  criterion("5. optimizer agrees with the closed-form extremes", [] {
    auto t0 = std::chrono::steady_clock::now();
    if (std::abs(sharp_bound(3) - 0.4082482904638630) > 1e-12) return false;
    if (std::abs(sharp_bound(4) - 0.5773502691896258) > 1e-12) return false;

    double ratio = 0.0;
    for (int n = 3; n <= 12; ++n) {
      double bound = sharp_bound(n);
      auto crit = enumerate_critical(n);
      for (const auto& p : crit)
        ratio = std::max(ratio, p.stationarity_residual() / 1e-12);

      auto mins = optimize_g_multistart(n, derive_seed(fnv1a("acc/opt-min"), n),
                                        OptimizeDirection::minimize);
      auto maxs = optimize_g_multistart(n, derive_seed(fnv1a("acc/opt-max"), n),
                                        OptimizeDirection::maximize);
      double best_min = mins.front().g, best_max = maxs.front().g;
      for (const auto& p : mins) best_min = std::min(best_min, p.g);
      for (const auto& p : maxs) best_max = std::max(best_max, p.g);
      ratio = std::max(ratio, std::abs(best_min + bound) / 1e-6);
      ratio = std::max(ratio, std::abs(best_max - bound) / 1e-6);

      for (const auto& list : {mins, maxs})
        for (const auto& p : list) {
          if (!p.converged) continue;
          double nearest = 1e300;
          for (const auto& q : crit)
            nearest = std::min(nearest, std::abs(p.g - q.g));
          ratio = std::max(ratio, nearest / 1e-6);
        }

      ratio = std::max(ratio, max_over_trials(100, [n](int t) {
                std::uint64_t s = derive_seed(fnv1a("acc/f-nonneg"),
                                              1000 * n + t);
                double w = 0.0;
                for (int k = 0; k < 1000; ++k) {
                  std::uint64_t sk = derive_seed(s, k);
                  Eigen::VectorXd lam =
                      random_gaussian(n, 1, derive_seed(sk, 0)).col(0);
                  lam.array() -= lam.mean();
                  lam *= random_uniform(0.1, 3.0, derive_seed(sk, 1));
                  double sv = random_uniform(-10.0, 10.0, derive_seed(sk, 2));
                  double deficit = std::max(0.0, -f_quartic(sv, lam));
                  w = std::max(w, deficit / f_quartic_scale(sv, lam));
                }
                return w / 1e-12;
              }));
    }
    return ratio <= 1.0 && seconds_since(t0) < 60.0;
  });

  criterion("6. equality family zeroes the quartic", [] {
    double ratio = 0.0;
    for (int n = 3; n <= 8; ++n) {
      for (double a : {1e-3, 1.0, 1e3}) {
        auto [lam, s] = equality_case_ii(n, a);
        ratio = std::max(ratio, std::abs(f_quartic(s, lam)) /
                                    (1e-12 * f_quartic_scale(s, lam)));
        if (classify_equality(lam, s) != EqualityCase::cylindrical) return false;
      }
      Eigen::VectorXd witness = Eigen::VectorXd::Zero(n);
      witness[0] = 1.0 / std::sqrt(2.0);
      witness[1] = -witness[0];
      if (classify_equality(witness, 1.0) != EqualityCase::none) return false;
    }
    return ratio <= 1.0;
  });

  criterion("7. model solitons verify and classify", [] {
    for (int n = 3; n <= 8; ++n) {
      std::vector<ModelSoliton> models = {gaussian(n), round_sphere(n),
                                          round_cylinder(n)};
      if (soliton_residual(models[0]) > 1e-15) return false;
      if (soliton_residual(models[1]) > 1e-15) return false;
      if (soliton_residual(models[2]) > 1e-15) return false;
      if (classify_model(models[0]) != ModelClass::flat) return false;
      if (classify_model(models[1]) != ModelClass::einstein) return false;
      if (classify_model(models[2]) != ModelClass::cylindrical) return false;

      Decomposition d = decompose(models[2].op);
      double a_rec = -d.lambda[0] * std::sqrt(n / (n - 1.0));
      double s_rec = std::sqrt(n * (n - 1.0)) * a_rec;
      if (std::abs(s_rec - d.s) > 1e-12 * (1.0 + d.s)) return false;
      if (op_norm(d.r_weyl) > 1e-12 * (1.0 + op_norm(models[2].op))) return false;
    }
    return true;
  });

  criterion("8. the two three-dimensional displays agree", [] {
    if (hamilton_p(1.0, 1.0, 1.0) != 0.0) return false;
    if (hamilton_p(1.0, 1.0, 0.0) != 0.0) return false;
    if (hamilton_p(1.0, 0.0, 0.0) != 1.0) return false;
    if (hamilton_p(2.0, 1.0, 0.0) != 7.0) return false;
    double ratio = max_over_trials(500, [](int t) {
      Eigen::MatrixXd ric =
          random_symmetric(3, derive_seed(fnv1a("acc/dim3"), t));
      double s = ric.trace();
      return dim3_equivalence_residual(ric) / (1e-9 * (1.0 + s * s * s * s));
    });
    return ratio <= 1.0;
  });

  criterion("9. the ricci ratio is scale invariant", [] {
    double ratio = 0.0;
    auto fold = [&ratio](const CurvOp& r) {
      Eigen::MatrixXd ric = ricci(r);
      double s = ric.trace();
      double rho = ric.squaredNorm() / (s * s);
      for (double tau : {0.1, 2.0, 10.0})
        ratio = std::max(ratio, scaling_check(r, tau) / (1e-14 * (1.0 + rho)));
    };
    for (int n = 3; n <= 6; ++n) {
      fold(round_sphere(n).op);
      fold(round_cylinder(n).op);
    }
    int used = 0;
    for (std::uint64_t t = 0; used < 25 && t < 200; ++t) {
      CurvOp r = random_curv(static_cast<int>(4 + t % 3),
                             derive_seed(fnv1a("acc/scaling"), t));
      if (std::abs(scalar(r)) <= 0.5) continue;
      fold(r);
      ++used;
    }
    return used == 25 && ratio <= 1.0;
  });

  criterion("10. the command line round trip is deterministic", [&cli] {
    const std::string file = "acceptance_report.json";
    const std::string cmd = cli +
                            " verify --dims 3,4,5,6 --trials 100 --seed 42"
                            " --format json --out " +
                            file;
    if (run_cli(cmd) != 0) return false;
    std::string first = slurp(file);
    if (run_cli(cmd) != 0) return false;
    std::string second = slurp(file);
    std::remove(file.c_str());

    nlohmann::json a = nlohmann::json::parse(first);
    nlohmann::json b = nlohmann::json::parse(second);

    if (!a.at("summary").at("pass").get<bool>()) return false;
    if (a.at("summary").at("failures").get<int>() != 0) return false;
    if (a.at("records").empty()) return false;
    if (a.at("summary").at("checks").get<int>() !=
        static_cast<int>(a.at("records").size()))
      return false;
    for (const char* key : {"suite", "check", "dim", "trials",
                            "max_rel_residual", "threshold", "pass"})
      if (!a.at("records").at(0).contains(key)) return false;
    for (const auto& rec : a.at("records"))
      if (!rec.at("pass").get<bool>() ||
          rec.at("max_rel_residual").get<double>() >
              rec.at("threshold").get<double>())
        return false;
    if (a.at("provenance").at("seed").get<std::uint64_t>() != 42) return false;
    if (a.at("provenance").at("config").at("suites").size() != 6) return false;

    a["summary"]["wall_time_ms"] = 0.0;
    b["summary"]["wall_time_ms"] = 0.0;
    if (a.dump() != b.dump()) return false;

    if (run_cli(cli + " verify --dims 2 2>/dev/null") != 2) return false;
    if (run_cli(cli + " verify --trials 0 2>/dev/null") != 2) return false;
    if (run_cli(cli + " verify --format yaml 2>/dev/null") != 2) return false;
    if (run_cli(cli + " no-such-command 2>/dev/null") != 2) return false;

    const std::string table = "acceptance_extremal.json";
    if (run_cli(cli + " extremal --dim 4 --format json --out " + table) != 0)
      return false;
    nlohmann::json ext = nlohmann::json::parse(slurp(table));
    std::remove(table.c_str());
    return ext.at("dim").get<int>() == 4 &&
           ext.at("critical_points").size() == 3;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}

#include "curvlab/suites.hpp"

#include "curvlab/curvature.hpp"
#include "curvlab/decomposition.hpp"
#include "curvlab/extremal.hpp"
#include "curvlab/identities.hpp"
#include "curvlab/lambda2.hpp"
#include "curvlab/models.hpp"
#include "curvlab/parallel.hpp"
#include "curvlab/rng.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>

namespace curvlab {

namespace {

double rel(double resid, double scale) { return resid / (1.0 + scale); }

struct Ctx {
  const RunConfig& cfg;
  std::vector<CheckRecord>& records;
  const char* suite;
  int dim;

  std::uint64_t seed_for(const char* check) const {
    std::string key = std::string(suite) + "/" + check;
    return derive_seed(cfg.seed ^ fnv1a(key.c_str()), static_cast<std::uint64_t>(dim));
  }

  void add(const char* check, const char* tol_name, double residual, int trials) {
    double threshold = cfg.tol(tol_name);
    records.push_back(CheckRecord{suite, check, dim, trials, residual, threshold,
                                  residual <= threshold});
  }
};

Eigen::MatrixXd random_skew(int n, std::uint64_t seed) {
  Eigen::MatrixXd g = random_gaussian(n, n, seed);
  return g - g.transpose();
}

// ---------------------------------------------------------------- lie --

void run_lie(Ctx& c) {
  int n = c.dim;
  auto f = build_frame(n);
  int nn = f->dim();

  double worst = 0.0;
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b) {
      double expect = a == b ? 1.0 : 0.0;
      worst = std::max(
          worst, std::abs(so_inner(f->basis_matrix(a), f->basis_matrix(b)) - expect));
    }
  c.add("orthonormality", "exact", worst, 1);

  worst = 0.0;
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b)
      for (int g = 0; g < nn; ++g)
        worst = std::max(worst, std::abs(f->c(a, b, g) + f->c(b, a, g)));
  c.add("antisymmetry", "exact", worst, 1);

  // Exhaustive Jacobi when affordable, else random eta-quadruples; both
  // exact because the structure constants are small integers.
  auto jacobi_at = [&](int a, int b, int g, int eta) {
    double s = 0.0;
    for (int d = 0; d < nn; ++d)
      s += f->c(a, b, d) * f->c(d, g, eta) + f->c(b, g, d) * f->c(d, a, eta) +
           f->c(g, a, d) * f->c(d, b, eta);
    return std::abs(s);
  };
  worst = 0.0;
  double quads = static_cast<double>(nn) * nn * nn * nn;
  int checked;
  if (quads * nn <= 2.5e7) {
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b)
        for (int g = 0; g < nn; ++g)
          for (int eta = 0; eta < nn; ++eta)
            worst = std::max(worst, jacobi_at(a, b, g, eta));
    checked = static_cast<int>(quads);
  } else {
    checked = c.cfg.trials * 1000;
    std::uint64_t seed = c.seed_for("jacobi");
    for (int t = 0; t < checked; ++t) {
      std::uint64_t s = derive_seed(seed, t);
      int a = static_cast<int>(derive_seed(s, 0) % nn);
      int b = static_cast<int>(derive_seed(s, 1) % nn);
      int g = static_cast<int>(derive_seed(s, 2) % nn);
      int eta = static_cast<int>(derive_seed(s, 3) % nn);
      worst = std::max(worst, jacobi_at(a, b, g, eta));
    }
  }
  c.add("jacobi", "exact", worst, checked);

  worst = 0.0;
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b) {
      Eigen::MatrixXd lhs = lie_bracket(f->basis_matrix(a), f->basis_matrix(b));
      Eigen::MatrixXd rhs = f->from_coefficients(f->c_slice(a).row(b).transpose());
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  c.add("bracket_expansion", "exact", worst, nn * nn);

  double r = max_over_trials(c.cfg.trials, [&](int t) {
    std::uint64_t s = derive_seed(c.seed_for("self_adjointness"), t);
    Eigen::MatrixXd a = random_skew(n, derive_seed(s, 0));
    Eigen::MatrixXd b = random_skew(n, derive_seed(s, 1));
    Eigen::MatrixXd cc = random_skew(n, derive_seed(s, 2));
    double lhs = so_inner(lie_bracket(a, b), cc);
    double rhs = -so_inner(lie_bracket(cc, b), a);
    return rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
  });
  c.add("self_adjointness", "self_adjoint", r, c.cfg.trials);

  r = max_over_trials(c.cfg.trials, [&](int t) {
    std::uint64_t s = derive_seed(c.seed_for("bracket_bilinear"), t);
    Eigen::MatrixXd a = random_skew(n, derive_seed(s, 0));
    Eigen::MatrixXd b = random_skew(n, derive_seed(s, 1));
    Eigen::VectorXd u = f->to_coefficients(a);
    Eigen::VectorXd v = f->to_coefficients(b);
    Eigen::VectorXd w = Eigen::VectorXd::Zero(nn);
    for (int al = 0; al < nn; ++al)
      if (u[al] != 0.0) w += u[al] * (f->c_slice(al).transpose() * v);
    Eigen::MatrixXd direct = lie_bracket(a, b);
    double scale = direct.cwiseAbs().maxCoeff();
    return rel((f->from_coefficients(w) - direct).cwiseAbs().maxCoeff(), scale);
  });
  c.add("bracket_bilinear", "self_adjoint", r, c.cfg.trials);
}

// ---------------------------------------------------------- curvature --

void run_curvature(Ctx& c) {
  int n = c.dim;
  auto frame = build_frame(n);
  int trials = c.cfg.trials;

  double r = max_over_trials(trials, [&](int t) {
    CurvOp op = random_curv(n, derive_seed(c.seed_for("norm_bridge"), t));
    double four = 4.0 * op_inner(op, op);
    return rel(std::abs(tensor_norm2(op) - four), std::abs(four));
  });
  c.add("tensor_norm_bridge", "norm_bridge", r, trials);

  r = max_over_trials(trials, [&](int t) {
    std::uint64_t s = derive_seed(c.seed_for("sharp_commutes"), t);
    CurvOp a(frame, random_symmetric(frame->dim(), derive_seed(s, 0)));
    CurvOp b(frame, random_symmetric(frame->dim(), derive_seed(s, 1)));
    Eigen::MatrixXd ab = sharp(a, b).matrix();
    Eigen::MatrixXd ba = sharp(b, a).matrix();
    return rel((ab - ba).cwiseAbs().maxCoeff(), ab.cwiseAbs().maxCoeff());
  });
  c.add("sharp_commutes", "sharp_comm", r, trials);

  {
    CurvOp i_op = CurvOp::identity(frame);
    Eigen::MatrixXd expect =
        (n - 2.0) * Eigen::MatrixXd::Identity(frame->dim(), frame->dim());
    c.add("sharp_identity", "exact",
          (sharp(i_op, i_op).matrix() - expect).cwiseAbs().maxCoeff(), 1);
  }

  r = max_over_trials(trials, [&](int t) {
    std::uint64_t s = derive_seed(c.seed_for("tri_symmetry"), t);
    CurvOp a(frame, random_symmetric(frame->dim(), derive_seed(s, 0)));
    CurvOp b(frame, random_symmetric(frame->dim(), derive_seed(s, 1)));
    CurvOp d(frame, random_symmetric(frame->dim(), derive_seed(s, 2)));
    double vals[6] = {tri(a, b, d), tri(a, d, b), tri(b, a, d),
                      tri(b, d, a), tri(d, a, b), tri(d, b, a)};
    double lo = *std::min_element(vals, vals + 6);
    double hi = *std::max_element(vals, vals + 6);
    return rel(hi - lo, std::max(std::abs(lo), std::abs(hi)));
  });
  c.add("tri_full_symmetry", "tri_symmetry", r, trials);

  r = max_over_trials(trials, [&](int t) {
    std::uint64_t s = derive_seed(c.seed_for("bianchi_projection"), t);
    CurvOp raw(frame, random_symmetric(frame->dim(), s));
    RiemannTensor tens = to_riemann(raw);
    RiemannTensor proj = bianchi_project(tens);
    double scale = tens.max_abs();
    double worst = rel(proj.bianchi_residual(), scale);
    RiemannTensor twice = bianchi_project(proj);
    twice -= proj;
    worst = std::max(worst, rel(twice.max_abs(), scale));
    double growth = proj.squared_norm() - tens.squared_norm();
    worst = std::max(worst, rel(std::max(0.0, growth), tens.squared_norm()));
    return worst;
  });
  c.add("bianchi_projection", "bianchi", r, trials);

  r = max_over_trials(trials, [&](int t) {
    CurvOp op = random_curv(n, derive_seed(c.seed_for("random_curv_bianchi"), t));
    RiemannTensor tens = to_riemann(op);
    double worst = rel(tens.bianchi_residual(), tens.max_abs());
    CurvOp back = op_from_tensor(tens);
    worst = std::max(worst, (back.matrix() - op.matrix()).cwiseAbs().maxCoeff());
    return worst;
  });
  c.add("random_curv_bianchi", "bianchi", r, trials);

  r = max_over_trials(trials, [&](int t) {
    CurvOp op = random_nonneg_curv(n, derive_seed(c.seed_for("nonneg_psd"), t));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.matrix());
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().maxCoeff();
    return rel(std::max(0.0, -lo), std::abs(hi));
  });
  c.add("nonneg_psd", "psd", r, trials);

  r = max_over_trials(trials, [&](int t) {
    CurvOp op = random_nonneg_curv(n, derive_seed(c.seed_for("tachibana"), t));
    double scale = std::pow(1.0 + op_inner(op, op), 1.5);
    return std::max(0.0, -tachibana_gap(op)) / scale;
  });
  c.add("tachibana_nonneg", "tachibana", r, trials);

  r = max_over_trials(trials, [&](int t) {
    std::uint64_t s = derive_seed(c.seed_for("conjugation"), t);
    CurvOp op = random_curv(n, derive_seed(s, 0));
    CurvOp rot = conjugate(op, random_rotation(n, derive_seed(s, 1)));
    double worst = 0.0;
    auto cmp = [&](double x, double y) {
      worst = std::max(worst, rel(std::abs(x - y), std::max(std::abs(x), std::abs(y))));
    };
    cmp(scalar(op), scalar(rot));
    cmp(ricci(op).squaredNorm(), ricci(rot).squaredNorm());
    cmp(tensor_norm2(op), tensor_norm2(rot));
    cmp(tri(op), tri(rot));
    cmp(tachibana_gap(op), tachibana_gap(rot));
    return worst;
  });
  c.add("conjugation_invariants", "conjugation", r, trials);
}

// ------------------------------------------------------ decomposition --

void run_decomposition(Ctx& c) {
  int n = c.dim;
  auto frame = build_frame(n);
  int trials = c.cfg.trials;
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

  double r = max_over_trials(trials, [&](int t) {
    CurvOp op = random_curv(n, derive_seed(c.seed_for("parts"), t));
    Decomposition d = decompose(op);
    double nrm = op_norm(op);
    double worst = rel(op_norm(op - (d.r_trace + d.r_ric0 + d.r_weyl)), nrm);
    return worst;
  });
  c.add("parts_sum", "decomp", r, trials);

  r = max_over_trials(trials, [&](int t) {
    CurvOp op = random_curv(n, derive_seed(c.seed_for("orthogonal"), t));
    Decomposition d = decompose(op);
    double scale = op_inner(op, op);
    double worst = rel(std::abs(op_inner(d.r_trace, d.r_ric0)), scale);
    worst = std::max(worst, rel(std::abs(op_inner(d.r_trace, d.r_weyl)), scale));
    worst = std::max(worst, rel(std::abs(op_inner(d.r_ric0, d.r_weyl)), scale));
    return worst;
  });
  c.add("parts_orthogonal", "decomp_orth", r, trials);

  r = max_over_trials(trials, [&](int t) {
    CurvOp op = random_curv(n, derive_seed(c.seed_for("weyl_ricci"), t));
    Decomposition d = decompose(op);
    return rel(ricci(d.r_weyl).norm(), op_norm(op));
  });
  c.add("weyl_ricci_free", "weyl_ricci", r, trials);

  r = max_over_trials(trials, [&](int t) {
    CurvOp op = random_curv(n, derive_seed(c.seed_for("sigma_split"), t));
    Decomposition d = decompose(op);
    return rel(std::abs(d.sigma2 - d.s * d.s / n - d.sigma_tilde2), d.sigma2);
  });
  c.add("sigma_split", "decomp", r, trials);

  r = max_over_trials(trials, [&](int t) {
    CurvOp op = random_curv(n, derive_seed(c.seed_for("norm_split"), t));
    Decomposition d = decompose(op);
    double total = op_inner(op, op);
    double parts = d.s * d.s / (2.0 * n * (n - 1.0)) + d.sigma_tilde2 / (n - 2.0) +
                   op_inner(d.r_weyl, d.r_weyl);
    return rel(std::abs(total - parts), total);
  });
  c.add("norm_split", "decomp_orth", r, trials);

  c.add("wedge_identity", "exact",
        (wedge(id, id).matrix() -
         Eigen::MatrixXd::Identity(frame->dim(), frame->dim()))
            .cwiseAbs()
            .maxCoeff(),
        1);

  r = max_over_trials(trials, [&](int t) {
    std::uint64_t s = derive_seed(c.seed_for("wedge_ricci"), t);
    Eigen::MatrixXd a = random_symmetric(n, derive_seed(s, 0));
    Eigen::MatrixXd b = random_symmetric(n, derive_seed(s, 1));
    Eigen::MatrixXd got = ricci(wedge(a, b));
    Eigen::MatrixXd expect =
        0.5 * (b.trace() * a + a.trace() * b - a * b - b * a);
    return rel((got - expect).cwiseAbs().maxCoeff(), expect.cwiseAbs().maxCoeff());
  });
  c.add("wedge_ricci", "decomp", r, trials);

  // Structure identities; residuals are cubic in R, so normalize by the
  // cube of the operator norm.
  const char* names[8] = {"bw1",
                          "eq1",
                          "eq2",
                          "closure_trace_weyl",
                          "closure_trace_trace",
                          "closure_weyl_weyl",
                          "closure_trace_ric0",
                          "closure_ric0_weyl"};
  std::vector<double> worst(8, 0.0);
  std::mutex merge_mu;
  max_over_trials(trials, [&](int t) {
    CurvOp op = random_curv(n, derive_seed(c.seed_for("bw"), t));
    BwResiduals res = bw_residuals(op);
    double nrm = op_norm(op);
    double scale = 1.0 + nrm * nrm * nrm;
    auto entries = res.entries();
    std::lock_guard<std::mutex> lock(merge_mu);
    for (int i = 0; i < 8; ++i)
      worst[i] = std::max(worst[i], entries[i].second / scale);
    return 0.0;
  });
  for (int i = 0; i < 8; ++i) c.add(names[i], "identity_rel", worst[i], trials);

  r = max_over_trials(trials, [&](int t) {
    Eigen::MatrixXd t0 =
        random_traceless_symmetric(n, derive_seed(c.seed_for("eq2_standalone"), t));
    CurvOp w = wedge(t0, t0);
    Decomposition d = decompose(w);
    double st2 = t0.squaredNorm();
    Eigen::MatrixXd sq0 = t0 * t0;
    sq0.diagonal().array() -= sq0.trace() / n;
    CurvOp i_op = CurvOp::identity(frame);
    double resid =
        std::hypot(op_norm(d.r_trace - (-st2 / (n * (n - 1.0))) * i_op),
                   op_norm(d.r_ric0 - (-2.0 / (n - 2.0)) * wedge(sq0, id)));
    return rel(resid, op_norm(w));
  });
  c.add("eq2_standalone", "decomp_orth", r, trials);
}

// --------------------------------------------------------- identities --

void run_identities(Ctx& c) {
  int n = c.dim;
  int trials = c.cfg.trials;

  std::vector<double> worst(5, 0.0);  // hu1 hu2 hu3 sum main
  std::mutex merge_mu;
  max_over_trials(trials, [&](int t) {
    CurvOp op = random_curv(n, derive_seed(c.seed_for("hu"), t));
    IdentityResiduals hu = huisken_residuals(op);
    double sum_abs = sum_consistency(op);
    double sum_scale = std::abs(2.0 * tri(op));
    IdentityResiduals main = main_identity_residual(op);
    std::lock_guard<std::mutex> lock(merge_mu);
    worst[0] = std::max(worst[0], hu.items.at("hu1").rel_residual());
    worst[1] = std::max(worst[1], hu.items.at("hu2").rel_residual());
    worst[2] = std::max(worst[2], hu.items.at("hu3").rel_residual());
    worst[3] = std::max(worst[3], rel(sum_abs, sum_scale));
    worst[4] = std::max(worst[4], main.items.at("hu_main").rel_residual());
    return 0.0;
  });
  c.add("hu1", "identity_rel", worst[0], trials);
  c.add("hu2", "identity_rel", worst[1], trials);
  c.add("hu3", "identity_rel", worst[2], trials);
  c.add("sum_consistency", "identity_rel", worst[3], trials);
  c.add("hu_main", "identity_rel", worst[4], trials);

  double sign_worst = 0.0, match_worst = 0.0;
  max_over_trials(trials, [&](int t) {
    CurvOp op = random_lcf_curv(n, derive_seed(c.seed_for("lcf"), t));
    Decomposition d = decompose(op);
    double gap = lcf_gap(op);
    double scale = 1.0 + op_inner(op, op);
    scale *= scale;
    double closed = lcf_closed_form(n, d.s, d.sigma_tilde2,
                                    (d.ric0 * d.ric0 * d.ric0).trace());
    std::lock_guard<std::mutex> lock(merge_mu);
    sign_worst = std::max(sign_worst, std::max(0.0, gap) / scale);
    match_worst = std::max(match_worst, rel(std::abs(gap - closed),
                                            std::max(std::abs(gap), std::abs(closed))));
    return 0.0;
  });
  c.add("lcf_gap_sign", "lcf_gap", sign_worst, trials);
  c.add("lcf_closed_form", "lcf_match", match_worst, trials);

  if (n == 3) {
    double r = max_over_trials(trials, [&](int t) {
      Eigen::MatrixXd ric =
          random_symmetric(3, derive_seed(c.seed_for("dim3"), t));
      double s = ric.trace();
      double scale = s * s * s * s;
      return rel(dim3_equivalence_residual(ric), scale);
    });
    c.add("dim3_equivalence", "dim3", r, trials);

    double pins = std::abs(hamilton_p(1.0, 1.0, 1.0));
    pins = std::max(pins, std::abs(hamilton_p(1.0, 1.0, 0.0)));
    pins = std::max(pins, std::abs(hamilton_p(1.0, 0.0, 0.0) - 1.0));
    c.add("hamilton_p_pins", "exact", pins, 3);

    double rt = max_over_trials(trials, [&](int t) {
      Eigen::MatrixXd ric =
          random_symmetric(3, derive_seed(c.seed_for("reconstruct"), t));
      RiemannTensor tens = reconstruct_3d(ric);
      double worst_local = rel(tens.bianchi_residual(), tens.max_abs());
      Eigen::MatrixXd back = ricci(op_from_tensor(tens));
      worst_local = std::max(
          worst_local, rel((back - ric).cwiseAbs().maxCoeff(),
                           ric.cwiseAbs().maxCoeff()));
      return worst_local;
    });
    c.add("reconstruct_roundtrip", "decomp", rt, trials);
  }
}

// ----------------------------------------------------------- extremal --

void run_extremal(Ctx& c) {
  int n = c.dim;
  int trials = c.cfg.trials;

  auto crit = enumerate_critical(n);
  double worst = 0.0;
  for (const auto& p : crit) worst = std::max(worst, p.stationarity_residual());
  c.add("critical_stationarity", "lagrange", worst, n - 1);

  double bound = sharp_bound(n);
  double gmin = crit.front().g;
  for (const auto& p : crit) gmin = std::min(gmin, p.g);
  c.add("critical_min_is_bound", "enum_exact", std::abs(gmin + bound), n - 1);

  worst = 0.0;
  for (int i = 1; i <= n - 1; ++i) {
    Eigen::VectorXd mirror = -crit[i - 1].lambda;
    Eigen::VectorXd other = crit[n - i - 1].lambda;
    std::sort(mirror.data(), mirror.data() + n);
    std::sort(other.data(), other.data() + n);
    worst = std::max(worst, (mirror - other).cwiseAbs().maxCoeff());
  }
  c.add("mirror_closure", "enum_exact", worst, n - 1);

  auto mins = optimize_g_multistart(n, c.seed_for("optimizer_min"),
                                    OptimizeDirection::minimize);
  auto maxs = optimize_g_multistart(n, c.seed_for("optimizer_max"),
                                    OptimizeDirection::maximize);
  double best_min = mins.front().g, best_max = maxs.front().g;
  for (const auto& p : mins) best_min = std::min(best_min, p.g);
  for (const auto& p : maxs) best_max = std::max(best_max, p.g);
  c.add("optimizer_min", "optimizer", std::abs(best_min + bound),
        static_cast<int>(mins.size()));
  c.add("optimizer_max", "optimizer", std::abs(best_max - bound),
        static_cast<int>(maxs.size()));

  worst = 0.0;
  int converged = 0;
  for (const auto& list : {mins, maxs})
    for (const auto& p : list) {
      if (!p.converged) continue;
      ++converged;
      double nearest = std::abs(p.g - crit.front().g);
      for (const auto& q : crit) nearest = std::min(nearest, std::abs(p.g - q.g));
      worst = std::max(worst, nearest);
    }
  c.add("optimizer_completeness", "optimizer", converged > 0 ? worst : 1.0,
        converged);

  double r = max_over_trials(trials, [&](int t) {
    std::uint64_t s = derive_seed(c.seed_for("f_nonneg"), t);
    double worst_local = 0.0;
    for (int k = 0; k < 200; ++k) {
      std::uint64_t sk = derive_seed(s, k);
      Eigen::VectorXd lam = random_gaussian(n, 1, derive_seed(sk, 0)).col(0);
      lam.array() -= lam.mean();
      lam *= random_uniform(0.1, 3.0, derive_seed(sk, 1));
      double sv = random_uniform(-10.0, 10.0, derive_seed(sk, 2));
      double f = f_quartic(sv, lam);
      worst_local =
          std::max(worst_local, std::max(0.0, -f) / f_quartic_scale(sv, lam));
    }
    return worst_local;
  });
  c.add("f_nonneg_samples", "f_nonneg", r, trials * 200);

  worst = 0.0;
  double classify_bad = 0.0;
  for (double a : {1e-3, 1.0, 1e3}) {
    auto [lam, s] = equality_case_ii(n, a);
    worst = std::max(worst,
                     std::abs(f_quartic(s, lam)) / f_quartic_scale(s, lam));
    if (classify_equality(lam, s) != EqualityCase::cylindrical) classify_bad += 1.0;
    // Permutation invariance of the detection.
    Eigen::VectorXd perm(n);
    perm[0] = lam[n - 1];
    for (int j = 1; j < n; ++j) perm[j] = lam[j - 1];
    if (classify_equality(perm, s) != EqualityCase::cylindrical) classify_bad += 1.0;
  }
  c.add("equality_f_zero", "equality_f", worst, 3);

  if (classify_equality(Eigen::VectorXd::Zero(n), 1.7) != EqualityCase::einstein)
    classify_bad += 1.0;
  {
    // Witness away from both families.
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    w[0] = 1.0 / std::sqrt(2.0);
    w[1] = -1.0 / std::sqrt(2.0);
    if (classify_equality(w, 1.0) != EqualityCase::none) classify_bad += 1.0;
  }
  c.add("classification_cases", "exact", classify_bad, 8);
}

// ------------------------------------------------------------- models --

void run_models(Ctx& c) {
  int n = c.dim;
  ModelSoliton flat = gaussian(n);
  ModelSoliton sphere = round_sphere(n);
  ModelSoliton cylinder = round_cylinder(n);

  double worst = 0.0;
  for (const auto* m : {&flat, &sphere, &cylinder})
    worst = std::max(worst, soliton_residual(*m));
  c.add("soliton_equation", "soliton", worst, 3);

  double bad = 0.0;
  if (classify_model(flat) != ModelClass::flat) bad += 1.0;
  if (classify_model(sphere) != ModelClass::einstein) bad += 1.0;
  if (classify_model(cylinder) != ModelClass::cylindrical) bad += 1.0;
  c.add("classification", "exact", bad, 3);

  Decomposition dcyl = decompose(cylinder.op);
  double a_rec = -dcyl.lambda.minCoeff() * std::sqrt(n / (n - 1.0));
  c.add("cylinder_scale_recovery", "model_zero",
        std::abs(dcyl.s - std::sqrt(n * (n - 1.0)) * a_rec), 1);
  c.add("cylinder_weyl_flat", "model_zero", op_norm(dcyl.r_weyl), 1);

  worst = 0.0;
  for (const auto* m : {&sphere, &cylinder}) {
    double scale = 1.0 + op_inner(m->op, m->op);
    scale *= scale;
    worst = std::max(worst, std::abs(lcf_gap(m->op)) / scale);
  }
  c.add("model_lcf_saturation", "model_zero", worst, 2);

  worst = 0.0;
  for (const auto* m : {&flat, &sphere, &cylinder}) {
    double scale = std::pow(1.0 + op_inner(m->op, m->op), 1.5);
    worst = std::max(worst, std::abs(tachibana_gap(m->op)) / scale);
  }
  c.add("model_tachibana_zero", "model_zero", worst, 3);

  worst = 0.0;
  for (const auto* m : {&sphere, &cylinder})
    for (double tau : {0.1, 2.0, 10.0}) {
      Eigen::MatrixXd ric = ricci(m->op);
      double ratio = ric.squaredNorm() / (ric.trace() * ric.trace());
      worst = std::max(worst, scaling_check(m->op, tau) / (1.0 + ratio));
    }
  int extra = std::min(c.cfg.trials, 25);
  double r = max_over_trials(extra, [&](int t) {
    std::uint64_t s = derive_seed(c.seed_for("scaling"), t);
    CurvOp op = random_curv(n, derive_seed(s, 0));
    for (int k = 1; std::abs(scalar(op)) < 0.5 && k < 64; ++k)
      op = random_curv(n, derive_seed(s, k));
    double tau = random_uniform(0.1, 10.0, derive_seed(s, 100));
    Eigen::MatrixXd ric = ricci(op);
    double ratio = ric.squaredNorm() / (ric.trace() * ric.trace());
    return scaling_check(op, tau) / (1.0 + ratio);
  });
  c.add("scaling_invariance", "scaling", std::max(worst, r), 6 + extra);

  bad = 0.0;
  for (const auto* m : {&flat, &sphere, &cylinder}) {
    Eigen::MatrixXd o = random_rotation(n, c.seed_for("conjugated"));
    ModelSoliton moved{m->name, conjugate(m->op, o), o * m->ric * o.transpose(),
                       o * m->hess * o.transpose(), m->scalar};
    if (classify_model(moved) != classify_model(*m)) bad += 1.0;
    if (soliton_residual(moved) > c.cfg.tol("soliton") * 10.0) bad += 1.0;
  }
  c.add("conjugated_classification", "exact", bad, 3);
}

}  // namespace

Report run_suites(const RunConfig& config) {
  config.validate();
  auto t0 = std::chrono::steady_clock::now();

  Report report;
  report.config = config;

  auto selected = [&](const char* name) {
    if (config.suites.empty()) return true;
    return std::find(config.suites.begin(), config.suites.end(), name) !=
           config.suites.end();
  };

  for (int dim : config.dims) {
    if (selected("lie")) {
      Ctx ctx{config, report.records, "lie", dim};
      run_lie(ctx);
    }
  }
  for (int dim : config.dims) {
    if (selected("curvature")) {
      Ctx ctx{config, report.records, "curvature", dim};
      run_curvature(ctx);
    }
  }
  for (int dim : config.dims) {
    if (selected("decomposition")) {
      Ctx ctx{config, report.records, "decomposition", dim};
      run_decomposition(ctx);
    }
  }
  for (int dim : config.dims) {
    if (selected("identities")) {
      Ctx ctx{config, report.records, "identities", dim};
      run_identities(ctx);
    }
  }
  for (int dim : config.dims) {
    if (selected("extremal")) {
      Ctx ctx{config, report.records, "extremal", dim};
      run_extremal(ctx);
    }
  }
  for (int dim : config.dims) {
    if (selected("models")) {
      Ctx ctx{config, report.records, "models", dim};
      run_models(ctx);
    }
  }

  auto t1 = std::chrono::steady_clock::now();
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
          .count();
  return report;
}

std::string extremal_table(int n, ReportFormat format) {
  if (n < 3 || n > 12)
    throw UsageError("dimension out of range [3, 12]: " + std::to_string(n));
  auto crit = enumerate_critical(n);
  double bound = sharp_bound(n);

  if (format == ReportFormat::json) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : crit) {
      std::vector<double> lam(p.lambda.data(), p.lambda.data() + p.lambda.size());
      points.push_back({{"negatives", p.negatives},
                        {"g", p.g},
                        {"mu", p.mu},
                        {"lambda", lam},
                        {"stationarity_residual", p.stationarity_residual()}});
    }
    nlohmann::json doc = {
        {"dim", n}, {"sharp_bound", bound}, {"critical_points", points}};
    return doc.dump(2) + "\n";
  }

  std::string out = "# extremal data, n = " + std::to_string(n) + "\n\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", bound);
  out += "- sharp bound (n-2)/sqrt(n(n-1)) = " + std::string(buf) + "\n\n";
  out += "| negatives | g | mu | stationarity residual |\n|---|---|---|---|\n";
  for (const auto& p : crit) {
    char row[128];
    std::snprintf(row, sizeof(row), "| %d | %+.12f | %+.12f | %.3e |\n", p.negatives,
                  p.g, p.mu, p.stationarity_residual());
    out += row;
  }
  return out;
}

std::string models_table(int n, ReportFormat format) {
  if (n < 3 || n > 12)
    throw UsageError("dimension out of range [3, 12]: " + std::to_string(n));
  std::vector<ModelSoliton> models = {gaussian(n), round_sphere(n),
                                      round_cylinder(n)};
  auto class_name = [](ModelClass c) {
    switch (c) {
      case ModelClass::flat:
        return "flat";
      case ModelClass::einstein:
        return "einstein";
      default:
        return "cylindrical";
    }
  };

  if (format == ReportFormat::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& m : models) {
      double s = scalar(m.op);
      nlohmann::json row = {{"name", m.name},
                            {"scalar", m.scalar},
                            {"soliton_residual", soliton_residual(m)},
                            {"class", class_name(classify_model(m))},
                            {"tachibana_gap", tachibana_gap(m.op)}};
      row["sigma_ratio"] =
          m.name == "gaussian"
              ? nlohmann::json(nullptr)
              : nlohmann::json(ricci(m.op).squaredNorm() / (s * s));
      rows.push_back(row);
    }
    nlohmann::json doc = {{"dim", n}, {"models", rows}};
    return doc.dump(2) + "\n";
  }

  std::string out = "# model solitons, n = " + std::to_string(n) + "\n\n";
  out += "| model | scalar | soliton residual | class | tachibana gap |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& m : models) {
    char row[160];
    std::snprintf(row, sizeof(row), "| %s | %.6f | %.3e | %s | %.3e |\n",
                  m.name.c_str(), m.scalar, soliton_residual(m),
                  class_name(classify_model(m)), tachibana_gap(m.op));
    out += row;
  }
  return out;
}

}  // namespace curvlab

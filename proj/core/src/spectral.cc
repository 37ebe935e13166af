// Copyright 2026 The privpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privpc/spectral.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "privpc/errors.h"
#include "privpc/noise.h"

namespace privpc {

namespace {

// Every this many power steps, try a Rayleigh-Ritz step on span{x, Ax}. It
// resolves the +rho/-rho oscillation of bipartite components, where plain
// power iteration never settles.
constexpr int kRitzPeriod = 16;

// Relative tolerance for treating two Ritz values as equal in magnitude.
constexpr double kMagnitudeTie = 1e-9;

bool MagnitudeBefore(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  if (std::abs(std::abs(a) - std::abs(b)) <= kMagnitudeTie * scale) {
    return a > b;  // prefer the positive (Perron) value on ties
  }
  return std::abs(a) > std::abs(b);
}

struct PowerResult {
  double lambda = 0.0;
  Eigen::VectorXd v;
  double residual = 0.0;
  std::int64_t matvecs = 0;
  bool converged = false;
};

PowerResult DominantPair(const Graph& g, const EigenSolverOptions& options) {
  const VertexId n = g.num_vertices();
  RngStream rng(options.seed, 0);
  Eigen::VectorXd x(n);
  for (VertexId i = 0; i < n; ++i) x[i] = 1.0 + rng.Uniform();
  x.normalize();

  PowerResult out;
  Eigen::VectorXd y(n);
  Eigen::VectorXd z(n);
  g.Multiply(x, y);
  out.matvecs = 1;
  double best_residual = std::numeric_limits<double>::infinity();

  for (;;) {
    const double theta = x.dot(y);
    const double rho = y.norm();
    if (rho == 0.0) {
      // Edgeless support: every vector is an eigenvector for 0.
      out.lambda = 0.0;
      out.v = x;
      out.residual = 0.0;
      out.converged = true;
      return out;
    }
    const double residual = (y - theta * x).norm();
    if (residual < best_residual) {
      best_residual = residual;
      out.lambda = theta;
      out.v = x;
      out.residual = residual;
    }
    if (residual <= options.tol * std::abs(theta)) {
      out.converged = true;
      return out;
    }
    if (out.matvecs >= options.max_iter) return out;

    if (out.matvecs % kRitzPeriod == 0) {
      Eigen::VectorXd q = (y - theta * x) / residual;
      g.Multiply(q, z);
      ++out.matvecs;
      Eigen::Matrix2d t;
      t << theta, residual, residual, q.dot(z);
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(t);
      const int pick = MagnitudeBefore(es.eigenvalues()[0],
                                       es.eigenvalues()[1])
                           ? 0
                           : 1;
      const double ritz = es.eigenvalues()[pick];
      const Eigen::Vector2d s = es.eigenvectors().col(pick);
      Eigen::VectorXd u = s[0] * x + s[1] * q;
      Eigen::VectorXd au = s[0] * y + s[1] * z;
      const double norm = u.norm();
      u /= norm;
      au /= norm;
      const double ritz_residual = (au - ritz * u).norm();
      if (ritz_residual < best_residual) {
        best_residual = ritz_residual;
        out.lambda = ritz;
        out.v = u;
        out.residual = ritz_residual;
      }
      if (ritz_residual <= options.tol * std::abs(ritz)) {
        out.converged = true;
        return out;
      }
      // Continue from the Ritz vector: it is never worse than x.
      x = u;
      y = au;
      continue;
    }

    x = y / rho;
    g.Multiply(x, y);
    ++out.matvecs;
  }
}

struct DeflatedResult {
  double lambda = 0.0;
  double residual = 0.0;
  std::int64_t matvecs = 0;
  bool converged = false;
};

// Thick-restart Lanczos with full reorthogonalisation for the
// magnitude-dominant eigenvalue of P (A - lambda1 v v^T) P, P = I - v v^T.
DeflatedResult DeflatedDominant(const Graph& g, double lambda1,
                                const Eigen::VectorXd& v,
                                const EigenSolverOptions& options) {
  const VertexId n = g.num_vertices();
  DeflatedResult out;
  const int dim = std::max(1, std::min<int>(options.krylov_dim, n - 1));
  const int keep = std::max(1, std::min(dim / 3, 8));
  const double scale = std::max(std::abs(lambda1), 1e-300);

  Eigen::MatrixXd basis(n, dim + 1);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd w(n);
  Eigen::VectorXd col(n);

  auto project_out_v = [&v](Eigen::VectorXd& x) { x -= v.dot(x) * v; };

  RngStream rng(options.seed, 1);
  Eigen::VectorXd start(n);
  for (VertexId i = 0; i < n; ++i) start[i] = rng.Uniform() - 0.5;
  project_out_v(start);
  start.normalize();
  basis.col(0) = start;

  int locked = 0;
  for (;;) {
    int filled = dim;
    double beta = 0.0;
    for (int j = locked; j < dim; ++j) {
      col = basis.col(j);
      g.Multiply(col, w);
      w -= lambda1 * v.dot(col) * v;
      ++out.matvecs;
      // Two passes of classical Gram-Schmidt against v and the basis.
      Eigen::VectorXd coeff = Eigen::VectorXd::Zero(j + 1);
      for (int pass = 0; pass < 2; ++pass) {
        project_out_v(w);
        const Eigen::VectorXd c = basis.leftCols(j + 1).transpose() * w;
        w.noalias() -= basis.leftCols(j + 1) * c;
        coeff += c;
      }
      for (int i = 0; i <= j; ++i) {
        h(i, j) = coeff[i];
        h(j, i) = coeff[i];
      }
      beta = w.norm();
      if (beta <= 1e-14 * scale) {
        // Invariant subspace: the Ritz values below are exact.
        filled = j + 1;
        beta = 0.0;
        break;
      }
      basis.col(j + 1) = w / beta;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        h.topLeftCorner(filled, filled));
    std::vector<int> order(filled);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&es](int a, int b) {
      return MagnitudeBefore(es.eigenvalues()[a], es.eigenvalues()[b]);
    });
    const int best = order[0];
    out.lambda = es.eigenvalues()[best];
    out.residual = std::abs(beta * es.eigenvectors()(filled - 1, best));
    if (out.residual <= options.tol * scale) {
      out.converged = true;
      return out;
    }
    if (out.matvecs >= options.max_iter || filled < dim) return out;

    // Restart from the leading Ritz vectors plus the residual direction.
    const int kept = std::min(keep, filled - 1);
    Eigen::MatrixXd s(filled, kept);
    for (int i = 0; i < kept; ++i) s.col(i) = es.eigenvectors().col(order[i]);
    Eigen::MatrixXd ritz = basis.leftCols(filled) * s;
    const Eigen::VectorXd residual_dir = basis.col(filled);
    basis.leftCols(kept) = ritz;
    basis.col(kept) = residual_dir;
    h.setZero();
    for (int i = 0; i < kept; ++i) h(i, i) = es.eigenvalues()[order[i]];
    locked = kept;
  }
}

}  // namespace

double TopTwoEnergy(const Eigen::VectorXd& v) {
  if (v.size() < 2) throw ConfigError("need at least two entries");
  double first = -std::numeric_limits<double>::infinity();
  double second = first;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double x = v[i];
    if (x > first) {
      second = first;
      first = x;
    } else if (x > second) {
      second = x;
    }
  }
  return std::hypot(first, second);
}

void FixSign(Eigen::VectorXd& v) {
  if (v.sum() < 0.0) v = -v;
}

SpectralSummary TopTwoEigenpairs(const Graph& g,
                                 const EigenSolverOptions& options) {
  if (g.num_vertices() < 2) throw ConfigError("spectrum needs n >= 2");
  if (!(options.tol > 0.0)) throw ConfigError("tolerance must be positive");
  if (options.max_iter < 1) throw ConfigError("max_iter must be positive");

  PowerResult first = DominantPair(g, options);
  SpectralSummary s;
  s.lambda1 = first.lambda;
  s.v = std::move(first.v);
  FixSign(s.v);
  s.residual = first.residual;
  s.iterations_used = first.matvecs;

  DeflatedResult second;
  if (s.lambda1 == 0.0) {
    second.converged = true;  // A = 0
  } else {
    second = DeflatedDominant(g, s.lambda1, s.v, options);
  }
  s.lambda2 = second.lambda;
  s.residual2 = second.residual;
  s.iterations_used += second.matvecs;
  s.converged = first.converged && second.converged;
  s.gap = std::max(0.0, std::abs(s.lambda1) - std::abs(s.lambda2));
  s.c_pi = TopTwoEnergy(s.v);
  return s;
}

std::optional<double> LocalSensitivityBound(const SpectralSummary& s) {
  if (!(s.gap > std::numbers::sqrt2 * (std::numbers::sqrt2 + 1.0))) {
    return std::nullopt;
  }
  return 2.0 * s.c_pi / s.gap;
}

std::optional<double> ThetaBound(const SpectralSummary& s, std::int64_t dist) {
  if (dist < 0) throw ConfigError("distance must be non-negative");
  const double d = static_cast<double>(dist);
  if (!(s.gap > kGapThreshold)) return std::nullopt;
  if (!(d < (1.0 - 1.0 / std::numbers::sqrt2) * s.gap)) return std::nullopt;
  return 2.0 / (s.gap - d) * (2.0 * d / s.gap + s.c_pi);
}

std::optional<double> SmoothSensitivityBound(const SpectralSummary& s,
                                             std::int64_t n, double eps,
                                             double delta) {
  if (!(eps > 0.0) || !(delta > 0.0 && delta < 1.0) || n < 1) {
    throw ConfigError("smooth bound needs eps > 0, delta in (0,1), n >= 1");
  }
  constexpr double kNu = std::numbers::sqrt2 / (std::numbers::sqrt2 - 1.0);
  if (!(s.gap > std::numbers::sqrt2 * kNu)) return std::nullopt;
  const double beta =
      eps / (4.0 * (static_cast<double>(n) + std::log(2.0 / delta)));
  const double near = 2.0 * std::numbers::sqrt2 / s.gap * (2.0 / kNu + s.c_pi);
  const double far = std::numbers::sqrt2 * std::exp(-beta * s.gap / kNu);
  return std::max(near, far);
}

}  // namespace privpc

// Copyright 2026 The conelab Authors
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

#include "oracles/oracles.h"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace conelab::oracles {
namespace {

Matrix Columns(const Matrix& m, unsigned mask) {
  std::vector<Index> idx;
  for (Index j = 0; j < m.cols(); ++j) {
    if (mask & (1u << j)) idx.push_back(j);
  }
  Matrix out(m.rows(), static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.col(static_cast<Index>(k)) = m.col(idx[k]);
  }
  return out;
}

}  // namespace

Vector EnumerateHalfspaceProjection(const Matrix& normals, const Vector& x) {
  const Index m = normals.cols();
  const double eps = 1e-9 * std::max(1.0, x.norm());
  Vector best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Vector z = x;
    if (mask != 0) {
      const Matrix a = Columns(normals, mask);
      // Orthogonal projector onto null(a') via the range of a.
      const Eigen::FullPivHouseholderQR<Matrix> qr(a);
      const Index r = qr.rank();
      const Matrix q = Matrix(qr.matrixQ()).leftCols(r);
      z = x - q * (q.transpose() * x);
    }
    if ((normals.transpose() * z).minCoeff() < -eps) continue;
    const double d = (x - z).norm();
    if (d < best_dist) {
      best_dist = d;
      best = z;
    }
  }
  return best;
}

Vector EnumerateGeneratedProjection(const Matrix& generators, const Vector& x) {
  const Index m = generators.cols();
  Vector best = Vector::Zero(x.size());
  double best_dist = x.norm();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    const Matrix g = Columns(generators, mask);
    const Eigen::FullPivHouseholderQR<Matrix> qr(g);
    if (qr.rank() < g.cols()) continue;
    const Vector lambda = qr.solve(x);
    if (lambda.minCoeff() < -1e-12) continue;
    const Vector z = g * lambda;
    const double d = (x - z).norm();
    if (d < best_dist) {
      best_dist = d;
      best = z;
    }
  }
  return best;
}

Vector LorentzLineSearch(const Vector& x) {
  const Index n = x.size();
  const Vector u = x.head(n - 1);
  const double t = x(n - 1);
  Vector best = Vector::Zero(n);
  double best_dist = x.norm();
  if (u.norm() <= t) return x;
  if (u.norm() == 0.0) return best;

  const Vector dir = u.normalized();
  auto point = [&](double s) {
    Vector p(n);
    p.head(n - 1) = s * dir;
    p(n - 1) = s;
    return p;
  };
  auto dist = [&](double s) { return (x - point(s)).norm(); };

  const double hi = 2.0 * x.norm() + 1.0;
  const int grid = 20000;
  double s_best = 0.0;
  for (int k = 0; k <= grid; ++k) {
    const double s = hi * k / grid;
    if (dist(s) < dist(s_best)) s_best = s;
  }
  double lo = std::max(0.0, s_best - hi / grid);
  double up = std::min(hi, s_best + hi / grid);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double a = up - phi * (up - lo);
    const double b = lo + phi * (up - lo);
    if (dist(a) < dist(b)) {
      up = b;
    } else {
      lo = a;
    }
  }
  const double s = 0.5 * (lo + up);
  if (dist(s) < best_dist) best = point(s);
  return best;
}

std::optional<Vector> EnumerateLcp(const Matrix& M, const Vector& q) {
  const Index n = q.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Index> basis, rest;
    for (Index i = 0; i < n; ++i) {
      ((mask & (1u << i)) ? basis : rest).push_back(i);
    }
    Vector x = Vector::Zero(n);
    if (!basis.empty()) {
      const auto b = static_cast<Index>(basis.size());
      Matrix mbb(b, b);
      Vector qb(b);
      for (Index r = 0; r < b; ++r) {
        qb(r) = q(basis[static_cast<std::size_t>(r)]);
        for (Index c = 0; c < b; ++c) {
          mbb(r, c) = M(basis[static_cast<std::size_t>(r)],
                        basis[static_cast<std::size_t>(c)]);
        }
      }
      const Eigen::FullPivLU<Matrix> lu(mbb);
      if (!lu.isInvertible()) continue;
      const Vector xb = lu.solve(-qb);
      if (xb.minCoeff() < -1e-12) continue;
      for (Index r = 0; r < b; ++r) x(basis[static_cast<std::size_t>(r)]) = xb(r);
    }
    const Vector w = M * x + q;
    bool ok = true;
    for (Index i : rest) ok = ok && w(i) >= -1e-12;
    if (ok) return x;
  }
  return std::nullopt;
}

Matrix RandomSpd(Index n, unsigned seed, double shift) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> normal;
  Matrix b(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) b(i, j) = normal(gen);
  }
  return b * b.transpose() + shift * Matrix::Identity(n, n);
}

}  // namespace conelab::oracles

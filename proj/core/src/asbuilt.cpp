#include "pipefit/asbuilt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

#include "pipefit/angles.hpp"
#include "pipefit/joint.hpp"

namespace pipefit {

namespace {

Eigen::Isometry2d corner_step(double edge_length, double interior_angle) {
  Eigen::Isometry2d step = Eigen::Isometry2d::Identity();
  step.translate(Eigen::Vector2d(edge_length, 0.0));
  step.rotate(Eigen::Rotation2Dd(kPi - interior_angle));
  return step;
}

Eigen::Isometry2d walk_pose(double edge_length, std::span<const double> angles) {
  Eigen::Isometry2d pose = Eigen::Isometry2d::Identity();
  for (double a : angles) pose = pose * corner_step(edge_length, a);
  return pose;
}

double rotation_angle(const Eigen::Isometry2d& pose) {
  return std::atan2(pose.linear()(1, 0), pose.linear()(0, 0));
}

// Closure error of the loop walked from every starting corner, on a unit
// edge. Position closure alone depends on where the walk starts, so all
// starts are stacked; this keeps the cost invariant under relabeling.
Eigen::VectorXd closure_residual(std::span<const double> angles) {
  const auto n = static_cast<Eigen::Index>(angles.size());
  std::vector<double> rotated(angles.begin(), angles.end());
  Eigen::VectorXd r(3 * n);
  const double w = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto pose = walk_pose(1.0, rotated);
    r.segment<2>(3 * k) = w * pose.translation();
    r(3 * k + 2) = w * rotation_angle(pose);
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  }
  return r;
}

}  // namespace

ClosureResult face_loop_walk(double edge_length, std::span<const double> interior_angles) {
  const auto pose = walk_pose(edge_length, interior_angles);
  ClosureResult r;
  r.position_gap = pose.translation().norm();
  r.orientation_gap = std::abs(rotation_angle(pose));
  r.per_corner_angle = interior_angles.empty()
                           ? 0.0
                           : std::accumulate(interior_angles.begin(), interior_angles.end(), 0.0) /
                                 static_cast<double>(interior_angles.size());
  return r;
}

ClosureResult face_loop_walk(int n, double edge_length, double interior_angle) {
  const std::vector<double> angles(static_cast<std::size_t>(n), interior_angle);
  return face_loop_walk(edge_length, angles);
}

std::vector<Vec3> face_loop_points(int n, double edge_length, double interior_angle) {
  std::vector<Vec3> pts;
  Eigen::Isometry2d pose = Eigen::Isometry2d::Identity();
  pts.emplace_back(0.0, 0.0, 0.0);
  const auto step = corner_step(edge_length, interior_angle);
  for (int i = 0; i < n; ++i) {
    pose = pose * step;
    pts.emplace_back(pose.translation().x(), pose.translation().y(), 0.0);
  }
  return pts;
}

AsBuiltSummary assemble_asbuilt(SolidKind kind, const HubFitting& hub, double bend, double edge_length) {
  const auto& solid = platonic_solid(kind);
  const auto vf = ideal_vertex_figure(kind);
  solve_joint(vf, hub);  // arity check

  AsBuiltSummary s;
  s.bend = bend;
  s.realized_face_angle = realized_vertex(vf, hub, bend);
  for (const auto& face : solid.faces) {
    auto r = face_loop_walk(static_cast<int>(face.size()), edge_length, s.realized_face_angle);
    s.max_position_gap = std::max(s.max_position_gap, r.position_gap / edge_length);
    s.mean_position_gap += r.position_gap / edge_length;
    s.max_orientation_gap = std::max(s.max_orientation_gap, r.orientation_gap);
    s.mean_orientation_gap += r.orientation_gap;
    s.faces.push_back(r);
  }
  s.mean_position_gap /= static_cast<double>(s.faces.size());
  s.mean_orientation_gap /= static_cast<double>(s.faces.size());
  return s;
}

FlexSolution compensate(double edge_length, std::span<const double> interior_angles, double lambda) {
  if (interior_angles.size() < 3) throw std::invalid_argument("compensate needs at least 3 corners");
  if (!(edge_length > 0.0)) throw std::invalid_argument("edge length must be positive");
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be non-negative");

  constexpr int kMaxIterations = 200;
  constexpr double kStepTol = 1e-10;
  constexpr double kFdStep = 1e-7;

  const auto n = static_cast<Eigen::Index>(interior_angles.size());
  const std::vector<double> base(interior_angles.begin(), interior_angles.end());
  std::vector<double> work(base.size());

  auto residual_at = [&](const Eigen::VectorXd& flex) {
    for (Eigen::Index i = 0; i < n; ++i) work[i] = base[i] + flex(i);
    return closure_residual(work);
  };

  Eigen::VectorXd flex = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd r = residual_at(flex);
  double cost = r.squaredNorm();
  double damping = lambda;

  FlexSolution out;
  out.lambda = lambda;
  for (int it = 0; it < kMaxIterations && cost > 0.0; ++it) {
    out.iterations = it + 1;
    Eigen::MatrixXd jac(r.size(), n);
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::VectorXd fp = flex, fm = flex;
      fp(j) += kFdStep;
      fm(j) -= kFdStep;
      jac.col(j) = (residual_at(fp) - residual_at(fm)) / (2.0 * kFdStep);
    }

    // Levenberg-Marquardt: lambda is the floor of the step damping, so any
    // lambda still drives the loop closed. With zero damping the step is the
    // minimum-norm Gauss-Newton step (the closure manifold is not a point).
    bool accepted = false;
    for (int tries = 0; tries < 30 && !accepted; ++tries) {
      Eigen::VectorXd step;
      if (damping == 0.0) {
        step = -jac.completeOrthogonalDecomposition().solve(r);
      } else {
        Eigen::MatrixXd normal = jac.transpose() * jac;
        normal.diagonal().array() += damping;
        step = -normal.ldlt().solve(jac.transpose() * r);
      }
      const Eigen::VectorXd trial = flex + step;
      const Eigen::VectorXd r_trial = residual_at(trial);
      const double trial_cost = r_trial.squaredNorm();
      if (trial_cost < cost) {
        flex = trial;
        r = r_trial;
        cost = trial_cost;
        damping = std::max(lambda, damping * 0.1);
        accepted = true;
        if (step.norm() < kStepTol) out.converged = true;
      } else {
        damping = damping == 0.0 ? 1e-9 : damping * 10.0;
        if (step.norm() < kStepTol) {
          // No decrease possible from here at this resolution.
          out.converged = true;
          break;
        }
      }
    }
    if (out.converged || !accepted) break;
  }
  if (cost == 0.0) out.converged = true;

  out.per_joint_flex.assign(flex.data(), flex.data() + n);
  for (Eigen::Index i = 0; i < n; ++i) work[i] = base[i] + flex(i);
  out.residual = face_loop_walk(edge_length, work).position_gap;
  out.objective = cost + lambda * flex.squaredNorm();
  return out;
}

FlexSolution compensate(int n, double edge_length, double interior_angle, double lambda) {
  const std::vector<double> angles(static_cast<std::size_t>(std::max(n, 0)), interior_angle);
  return compensate(edge_length, angles, lambda);
}

}  // namespace pipefit

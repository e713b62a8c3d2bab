#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace attsteer {

/// Attitude quaternion stored scalar-last: (q1, q2, q3, q4) with q4 the
/// scalar. Products follow the Hamilton convention, so for body-to-inertial
/// quaternions `rotation_matrix(p * q) == rotation_matrix(p) * rotation_matrix(q)`.
struct Quaternion {
  Eigen::Vector3d vec = Eigen::Vector3d::Zero();
  double scalar = 1.0;

  Quaternion() = default;
  Quaternion(const Eigen::Vector3d& v, double s) : vec(v), scalar(s) {}
  Quaternion(double q1, double q2, double q3, double q4) : vec(q1, q2, q3), scalar(q4) {}

  static Quaternion identity() { return {}; }
  static Quaternion from_axis_angle(const Eigen::Vector3d& axis, double angle_rad);
  static Quaternion from_vector4(const Eigen::Vector4d& v) { return {v(0), v(1), v(2), v(3)}; }

  Eigen::Vector4d as_vector4() const { return {vec.x(), vec.y(), vec.z(), scalar}; }
  double norm() const;
  Quaternion conjugate() const { return {-vec, scalar}; }
  Quaternion inverse() const;

  /// Rotation angle in [0, pi] of the represented rotation.
  double angle() const;
  bool is_unit(double tol = 1e-9) const;
  bool is_finite() const;
};

/// Hamilton product, not renormalized.
Quaternion quat_multiply(const Quaternion& p, const Quaternion& q);
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_multiply(p, q); }

/// Error quaternion q^-1 * q_tgt, flipped so the scalar part is >= 0.
/// Throws std::invalid_argument unless both inputs are unit norm (1e-6).
Quaternion quat_error(const Quaternion& q, const Quaternion& q_tgt);

/// Throws std::invalid_argument when the norm is <= 1e-12.
Quaternion normalize(const Quaternion& q);

/// Same rotation with non-negative scalar part.
Quaternion canonicalize(const Quaternion& q);

/// Body-to-inertial direction cosine matrix.
Eigen::Matrix3d rotation_matrix(const Quaternion& q);

/// 4x4 skew-symmetric kinematics matrix acting on (q1, q2, q3, q4), so that
/// q_dot = kinematics_matrix(w) * q for body rates w.
Eigen::Matrix4d kinematics_matrix(const Eigen::Vector3d& omega);

/// Angle in [0, pi] between the rotations represented by p and q.
double rotation_distance(const Quaternion& p, const Quaternion& q);

}  // namespace attsteer

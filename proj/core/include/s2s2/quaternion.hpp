#pragma once

#include <cmath>
#include <string>

namespace s2s2::geom {

struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  Quaternion inverse() const;
  Quaternion normalized() const;

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend constexpr Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  std::string to_string() const;
};

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }
/// Re(a conj(b)), the Euclidean inner product on R^4.
inline double dot(const Quaternion& a, const Quaternion& b) { return (a * b.conj()).w; }

/// Unit purely imaginary quaternion.
class S2Point {
 public:
  S2Point() : q_{0, 0, 0, 1} {}
  /// Projects onto the sphere (w dropped, vector part renormalized).
  explicit S2Point(const Quaternion& q);
  S2Point(double x, double y, double z) : S2Point(Quaternion{0, x, y, z}) {}

  const Quaternion& q() const noexcept { return q_; }
  double x() const noexcept { return q_.x; }
  double y() const noexcept { return q_.y; }
  double z() const noexcept { return q_.z; }
  S2Point operator-() const {
    S2Point r;
    r.q_ = -q_;
    return r;
  }

  std::string to_string() const;

 private:
  Quaternion q_;
};

inline double distance(const S2Point& a, const S2Point& b) { return distance(a.q(), b.q()); }

struct ProductPoint {
  S2Point first;
  S2Point second;

  std::string to_string() const;
};

/// Euclidean distance in R^3 x R^3.
inline double distance(const ProductPoint& a, const ProductPoint& b) {
  const double d1 = distance(a.first, b.first);
  const double d2 = distance(a.second, b.second);
  return std::sqrt(d1 * d1 + d2 * d2);
}

}  // namespace s2s2::geom

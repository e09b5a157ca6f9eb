#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace parasense {

using Real = double;

// Four partial sums so the compiler can keep independent FMA chains in flight
// without -ffast-math.
inline Real dot(std::span<const Real> a, std::span<const Real> b) {
  const std::size_t n = a.size();
  Real s0 = 0, s1 = 0, s2 = 0, s3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  for (; i < n; ++i) s0 += a[i] * b[i];
  return (s0 + s1) + (s2 + s3);
}

// y += alpha * x
inline void axpy(Real alpha, std::span<const Real> x, std::span<Real> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline Real norm(std::span<const Real> a) { return std::sqrt(dot(a, a)); }

// Zero-length vectors have cosine 0 against everything.
inline Real cosine(std::span<const Real> a, std::span<const Real> b) {
  const Real na = norm(a);
  const Real nb = norm(b);
  if (na == 0 || nb == 0) return 0;
  Real c = dot(a, b) / (na * nb);
  if (c > 1) c = 1;
  if (c < -1) c = -1;
  return c;
}

}  // namespace parasense

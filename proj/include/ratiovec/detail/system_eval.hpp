#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Scalar-generic evaluation of the root/ratio equation system in the r2 = 0
// normalization. Instantiated with double for the public API and with
// std::complex<double> inside the general-N solver.

namespace ratiovec::detail {

// e_0..e_len(values) via the one-pass product recurrence (Horner over factors).
template <typename T>
std::vector<T> elem_sym_all(std::span<const T> values) {
  std::vector<T> e(values.size() + 1, T(0));
  e[0] = T(1);
  std::size_t used = 0;
  for (const T& v : values) {
    ++used;
    for (std::size_t j = used; j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e;
}

template <typename T>
T elem_sym_of(std::span<const T> values, std::size_t k) {
  if (k == 0) return T(1);
  std::vector<T> e(k + 1, T(0));
  e[0] = T(1);
  std::size_t used = 0;
  for (const T& v : values) {
    ++used;
    std::size_t top = used < k ? used : k;
    for (std::size_t j = top; j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e[k];
}

// e_k of `values` with one position removed.
template <typename T>
T elem_sym_drop1(std::span<const T> values, std::size_t k, std::size_t drop) {
  std::vector<T> sub;
  sub.reserve(values.size() - 1);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i != drop) sub.push_back(values[i]);
  return elem_sym_of<T>(sub, k);
}

// e_k of `values` with two positions removed.
template <typename T>
T elem_sym_drop2(std::span<const T> values, std::size_t k, std::size_t d0, std::size_t d1) {
  std::vector<T> sub;
  sub.reserve(values.size() - 2);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i != d0 && i != d1) sub.push_back(values[i]);
  return elem_sym_of<T>(sub, k);
}

// Critical points implied by the dropped-root list r = (r1, r3, ..., rN) and
// the ratios: x1 = (1-s1) r1, x2 = s2 r3, and for the later intervals
// x = s r_right + (1-s) r_left. All lists are 0-based with length N-1.
template <typename T>
std::vector<T> transformed_points(std::span<const T> r, std::span<const double> sig) {
  const std::size_t len = r.size();
  std::vector<T> x(len);
  x[0] = (1.0 - sig[0]) * r[0];
  if (len >= 2) x[1] = sig[1] * r[1];
  for (std::size_t i = 2; i < len; ++i) x[i] = sig[i] * r[i] + (1.0 - sig[i]) * r[i - 1];
  return x;
}

// Multiplicity attached to position p of the dropped-root list: position 0
// holds r1 (mult m1); position p >= 1 holds r_{p+2} (mult m_{p+2}).
inline double mult_at_position(std::span<const double> mults, std::size_t p) {
  return p == 0 ? mults[0] : mults[p + 1];
}

// The N-1 residuals: for k = 1..N-2 the symmetric-function equations
//   f_k = m2 e_k(r) + sum_j m_j e_{k,j}(r) - n e_k(x),
// and the product equation
//   f_{N-1} = m2 prod(r) - n prod(x).
template <typename T>
std::vector<T> system_residual_t(std::span<const double> mults, std::span<const T> r,
                                 std::span<const double> sig) {
  const std::size_t n_roots = mults.size();  // N
  const std::size_t len = n_roots - 1;       // entries of r, x, sig, f
  double n = 0.0;
  for (double m : mults) n += m;

  std::vector<T> x = transformed_points(r, sig);
  std::vector<T> e_r = elem_sym_all(r);
  std::vector<T> e_x = elem_sym_all<T>(x);

  std::vector<T> f(len);
  for (std::size_t k = 1; k + 1 <= len; ++k) {
    T rhs = mults[1] * e_r[k];
    for (std::size_t p = 0; p < len; ++p)
      rhs += mult_at_position(mults, p) * elem_sym_drop1<T>(r, k, p);
    f[k - 1] = rhs - n * e_x[k];
  }
  f[len - 1] = mults[1] * e_r[len] - n * e_x[len];
  return f;
}

// Jacobian of the residuals w.r.t. every position of r (including position 0,
// which callers holding r1 fixed simply ignore). Row-major, (N-1) x (N-1).
// Uses d e_k / d v_p = e_{k-1} with position p removed.
template <typename T>
std::vector<T> system_jacobian_t(std::span<const double> mults, std::span<const T> r,
                                 std::span<const double> sig) {
  const std::size_t len = mults.size() - 1;
  double n = 0.0;
  for (double m : mults) n += m;

  std::vector<T> x = transformed_points(r, sig);

  // dx[i][t]: sparse, at most two nonzero t per i.
  auto dx = [&](std::size_t i, std::size_t t) -> double {
    if (i == 0) return t == 0 ? 1.0 - sig[0] : 0.0;
    if (i == 1) return t == 1 ? sig[1] : 0.0;
    if (t == i) return sig[i];
    if (t == i - 1) return 1.0 - sig[i];
    return 0.0;
  };

  // Prefix/suffix products of x for the product-equation row.
  std::vector<T> pre(len + 1, T(1)), suf(len + 1, T(1));
  for (std::size_t i = 0; i < len; ++i) pre[i + 1] = pre[i] * x[i];
  for (std::size_t i = len; i-- > 0;) suf[i] = suf[i + 1] * x[i];

  std::vector<T> jac(len * len, T(0));
  for (std::size_t t = 0; t < len; ++t) {
    for (std::size_t k = 1; k <= len - 1; ++k) {
      T d = mults[1] * elem_sym_drop1<T>(r, k - 1, t);
      for (std::size_t p = 0; p < len; ++p) {
        if (p == t) continue;
        d += mult_at_position(mults, p) * elem_sym_drop2<T>(r, k - 1, p, t);
      }
      // chain rule through x: only intervals t and t+1 touch r[t]
      for (std::size_t i = (t >= 1 ? t : 0); i < len && i <= t + 1; ++i) {
        double w = dx(i, t);
        if (w != 0.0) d -= n * w * elem_sym_drop1<T>(std::span<const T>(x), k - 1, i);
      }
      jac[(k - 1) * len + t] = d;
    }
    // product equation row
    T d = mults[1] * elem_sym_drop1<T>(r, len - 1, t);
    for (std::size_t i = (t >= 1 ? t : 0); i < len && i <= t + 1; ++i) {
      double w = dx(i, t);
      if (w != 0.0) d -= n * w * (pre[i] * suf[i + 1]);
    }
    jac[(len - 1) * len + t] = d;
  }
  return jac;
}

}  // namespace ratiovec::detail

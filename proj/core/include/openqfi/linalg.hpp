// Copyright 2026 The openqfi Authors
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

// Dense Hermitian linear algebra for the tiny fixed sizes used here (3x3 and
// 4x4): eigendecomposition by cyclic complex Jacobi rotations, and the PSD
// matrix square root built on it.
//
// Jacobi is used deliberately instead of a Householder+QR library routine:
// the density matrices of this state family carry exact zero blocks and
// eigenvalues spanning ~1 down to ~1e-12, and a rotation is applied only when
// the off-diagonal entry is nonzero, so exact sparsity is never polluted and
// small eigenvalues keep high *relative* accuracy.

#ifndef OPENQFI_LINALG_HPP
#define OPENQFI_LINALG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace openqfi {

using cplx = std::complex<double>;

template <int N>
struct CMat {
  static_assert(N == 3 || N == 4, "only the 3x3 and 4x4 cases are supported");

  std::array<cplx, static_cast<std::size_t>(N) * N> e{};

  cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(r) * N + c]; }
  const cplx& operator()(int r, int c) const {
    return e[static_cast<std::size_t>(r) * N + c];
  }

  static CMat identity() {
    CMat m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }
};

using CMat3 = CMat<3>;
using CMat4 = CMat<4>;

template <int N>
CMat<N> operator*(const CMat<N>& a, const CMat<N>& b) {
  CMat<N> r;
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <int N>
CMat<N> operator+(const CMat<N>& a, const CMat<N>& b) {
  CMat<N> r;
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

template <int N>
CMat<N> operator-(const CMat<N>& a, const CMat<N>& b) {
  CMat<N> r;
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

template <int N>
CMat<N> operator*(cplx s, const CMat<N>& a) {
  CMat<N> r;
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = s * a.e[i];
  return r;
}

template <int N>
CMat<N> adjoint(const CMat<N>& a) {
  CMat<N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

template <int N>
cplx trace(const CMat<N>& a) {
  cplx t{};
  for (int i = 0; i < N; ++i) t += a(i, i);
  return t;
}

template <int N>
double frobenius_norm(const CMat<N>& a) {
  double s = 0.0;
  for (const cplx& v : a.e) s += std::norm(v);
  return std::sqrt(s);
}

// Largest entry of |M - M^dagger|.
template <int N>
double hermiticity_defect(const CMat<N>& a) {
  double d = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j)
      d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
  return d;
}

template <int N>
struct EigenDecomposition {
  std::array<double, N> eigenvalues;  // ascending
  CMat<N> eigenvectors;               // orthonormal columns, column i <-> eigenvalue i
};

namespace detail {

// One Jacobi rotation zeroing A(p,q). Columns (p,q) of V are mixed by the
// same unitary. Diagonal updates use the cancellation-free t*|apq| form.
template <int N>
inline void jacobi_rotate(CMat<N>& a, CMat<N>& v, int p, int q) {
  const cplx apq = a(p, q);
  const double absg = std::abs(apq);
  const cplx phase = apq / absg;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double tau = (app - aqq) / (2.0 * absg);
  const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  a(p, p) = app - t * absg;
  a(q, q) = aqq + t * absg;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (int k = 0; k < N; ++k) {
    if (k == p || k == q) continue;
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp - s * std::conj(phase) * akq;
    a(k, q) = s * phase * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  for (int k = 0; k < N; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
    v(k, q) = s * phase * vkp + c * vkq;
  }
}

}  // namespace detail

// Eigendecomposition of a Hermitian matrix. Rejects inputs whose hermiticity
// defect exceeds 1e-8; iterates on the hermitized average. Ordering is
// deterministic: ascending eigenvalues (stable on ties), and each eigenvector
// is phased so its first component of magnitude > 1e-12 is real positive.
template <int N>
EigenDecomposition<N> eigh(const CMat<N>& m) {
  if (hermiticity_defect(m) > 1e-8)
    throw std::invalid_argument("eigh: input is not Hermitian");

  CMat<N> a;
  for (int i = 0; i < N; ++i) {
    a(i, i) = 0.5 * (m(i, i) + std::conj(m(i, i)));
    for (int j = i + 1; j < N; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  CMat<N> v = CMat<N>::identity();

  // Rotate while any off-diagonal entry is significant relative to its own
  // diagonal pair; entries that are exactly zero are never touched.
  constexpr double kRelTol = 1e-15;
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    int rotations = 0;
    for (int p = 0; p < N - 1; ++p)
      for (int q = p + 1; q < N; ++q) {
        const double off = std::abs(a(p, q));
        if (off == 0.0) continue;
        const double scale =
            kRelTol * std::sqrt(std::abs(a(p, p).real() * a(q, q).real()));
        if (off <= scale) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        detail::jacobi_rotate(a, v, p, q);
        ++rotations;
      }
    if (rotations == 0) break;
    if (sweep == kMaxSweeps - 1)
      throw std::runtime_error("eigh: Jacobi sweep limit reached");
  }

  std::array<int, N> order{};
  std::iota(order.begin(), order.end(), 0);
  std::array<double, N> diag{};
  for (int i = 0; i < N; ++i) diag[static_cast<std::size_t>(i)] = a(i, i).real();
  for (int i = 1; i < N; ++i) {  // insertion sort, stable
    const int oi = order[static_cast<std::size_t>(i)];
    int j = i - 1;
    while (j >= 0 && diag[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] >
                         diag[static_cast<std::size_t>(oi)]) {
      order[static_cast<std::size_t>(j + 1)] = order[static_cast<std::size_t>(j)];
      --j;
    }
    order[static_cast<std::size_t>(j + 1)] = oi;
  }

  EigenDecomposition<N> out;
  for (int i = 0; i < N; ++i) {
    const int src = order[static_cast<std::size_t>(i)];
    out.eigenvalues[static_cast<std::size_t>(i)] = diag[static_cast<std::size_t>(src)];
    cplx fix = 1.0;
    for (int k = 0; k < N; ++k) {
      const cplx vk = v(k, src);
      if (std::abs(vk) > 1e-12) {
        fix = std::conj(vk) / std::abs(vk);
        break;
      }
    }
    for (int k = 0; k < N; ++k) out.eigenvectors(k, i) = fix * v(k, src);
  }
  return out;
}

// Hermitian PSD square root: V sqrt(Lambda) V^dagger. Eigenvalues below
// -1e-8 signal a corrupted density matrix; small negatives are round-off and
// are clamped to zero before the square root.
template <int N>
CMat<N> psd_sqrt(const CMat<N>& m) {
  const EigenDecomposition<N> ed = eigh(m);
  for (double lam : ed.eigenvalues)
    if (lam < -1e-8)
      throw std::domain_error("psd_sqrt: eigenvalue below -1e-8, matrix is not PSD");

  // Numerical-rank cut: an exact-zero eigenvalue emerges from the
  // decomposition as O(eps * lam_max) noise, and sqrt would amplify it to
  // O(1e-8) in S. Anything below the cut is treated as rank-null.
  const double cut =
      1e-14 * std::max(0.0, ed.eigenvalues[static_cast<std::size_t>(N) - 1]);

  CMat<N> s;
  for (int i = 0; i < N; ++i) {
    const double lam = ed.eigenvalues[static_cast<std::size_t>(i)];
    if (lam <= cut) continue;
    const double r = std::sqrt(lam);
    for (int a = 0; a < N; ++a) {
      const cplx va = ed.eigenvectors(a, i);
      if (va == cplx{}) continue;
      for (int b = 0; b < N; ++b)
        s(a, b) += r * va * std::conj(ed.eigenvectors(b, i));
    }
  }
  for (int i = 0; i < N; ++i) {
    s(i, i) = s(i, i).real();
    for (int j = i + 1; j < N; ++j) {
      const cplx avg = 0.5 * (s(i, j) + std::conj(s(j, i)));
      s(i, j) = avg;
      s(j, i) = std::conj(avg);
    }
  }
  return s;
}

}  // namespace openqfi

#endif  // OPENQFI_LINALG_HPP

// Copyright 2026 The pfkit Authors
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

#include "pfkit/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "pfkit/error.hpp"

namespace pfkit {
namespace {

// Balanced eigenvector (v0, 1) / sqrt|v0|.
Vec2 balanced(Complex v0) {
  const double s = std::sqrt(std::abs(v0));
  return {v0 / s, 1.0 / s};
}

// PT v = P conj(v) with P = [[0, x], [1/x, 0]].
Vec2 pt_apply(const Vec2& v, double x) {
  return {x * std::conj(v.c1()), std::conj(v.c0()) / x};
}

// Least-squares factor lambda in PT src = lambda dst.
Complex pt_factor(const Vec2& src, const Vec2& dst, double x) {
  return inner(dst, pt_apply(src, x)) / inner(dst, dst);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::kUnbroken:
      return "unbroken";
    case Phase::kBroken:
      return "broken";
    case Phase::kExceptionalPoint:
      return "ep";
    case Phase::kUnclassifiable:
      return "unclassifiable";
  }
  return "unclassifiable";
}

CommutantFamily commutant_family(const Decomposition& dec) {
  if (dec.omega == Complex(0.0) || dec.gamma == Complex(0.0)) {
    throw Error(ErrorCode::kTrivialCommutant, "H is scalar, every matrix commutes with it");
  }
  return {dec.alpha, dec.beta};
}

Mat2 commutant(const Decomposition& dec, Complex x11, Complex x12) {
  return commutant_family(dec)(x11, x12);
}

Involution involutive_symmetry(const Decomposition& dec) {
  if (dec.alpha == dec.beta) {
    throw Error(ErrorCode::kDegenerateParameters, "alpha == beta");
  }
  const Complex diff = dec.alpha - dec.beta;
  const Complex x11 = (dec.alpha + dec.beta) / diff;
  const Mat2 x{x11, 2.0 / diff, -2.0 * dec.alpha * dec.beta / diff, -x11};
  return {x, -x};
}

PTFormResiduals pt_form_residuals(const Mat2& h, double x) {
  return {std::abs(h.m00() - std::conj(h.m11())),
          std::abs(h.m10() - std::conj(h.m01()) / (x * x))};
}

PTReport check_pt(const Mat2& h, double x, double tol) {
  if (!std::isfinite(x) || x == 0.0) {
    throw Error(ErrorCode::kInvalidSpec, "PT scale x must be finite and non-zero");
  }
  const PTFormResiduals r = pt_form_residuals(h, x);
  const double bound = tol * std::max(1.0, max_abs(h));
  if (r.diagonal > bound || r.off_diagonal > bound) {
    std::string what;
    if (r.diagonal > bound) what += "H00 != conj(H11) by " + fmt(r.diagonal);
    if (r.off_diagonal > bound) {
      if (!what.empty()) what += "; ";
      what += "H10 != conj(H01)/x^2 by " + fmt(r.off_diagonal);
    }
    throw Error(ErrorCode::kNotInPTForm, what);
  }

  PTReport rep;
  rep.pt_symmetric = true;
  rep.x = x;
  const double x2 = x * x;
  const Complex b = h.m01();
  const double re = h.m00().real();
  const double im = h.m00().imag();
  rep.q = x2 * std::norm(b) - x2 * x2 * im * im;
  const double root = std::sqrt(std::abs(rep.q));
  rep.gap = 2.0 * root / x2;
  rep.threshold = degeneracy_threshold(h, tol);

  if (rep.gap < rep.threshold) {
    rep.phase = Phase::kExceptionalPoint;
    rep.eps_plus = rep.eps_minus = re;
    const Complex v0 = b == Complex(0.0) ? Complex(0.0) : kI * x2 * im / std::conj(b);
    // Scalar H: any vector is an eigenvector, pick a PT-invariant one.
    rep.v_plus = rep.v_minus = v0 == Complex(0.0)
                                   ? Vec2(std::sqrt(std::abs(x)),
                                          std::copysign(1.0, x) / std::sqrt(std::abs(x)))
                                   : balanced(v0);
    rep.lambda_plus = rep.lambda_minus = pt_factor(rep.v_plus, rep.v_plus, x);
    return rep;
  }

  if (rep.q > 0.0) {
    rep.phase = Phase::kUnbroken;
    rep.eps_plus = re + root / x2;
    rep.eps_minus = re - root / x2;
    rep.v_plus = balanced((kI * x2 * im + root) / std::conj(b));
    rep.v_minus = balanced((kI * x2 * im - root) / std::conj(b));
    rep.lambda_plus = pt_factor(rep.v_plus, rep.v_plus, x);
    rep.lambda_minus = pt_factor(rep.v_minus, rep.v_minus, x);
    return rep;
  }

  rep.phase = Phase::kBroken;
  rep.eps_plus = Complex(re, root / x2);
  rep.eps_minus = Complex(re, -root / x2);
  if (b == Complex(0.0)) {
    // Diagonal H: eps_plus sits on whichever diagonal entry has Im > 0.
    const double s = std::sqrt(std::abs(x));
    const Vec2 up(s, 0.0);
    const Vec2 down(0.0, 1.0 / s);
    rep.v_plus = im > 0.0 ? up : down;
    rep.v_minus = im > 0.0 ? down : up;
  } else {
    rep.v_plus = balanced(kI * (x2 * im + root) / std::conj(b));
    rep.v_minus = balanced(kI * (x2 * im - root) / std::conj(b));
  }
  rep.lambda_plus = pt_factor(rep.v_plus, rep.v_minus, x);
  rep.lambda_minus = pt_factor(rep.v_minus, rep.v_plus, x);
  return rep;
}

std::optional<double> detect_pt_scale(const Mat2& h, double tol) {
  const double bound = tol * std::max(1.0, max_abs(h));
  if (std::abs(h.m00() - std::conj(h.m11())) > bound) return std::nullopt;
  const bool upper_zero = std::abs(h.m01()) <= bound;
  const bool lower_zero = std::abs(h.m10()) <= bound;
  if (upper_zero && lower_zero) return 1.0;
  if (upper_zero || lower_zero) return std::nullopt;
  const Complex x2 = std::conj(h.m01()) / h.m10();
  if (!(x2.real() > 0.0) || std::abs(x2.imag()) > tol * std::abs(x2)) return std::nullopt;
  const double x = std::sqrt(x2.real());
  if (pt_form_residuals(h, x).off_diagonal > bound) return std::nullopt;
  return x;
}

PhaseWitness classify_phase(const Mat2& h, double tol) {
  PhaseWitness w;
  w.eigenvalues = eigenvalues(h, tol);
  w.gap = spectral_gap(h);
  w.threshold = degeneracy_threshold(h, tol);

  const auto is_real = [tol](Complex z) {
    return std::abs(z.imag()) <= 0.5 * tol * (1.0 + std::abs(z.real()));
  };
  const Complex l0 = w.eigenvalues[0];
  const Complex l1 = w.eigenvalues[1];
  if (w.gap < w.threshold) {
    w.phase = Phase::kExceptionalPoint;
  } else if (is_real(l0) && is_real(l1)) {
    w.phase = Phase::kUnbroken;
  } else if (std::abs(l0 - std::conj(l1)) <= tol * (1.0 + std::abs(l0))) {
    w.phase = Phase::kBroken;
  } else {
    w.phase = Phase::kUnclassifiable;
  }

  const std::optional<double> x = detect_pt_scale(h, tol);
  if (!x) return w;
  try {
    w.pt = check_pt(h, *x, tol);
  } catch (const Error&) {
    return w;
  }
  if (w.pt->phase != w.phase) {
    // The two gap estimates round differently right at the threshold.
    const bool near_ep = std::min(w.gap, w.pt->gap) <= 10.0 * w.threshold;
    if (!near_ep) {
      throw Error(ErrorCode::kInternal,
                  "phase from Q (" + std::string(to_string(w.pt->phase)) +
                      ") disagrees with the spectrum (" + std::string(to_string(w.phase)) + ")");
    }
  }
  return w;
}

}  // namespace pfkit

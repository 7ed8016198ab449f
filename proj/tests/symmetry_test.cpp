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

#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "pfkit/error.hpp"
#include "support.hpp"

namespace pfkit {
namespace {

using testing::random_complex;

const Mat2 kPauliX{0.0, 1.0, 1.0, 0.0};

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

Mat2 pt_form(Complex a, Complex b, double x) {
  return {a, b, std::conj(b) / (x * x), std::conj(a)};
}

TEST(CommutantTest, Examples) {
  const Decomposition d = decompose(kPauliX, Branch::kMinus);
  EXPECT_EQ(commutant(d, 1.0, 0.0), Mat2::identity());
  const Mat2 x = commutant(d, 0.0, 1.0);
  EXPECT_MAT_NEAR(x, kPauliX, 1e-15);
  EXPECT_EQ(max_abs(commutator(x, kPauliX)), 0.0);
}

TEST(CommutantTest, TrivialWhenOmegaVanishes) {
  const Decomposition d = make_decomposition(1.0, 2.0, 0.0, 3.0, Branch::kMinus);
  EXPECT_EQ(code_of([&] { commutant(d, 1.0, 1.0); }), ErrorCode::kTrivialCommutant);
}

TEST(CommutantTest, RandomDecompositionsCommute) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const auto c = testing::random_case(rng);
    const Mat2 h = assemble(c.dec);
    const Mat2 x = commutant(c.dec, random_complex(rng), random_complex(rng));
    EXPECT_LE(max_abs(commutator(x, h)), 1e-10 * (1.0 + max_abs(x) * max_abs(h))) << i;
  }
}

TEST(InvolutionTest, Examples) {
  const Involution pauli = involutive_symmetry(make_decomposition(1.0, -1.0, 2.0, -1.0, Branch::kMinus));
  EXPECT_MAT_NEAR(pauli.x, kPauliX, 0.0);
  EXPECT_MAT_NEAR(pauli.minus_x, -kPauliX, 0.0);
  const Complex beta(0.5, -2.0);
  const Involution z = involutive_symmetry(make_decomposition(0.0, beta, 1.0, 0.0, Branch::kMinus));
  EXPECT_MAT_NEAR(z.x, (Mat2{-1.0, -2.0 / beta, 0.0, 1.0}), 1e-15);
  EXPECT_MAT_NEAR(z.x * z.x, Mat2::identity(), 1e-15);
}

TEST(InvolutionTest, DegenerateParameters) {
  Decomposition d = make_decomposition(1.0, 2.0, 1.0, 0.0, Branch::kMinus);
  d.beta = d.alpha;
  EXPECT_EQ(code_of([&] { involutive_symmetry(d); }), ErrorCode::kDegenerateParameters);
}

TEST(InvolutionTest, RandomDecompositions) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const auto c = testing::random_case(rng);
    const Mat2 h = assemble(c.dec);
    const Involution inv = involutive_symmetry(c.dec);
    const double scale = 1.0 + max_abs(inv.x);
    EXPECT_LE(max_abs(inv.x * inv.x - Mat2::identity()), 1e-10 * scale * scale) << i;
    EXPECT_LE(max_abs(inv.minus_x * inv.minus_x - Mat2::identity()), 1e-10 * scale * scale);
    EXPECT_LE(max_abs(commutator(inv.x, h)), 1e-10 * scale * (1.0 + max_abs(h))) << i;
    // It belongs to the commutant family.
    const Mat2 member = commutant(c.dec, inv.x.m00(), inv.x.m01());
    EXPECT_LE(max_abs(member - inv.x), 1e-10 * scale);
  }
}

TEST(PTTest, ExceptionalPointExample) {
  const PTReport r = check_pt(Mat2{kI, 1.0, 1.0, -kI});
  EXPECT_TRUE(r.pt_symmetric);
  EXPECT_EQ(r.q, 0.0);
  EXPECT_EQ(r.phase, Phase::kExceptionalPoint);
  EXPECT_CNEAR(r.eps_plus, 0.0, 0.0);
  EXPECT_TRUE(is_degenerate(eigenpairs(Mat2{kI, 1.0, 1.0, -kI})));
  EXPECT_NEAR(std::abs(r.lambda_plus), 1.0, 1e-12);
}

TEST(PTTest, UnbrokenExample) {
  const PTReport r = check_pt(kPauliX);
  EXPECT_EQ(r.phase, Phase::kUnbroken);
  EXPECT_DOUBLE_EQ(r.q, 1.0);
  EXPECT_CNEAR(r.eps_plus, 1.0, 1e-15);
  EXPECT_CNEAR(r.eps_minus, -1.0, 1e-15);
  EXPECT_NEAR(std::abs(r.lambda_plus), 1.0, 1e-10);
  EXPECT_NEAR(std::abs(r.lambda_minus), 1.0, 1e-10);
}

TEST(PTTest, BrokenExample) {
  const Mat2 h{2.0 * kI, 1.0, 1.0, -2.0 * kI};
  const PTReport r = check_pt(h);
  EXPECT_EQ(r.phase, Phase::kBroken);
  EXPECT_DOUBLE_EQ(r.q, -3.0);
  EXPECT_CNEAR(r.eps_plus, kI * std::sqrt(3.0), 1e-15);
  EXPECT_CNEAR(r.eps_minus, -kI * std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(std::abs(r.lambda_plus), 1.0, 1e-10);
  EXPECT_NEAR(std::abs(r.lambda_minus), 1.0, 1e-10);
  // PT sends |eps+> to a multiple of |eps->.
  EXPECT_LE(max_abs(h * r.v_plus - r.v_plus * r.eps_plus), 1e-14);
  EXPECT_LE(max_abs(h * r.v_minus - r.v_minus * r.eps_minus), 1e-14);
}

TEST(PTTest, NotInPTFormNamesTheFailingCondition) {
  try {
    check_pt(Mat2{1.0, 2.0, 3.0, 4.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInPTForm);
    const std::string what = e.what();
    EXPECT_NE(what.find("H00"), std::string::npos);
    EXPECT_NE(what.find("H10"), std::string::npos);
  }
  try {
    check_pt(Mat2{1.0, 2.0, 2.0, 1.0}, 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).find("H00"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { check_pt(kPauliX, 0.0); }), ErrorCode::kInvalidSpec);
}

TEST(PTTest, DiagonalBrokenCase) {
  const double x = 2.0;
  const PTReport r = check_pt(Mat2::diag(Complex(1.0, -0.5), Complex(1.0, 0.5)), x);
  EXPECT_EQ(r.phase, Phase::kBroken);
  EXPECT_CNEAR(r.eps_plus, Complex(1.0, 0.5), 1e-15);
  EXPECT_NEAR(std::abs(r.lambda_plus), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(r.lambda_minus), 1.0, 1e-15);
  EXPECT_EQ(r.v_plus.c0(), Complex(0.0));
}

TEST(PTTest, DetectScale) {
  EXPECT_EQ(detect_pt_scale(kPauliX), 1.0);
  EXPECT_NEAR(*detect_pt_scale(pt_form(Complex(0.3, 0.2), Complex(1.0, 2.0), 2.0)), 2.0, 1e-15);
  EXPECT_FALSE(detect_pt_scale(Mat2{1.0, 1.0, -1.0, 1.0}).has_value());
  EXPECT_FALSE(detect_pt_scale(Mat2{1.0, 1.0, 0.0, 1.0}).has_value());
  EXPECT_FALSE(detect_pt_scale(Mat2{kI, 1.0, 1.0, kI}).has_value());
}

// Properties of random P~T-form matrices at several scales. The unbroken
// phase has |alpha| = |beta| = 1/|x|.
TEST(PTTest, RandomPTFormProperties) {
  std::mt19937_64 rng(23);
  const std::array<double, 8> scales{0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 4.0, -4.0};
  int unbroken = 0;
  int broken = 0;
  for (int i = 0; i < 2000; ++i) {
    SCOPED_TRACE(i);
    const double x = scales[static_cast<std::size_t>(i) % scales.size()];
    const Complex a = random_complex(rng);
    const Complex b = random_complex(rng);
    const Mat2 h = pt_form(a, b, x);
    const PTReport r = check_pt(h, x);
    const Decomposition d = decompose(h, Branch::kMinus);
    const auto ev = testing::oracle_eigenvalues(h);
    if (r.phase == Phase::kUnbroken) {
      ++unbroken;
      EXPECT_LE(std::abs(ev[0].imag()) + std::abs(ev[1].imag()), 1e-10);
      EXPECT_NEAR(std::abs(r.lambda_plus), 1.0, 1e-10);
      EXPECT_NEAR(std::abs(r.lambda_minus), 1.0, 1e-10);
      EXPECT_NEAR(std::abs(d.alpha), 1.0 / std::abs(x), 1e-8);
      EXPECT_NEAR(std::abs(d.beta), 1.0 / std::abs(x), 1e-8);
    } else {
      ASSERT_EQ(r.phase, Phase::kBroken);
      ++broken;
      EXPECT_LE(std::abs(ev[0] - std::conj(ev[1])), 1e-10);
      EXPECT_NEAR(std::abs(r.lambda_plus), 1.0, 1e-10);
      EXPECT_NEAR(std::abs(r.lambda_minus), 1.0, 1e-10);
      EXPECT_CNEAR(d.alpha * std::conj(d.beta), 1.0 / (x * x), 1e-8);
      EXPECT_CNEAR(d.omega, -2.0 * kI * d.rho.imag(), 1e-8);
    }
    // The oracle's order is at the mercy of rounding in Re, compare as sets.
    const double direct = std::abs(r.eps_plus - ev[1]) + std::abs(r.eps_minus - ev[0]);
    const double swapped = std::abs(r.eps_plus - ev[0]) + std::abs(r.eps_minus - ev[1]);
    EXPECT_LE(std::min(direct, swapped), 1e-10);
    EXPECT_EQ(classify_phase(h).phase, r.phase);
  }
  EXPECT_GT(unbroken, 100);
  EXPECT_GT(broken, 100);
}

TEST(PTTest, BrokenRhoImaginaryWhenTraceVanishes) {
  const Decomposition d = decompose(Mat2{2.0 * kI, 1.0, 1.0, -2.0 * kI}, Branch::kMinus);
  EXPECT_LE(std::abs(d.rho.real()), 1e-15);
}

TEST(PTTest, DecomposeFailsExactlyAtTheExceptionalPoint) {
  for (double x : {1.0, 2.0, 0.5}) {
    // |H01| = x |Im H00| puts Q on zero.
    const Mat2 h = pt_form(Complex(0.25, 0.5), 0.5 * x, x);
    EXPECT_EQ(check_pt(h, x).phase, Phase::kExceptionalPoint);
    EXPECT_EQ(code_of([&] { decompose(h, Branch::kMinus); }), ErrorCode::kExceptionalPoint);
  }
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify_phase(Mat2::diag(1.0, 2.0)).phase, Phase::kUnbroken);
  EXPECT_EQ(classify_phase(Mat2{1.0, 1.0, 0.0, 1.0}).phase, Phase::kExceptionalPoint);
  const PhaseWitness broken = classify_phase(Mat2{2.0 * kI, 1.0, 1.0, -2.0 * kI});
  EXPECT_EQ(broken.phase, Phase::kBroken);
  ASSERT_TRUE(broken.pt.has_value());
  EXPECT_DOUBLE_EQ(broken.pt->q, -3.0);
  const PhaseWitness odd = classify_phase(Mat2::diag(kI, 2.0 * kI));
  EXPECT_EQ(odd.phase, Phase::kUnclassifiable);
  EXPECT_FALSE(odd.pt.has_value());
}

TEST(ClassifyTest, NoSpuriousDisagreementNearTheBoundary) {
  // Walk Q through zero in tiny steps; the cross-check must never throw.
  for (int k = -50; k <= 50; ++k) {
    const double b = 1.0 + k * 1e-12;
    EXPECT_NO_THROW(classify_phase(Mat2{kI, b, b, -kI})) << k;
  }
}

}  // namespace
}  // namespace pfkit

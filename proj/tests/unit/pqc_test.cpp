// Copyright 2026 The QCCNN Authors
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

#include "qccnn/pqc.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qccnn/error.hpp"

namespace qccnn {
namespace {

using testing::cplx;
constexpr double kPi = std::numbers::pi;

std::size_t count_kind(const CircuitSpec& spec, GateKind kind) {
  std::size_t n = 0;
  for (const Gate& g : spec.gates()) n += g.kind == kind ? 1 : 0;
  return n;
}

TEST(BuildCircuit, FourQubitsDepthFour) {
  const CircuitSpec spec = build_circuit(4, 4);
  EXPECT_EQ(spec.param_count(), 16u);
  EXPECT_EQ(count_kind(spec, GateKind::kCnot), 12u);
  EXPECT_EQ(count_kind(spec, GateKind::kRy), spec.param_count());
  EXPECT_EQ(spec.gate_count(), 4u * 4u + 3u * 4u);
}

TEST(BuildCircuit, DepthZeroIsEmpty) {
  const CircuitSpec spec = build_circuit(4, 0);
  EXPECT_EQ(spec.param_count(), 0u);
  EXPECT_EQ(spec.gate_count(), 0u);
}

TEST(BuildCircuit, TwoQubitsDepthThree) {
  const CircuitSpec spec = build_circuit(2, 3);
  EXPECT_EQ(spec.param_count(), 6u);
  EXPECT_EQ(spec.cnot_count(), 3u);
  EXPECT_EQ(count_kind(spec, GateKind::kCnot), 3u);
}

TEST(BuildCircuit, LayoutIsRepeatedRyLayerThenLadder) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t depth = 0; depth <= 4; ++depth) {
      const CircuitSpec spec = build_circuit(n, depth);
      std::size_t pos = 0;
      for (std::size_t d = 0; d < depth; ++d) {
        for (std::size_t q = 0; q < n; ++q) {
          EXPECT_EQ(spec.gates()[pos++], (Gate{GateKind::kRy, q, 0, d * n + q}));
        }
        for (std::size_t q = 0; q + 1 < n; ++q) {
          EXPECT_EQ(spec.gates()[pos++], (Gate{GateKind::kCnot, q, q + 1, 0}));
        }
      }
      EXPECT_EQ(pos, spec.gate_count());
      EXPECT_EQ(spec.gate_count(), n * depth + (n - 1) * depth);
    }
  }
}

TEST(BuildCircuit, RejectsZeroQubits) { EXPECT_THROW(build_circuit(0, 1), SizeError); }

TEST(EncodeWindow, ZerosGiveGroundState) {
  const std::vector<double> w(4, 0.0);
  const Statevector psi = encode_window(w);
  EXPECT_EQ(psi, init_state(4));
}

TEST(EncodeWindow, HalfPiGivesAllOnes) {
  const std::vector<double> w(2, kPi / 2);
  const Statevector psi = encode_window(w);
  EXPECT_NEAR(std::abs(psi[3]), 1.0, 1e-15);
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-15);
}

TEST(EncodeWindow, MatchesKroneckerOracle) {
  const std::vector<double> w{kPi / 4, 0.0};
  const Statevector psi = encode_window(w);
  const std::vector<cplx> oracle = testing::encoded_state(w);
  const double r = std::sqrt(2.0) / 2;
  const double frozen[] = {r, 0.0, r, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(psi[i].real(), oracle[i].real(), 1e-15);
    EXPECT_NEAR(psi[i].real(), frozen[i], 1e-15);
  }
}

TEST(RunCircuit, DepthZeroIsIdentity) {
  const CircuitSpec spec = build_circuit(3, 0);
  const std::vector<double> w{0.2, 0.5, 0.9};
  const Statevector in = encode_window(w);
  EXPECT_EQ(run_circuit(spec, {}, in), in);
}

TEST(RunCircuit, ZeroParamsLeaveOnlyLadders) {
  const CircuitSpec spec = build_circuit(3, 2);
  const std::vector<double> params(spec.param_count(), 0.0);
  const std::vector<double> w{0.4, 1.3, 0.8};
  const Statevector out = run_circuit(spec, params, encode_window(w));

  std::vector<cplx> ref = testing::encoded_state(w);
  for (int d = 0; d < 2; ++d) {
    ref = testing::apply_matrix(testing::cnot_full(3, 0, 1), ref);
    ref = testing::apply_matrix(testing::cnot_full(3, 1, 2), ref);
  }
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(out[i].real(), ref[i].real(), 1e-14);
}

TEST(RunCircuit, RejectsParamMismatch) {
  const CircuitSpec spec = build_circuit(2, 2);
  const std::vector<double> params(3, 0.0);
  EXPECT_THROW(run_circuit(spec, params, init_state(2)), ShapeError);
  const std::vector<double> ok(4, 0.0);
  EXPECT_THROW(run_circuit(spec, ok, init_state(3)), ShapeError);
}

TEST(RunCircuit, MatchesDenseUnitary) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t depth = 1 + trial % 4;
    const CircuitSpec spec = build_circuit(n, depth);
    const auto params = testing::uniform_vector(gen, spec.param_count(), 0.0, 2 * kPi);
    const auto w = testing::uniform_vector(gen, n, 0.0, 1.0);
    const Statevector out = run_circuit(spec, params, encode_window(w));
    const auto ref =
        testing::apply_matrix(testing::layered_circuit(n, depth, params), testing::encoded_state(w));
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_NEAR(out[i].real(), ref[i].real(), 1e-12);
      EXPECT_NEAR(out[i].imag(), ref[i].imag(), 1e-12);
    }
  }
}

TEST(QuantumFeature, GroundStateGivesOne) {
  const CircuitSpec spec = build_circuit(4, 4);
  const std::vector<double> params(16, 0.0);
  const std::vector<double> w(4, 0.0);
  EXPECT_DOUBLE_EQ(quantum_feature(spec, params, w), 1.0);
}

TEST(QuantumFeature, AllOnesThroughOneLadder) {
  // |1111> -> CNOT(0,1) -> |1011> -> CNOT(1,2) -> |1011> -> CNOT(2,3) -> |1010>: even parity.
  const CircuitSpec spec = build_circuit(4, 1);
  const std::vector<double> params(4, 0.0);
  const std::vector<double> w(4, kPi / 2);
  const double oracle = testing::dense_feature(4, 1, params, w);
  EXPECT_NEAR(oracle, 1.0, 1e-12);
  EXPECT_NEAR(quantum_feature(spec, params, w), oracle, 1e-12);
}

TEST(QuantumFeature, MatchesDenseOracleAcrossSizes) {
  std::mt19937_64 gen(11);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t depth = 0; depth <= 3; ++depth) {
      const CircuitSpec spec = build_circuit(n, depth);
      const auto params = testing::uniform_vector(gen, spec.param_count(), 0.0, 2 * kPi);
      const auto w = testing::uniform_vector(gen, n, -1.0, 1.0);
      EXPECT_NEAR(quantum_feature(spec, params, w), testing::dense_feature(n, depth, params, w),
                  1e-12)
          << "n=" << n << " depth=" << depth;
    }
  }
}

TEST(QuantumFeature, RejectsBadInputs) {
  const CircuitSpec spec = build_circuit(4, 1);
  const std::vector<double> params(4, 0.0);
  EXPECT_THROW(quantum_feature(spec, params, std::vector<double>(3, 0.0)), ShapeError);
  EXPECT_THROW(quantum_feature(spec, std::vector<double>(5, 0.0), std::vector<double>(4, 0.0)),
               ShapeError);
  std::vector<double> w(4, 0.0);
  w[2] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(quantum_feature(spec, params, w), DomainError);
}

TEST(ParamShiftGrad, DepthZeroIsEmpty) {
  const CircuitSpec spec = build_circuit(4, 0);
  EXPECT_TRUE(param_shift_grad(spec, {}, std::vector<double>(4, 0.3)).empty());
}

TEST(ParamShiftGrad, SingleQubitClosedForm) {
  // Window 0 and one Ry(t): f = cos^2 t - sin^2 t = cos 2t, f' = -2 sin 2t.
  const CircuitSpec spec = build_circuit(1, 1);
  const std::vector<double> w{0.0};
  for (double t : {0.0, 0.3, 1.0, 2.5, -0.8}) {
    const std::vector<double> p{t};
    const auto grad = param_shift_grad(spec, p, w);
    const auto fd = testing::central_differences(
        [&](std::span<const double> x) { return quantum_feature(spec, x, w); }, p, 1e-5);
    EXPECT_NEAR(grad[0], -2.0 * std::sin(2.0 * t), 1e-12);
    EXPECT_NEAR(grad[0], fd[0], 1e-6);
  }
}

TEST(ParamShiftGrad, MatchesFiniteDifferencesFourByFour) {
  std::mt19937_64 gen(3);
  const CircuitSpec spec = build_circuit(4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto params = testing::uniform_vector(gen, 16, 0.0, 2 * kPi);
    const auto w = testing::uniform_vector(gen, 4, 0.0, 1.0);
    const auto grad = param_shift_grad(spec, params, w);
    const auto fd = testing::central_differences(
        [&](std::span<const double> x) { return quantum_feature(spec, x, w); }, params, 1e-5);
    for (std::size_t j = 0; j < grad.size(); ++j) EXPECT_NEAR(grad[j], fd[j], 1e-6) << "j=" << j;
  }
}

TEST(ParamShiftGrad, EqualsLiteralTwoEvaluationRule) {
  // The evaluator reconstructs both shifted expectations from one replay;
  // compare with two explicit full-circuit evaluations per parameter.
  std::mt19937_64 gen(5);
  const CircuitSpec spec = build_circuit(4, 3);
  const auto params = testing::uniform_vector(gen, spec.param_count(), 0.0, 2 * kPi);
  const auto w = testing::uniform_vector(gen, 4, 0.0, 1.0);
  const auto grad = param_shift_grad(spec, params, w);
  for (std::size_t j = 0; j < params.size(); ++j) {
    auto plus = params;
    auto minus = params;
    plus[j] += kPi / 4;
    minus[j] -= kPi / 4;
    const double literal = testing::dense_feature(4, 3, plus, w) - testing::dense_feature(4, 3, minus, w);
    EXPECT_NEAR(grad[j], literal, 1e-13);
  }
}

TEST(ParamShiftGrad, HalfPiShiftVanishesForFullAngleRy) {
  // With Ry(a) = [[cos a, -sin a], [sin a, cos a]] the feature has period pi in
  // every angle, so +-pi/2 shifts land on the same value.
  std::mt19937_64 gen(9);
  const CircuitSpec spec = build_circuit(4, 2);
  const auto params = testing::uniform_vector(gen, spec.param_count(), 0.0, 2 * kPi);
  const auto w = testing::uniform_vector(gen, 4, 0.0, 1.0);
  const auto grad = param_shift_grad(spec, params, w, ShiftRule{kPi / 2, 0.5});
  for (double g : grad) EXPECT_NEAR(g, 0.0, 1e-12);
}

TEST(InputGrad, GroundStateExtremum) {
  const CircuitSpec spec = build_circuit(1, 0);
  EXPECT_NEAR(input_grad(spec, {}, std::vector<double>{0.0})[0], 0.0, 1e-15);
}

TEST(InputGrad, QuarterPiSingleQubit) {
  const CircuitSpec spec = build_circuit(1, 0);
  const std::vector<double> w{kPi / 4};
  const double analytic = -2.0 * std::sin(kPi / 2);
  const auto fd = testing::central_differences(
      [&](std::span<const double> x) { return testing::dense_feature(1, 0, {}, x); }, w, 1e-5);
  EXPECT_NEAR(fd[0], analytic, 1e-8);
  EXPECT_NEAR(input_grad(spec, {}, w)[0], -2.0, 1e-12);
}

TEST(InputGrad, MatchesFiniteDifferences) {
  std::mt19937_64 gen(21);
  for (std::size_t depth = 0; depth <= 4; ++depth) {
    const CircuitSpec spec = build_circuit(4, depth);
    const auto params = testing::uniform_vector(gen, spec.param_count(), 0.0, 2 * kPi);
    const auto w = testing::uniform_vector(gen, 4, -1.0, 1.0);
    const auto grad = input_grad(spec, params, w);
    const auto fd = testing::central_differences(
        [&](std::span<const double> x) { return quantum_feature(spec, params, x); }, w, 1e-5);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(grad[j], fd[j], 1e-6);
  }
}

TEST(FeatureEvaluator, RequiresParams) {
  FeatureEvaluator ev(build_circuit(2, 1));
  EXPECT_THROW(ev.value(std::vector<double>{0.1, 0.2}), StateError);
}

TEST(FeatureEvaluator, GradientBufferLengthsChecked) {
  FeatureEvaluator ev(build_circuit(2, 1));
  const std::vector<double> p{0.1, 0.2};
  const std::vector<double> w{0.3, 0.4};
  std::vector<double> pg(1);
  EXPECT_THROW(ev.value_and_gradients(p, w, pg, {}), ShapeError);
  std::vector<double> pg_ok(2);
  std::vector<double> wg(3);
  EXPECT_THROW(ev.value_and_gradients(p, w, pg_ok, wg), ShapeError);
}

TEST(FeatureEvaluator, ValueAgreesWithGradientSweep) {
  FeatureEvaluator ev(build_circuit(4, 4));
  std::mt19937_64 gen(2);
  const auto p = testing::uniform_vector(gen, 16, 0.0, 2 * kPi);
  const auto w = testing::uniform_vector(gen, 4, 0.0, 1.0);
  std::vector<double> pg(16);
  std::vector<double> wg(4);
  const double a = ev.value(p, w);
  const double b = ev.value_and_gradients(p, w, pg, wg);
  EXPECT_EQ(a, b);
}

// --- properties -------------------------------------------------------------

TEST(PqcProperties, GradientExactness200Instances) {
  std::mt19937_64 gen(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 2 : 4;
    const std::size_t depth = 1 + (trial / 2) % 4;
    const CircuitSpec spec = build_circuit(n, depth);
    const auto params = testing::uniform_vector(gen, spec.param_count(), 0.0, 2 * kPi);
    const auto w = testing::uniform_vector(gen, n, 0.0, 1.0);
    const auto grad = param_shift_grad(spec, params, w);
    const auto fd = testing::central_differences(
        [&](std::span<const double> x) { return quantum_feature(spec, x, w); }, params, 1e-5);
    for (std::size_t j = 0; j < grad.size(); ++j) worst = std::max(worst, std::abs(grad[j] - fd[j]));
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(PqcProperties, FullTurnPeriodicity) {
  std::mt19937_64 gen(8);
  const CircuitSpec spec = build_circuit(4, 3);
  for (int trial = 0; trial < 20; ++trial) {
    auto params = testing::uniform_vector(gen, spec.param_count(), 0.0, 2 * kPi);
    const auto w = testing::uniform_vector(gen, 4, 0.0, 1.0);
    const double f = quantum_feature(spec, params, w);
    params[trial % params.size()] += 2 * kPi;
    EXPECT_NEAR(quantum_feature(spec, params, w), f, 1e-12);
  }
}

TEST(PqcProperties, BoundedAndDeterministic) {
  std::mt19937_64 gen(13);
  const CircuitSpec spec = build_circuit(4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto params = testing::uniform_vector(gen, 16, -10.0, 10.0);
    const auto w = testing::uniform_vector(gen, 4, -3.0, 3.0);
    const double f = quantum_feature(spec, params, w);
    EXPECT_GE(f, -1.0);
    EXPECT_LE(f, 1.0);
    EXPECT_EQ(f, quantum_feature(spec, params, w));
    EXPECT_EQ(param_shift_grad(spec, params, w), param_shift_grad(spec, params, w));
  }
}

}  // namespace
}  // namespace qccnn

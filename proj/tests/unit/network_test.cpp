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

#include "qccnn/network.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qccnn/error.hpp"
#include "qccnn/experiment.hpp"

namespace qccnn {
namespace {

std::vector<Shape> shapes_of(const Network& net) {
  return {net.shapes().begin(), net.shapes().end()};
}

double network_loss(const Network& net, const Tensor& x, std::size_t label) {
  const auto pred = net.predict(x);
  return mse_loss(pred, one_hot(label, net.spec().n_classes)).loss;
}

std::vector<double> network_grad(const Network& net, const Tensor& x, std::size_t label) {
  NetworkContext ctx;
  const auto pred = net.forward(x, ctx);
  return net.backward(ctx, mse_loss(pred, one_hot(label, net.spec().n_classes)).grad);
}

std::vector<double> network_fd(Network net, const Tensor& x, std::size_t label, double h) {
  return testing::central_differences(
      [&](std::span<const double> p) {
        net.set_parameters(p);
        return network_loss(net, x, label);
      },
      net.parameters(), h);
}

Tensor random_image(std::mt19937_64& gen) {
  return Tensor({3, 3, 1}, testing::uniform_vector(gen, 9, 0.0, 1.0));
}

TEST(NetworkShapes, OneLayerChain) {
  for (Model model : {Model::kQccnn, Model::kCnn}) {
    const Network net(make_network_spec(Architecture::kOneLayer, model, 5));
    EXPECT_EQ(shapes_of(net), (std::vector<Shape>{{3, 3, 1}, {2, 2, 5}, {1, 1, 5}, {1, 1, 5}}));
  }
}

TEST(NetworkShapes, TwoLayerChain) {
  for (Model model : {Model::kQccnn, Model::kCnn}) {
    const Network net(make_network_spec(Architecture::kTwoLayer, model, 2));
    EXPECT_EQ(shapes_of(net),
              (std::vector<Shape>{{3, 3, 1}, {2, 2, 2}, {1, 1, 6}, {2, 2, 6}, {1, 1, 2}}));
  }
}

TEST(NetworkShapes, ParamCounts) {
  // 5 filters x 16 angles + dense 5x2 + 2.
  EXPECT_EQ(Network(make_network_spec(Architecture::kOneLayer, Model::kQccnn, 2)).param_count(),
            80u + 12u);
  // (2 + 3) filters x 4 weights + dense 24x5 + 5.
  EXPECT_EQ(Network(make_network_spec(Architecture::kTwoLayer, Model::kCnn, 5)).param_count(),
            20u + 125u);
}

TEST(NetworkSpecValidation, RejectsBrokenChains) {
  NetworkSpec no_dense{{3, 3, 1}, {LayerSpec::quantum_conv({2, 2, 1, 0}, 1, 1)}, 2};
  EXPECT_THROW(Network{no_dense}, ShapeError);
  NetworkSpec wrong_out{{3, 3, 1}, {LayerSpec::dense(3)}, 2};
  EXPECT_THROW(Network{wrong_out}, ShapeError);
  NetworkSpec too_small{{3, 3, 1},
                        {LayerSpec::max_pool({2, 2, 1, 0}), LayerSpec::max_pool({2, 2, 1, 0}),
                         LayerSpec::max_pool({2, 2, 1, 0}), LayerSpec::dense(2)},
                        2};
  EXPECT_THROW(Network{too_small}, ShapeError);
}

TEST(Network, PredictionLengthAndDeterminism) {
  std::mt19937_64 gen(1);
  Network net(make_network_spec(Architecture::kOneLayer, Model::kQccnn, 5));
  Rng rng(3);
  net.initialize(rng);
  const Tensor x = random_image(gen);
  const auto a = net.predict(x);
  EXPECT_EQ(a.size(), 5u);
  EXPECT_EQ(a, net.predict(x));

  Network twin(make_network_spec(Architecture::kOneLayer, Model::kQccnn, 5));
  Rng rng2(3);
  twin.initialize(rng2);
  EXPECT_EQ(twin.parameters(), net.parameters());
  EXPECT_EQ(twin.predict(x), a);
}

TEST(Network, ParameterRoundTrip) {
  Network net(make_network_spec(Architecture::kTwoLayer, Model::kQccnn, 2));
  Rng rng(4);
  net.initialize(rng);
  auto p = net.parameters();
  p[0] += 1.0;
  net.set_parameters(p);
  EXPECT_EQ(net.parameters(), p);
  EXPECT_THROW(net.set_parameters(std::vector<double>(p.size() - 1)), ShapeError);
}

TEST(Network, MinimalQuantumNetMatchesFiniteDifferences) {
  // N = 4, D = 1, one filter.
  const NetworkSpec spec{{3, 3, 1},
                         {LayerSpec::quantum_conv({2, 2, 1, 0}, 1, 1),
                          LayerSpec::max_pool({2, 2, 1, 0}), LayerSpec::dense(2)},
                         2};
  std::mt19937_64 gen(5);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Network net(spec);
    Rng rng(seed);
    net.initialize(rng);
    const Tensor x = random_image(gen);
    const auto grad = network_grad(net, x, seed % 2);
    const auto fd = network_fd(net, x, seed % 2, 1e-5);
    ASSERT_EQ(grad.size(), net.param_count());
    for (std::size_t j = 0; j < fd.size(); ++j) EXPECT_NEAR(grad[j], fd[j], 1e-5) << "j=" << j;
  }
}

TEST(Network, BenchmarkArchitecturesMatchFiniteDifferences) {
  std::mt19937_64 gen(6);
  for (Architecture arch : {Architecture::kOneLayer, Architecture::kTwoLayer}) {
    for (Model model : {Model::kQccnn, Model::kCnn}) {
      Network net(make_network_spec(arch, model, 5));
      Rng rng(7);
      net.initialize(rng);
      const Tensor x = random_image(gen);
      const auto grad = network_grad(net, x, 3);
      const auto fd = network_fd(net, x, 3, 1e-5);
      const double tol = model == Model::kQccnn ? 1e-5 : 1e-6;
      for (std::size_t j = 0; j < fd.size(); ++j) EXPECT_NEAR(grad[j], fd[j], tol);
    }
  }
}

TEST(Argmax, TiesResolveLow) {
  EXPECT_EQ(argmax(std::vector<double>{0.1, 0.5, 0.5}), 1u);
  EXPECT_EQ(argmax(std::vector<double>{-1.0}), 0u);
}

TEST(OneHot, Layout) {
  EXPECT_EQ(one_hot(2, 4), (std::vector<double>{0, 0, 1, 0}));
  EXPECT_THROW(one_hot(4, 4), IndexError);
}

}  // namespace
}  // namespace qccnn

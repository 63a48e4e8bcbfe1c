// Copyright 2026 The floquetkit Authors
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

#include <gtest/gtest.h>

#include "floquetkit/catalog.hpp"

namespace fk = floquetkit;
namespace cat = floquetkit::catalog;

namespace {

TEST(Catalog, EveryEntryValidatesWithConstantRank) {
  for (const auto& name : cat::names()) {
    const auto e = cat::build(name);
    const auto rep = fk::validate(e.sequence);
    EXPECT_TRUE(rep.valid) << name;
    const auto r0 = e.sequence.isgs.front().rank();
    for (const auto& g : e.sequence.isgs) EXPECT_EQ(g.rank(), r0) << name;
    EXPECT_EQ(e.name, name);
    EXPECT_FALSE(e.description.empty());
  }
}

TEST(Catalog, LogicalDimensions) {
  EXPECT_EQ(cat::single_qubit_zx().isgs[0].rank(), 1u);
  const auto two = cat::two_qubit_logical();
  EXPECT_EQ(two.isgs[0].n() - two.isgs[0].rank(), 1u);
  const auto rep = cat::three_qubit_repetition();
  EXPECT_EQ(rep.isgs[0].n() - rep.isgs[0].rank(), 1u);
  for (const auto& p : rep.pairs) EXPECT_EQ(p.n_m(), 2u);
}

TEST(Catalog, HoneycombSizes) {
  const auto h = cat::honeycomb(6, 2);
  EXPECT_EQ(h.isgs[0].n(), 12u);
  EXPECT_EQ(h.isgs[0].n() - h.isgs[0].rank(), 2u);
  ASSERT_EQ(h.pairs.size(), 3u);
  for (const auto& p : h.pairs) EXPECT_EQ(p.n_m(), 4u);
  EXPECT_DOUBLE_EQ(h.l, std::sqrt(5.0));
  const auto big = cat::honeycomb(6, 4);
  EXPECT_EQ(big.isgs[0].n(), 24u);
  EXPECT_EQ(big.isgs[0].n() - big.isgs[0].rank(), 2u);
}

TEST(Catalog, HoneycombLayoutColouring) {
  const auto h = cat::honeycomb_layout(12, 4);
  EXPECT_EQ(h.plaquettes.size(), h.n() / 2);
  for (const auto& e : h.edges) {
    EXPECT_GE(e.colour, 0);
    EXPECT_LT(e.colour, 3);
  }
}

TEST(Catalog, InvalidSizesAndNamesThrow) {
  EXPECT_THROW(cat::honeycomb(4, 2), std::invalid_argument);
  EXPECT_THROW(cat::honeycomb(6, 3), std::invalid_argument);
  EXPECT_THROW(cat::build("honeycomb", {{"Lx", 0}}), std::invalid_argument);
  EXPECT_THROW(cat::build("surface"), std::invalid_argument);
}

TEST(Catalog, BuildRecordsParams) {
  const auto e = cat::build("honeycomb", {{"Lx", 12}, {"Ly", 2}});
  EXPECT_EQ(e.params.at("Lx"), 12);
  EXPECT_EQ(e.params.at("Ly"), 2);
  EXPECT_EQ(e.sequence.isgs[0].n(), 24u);
  EXPECT_TRUE(cat::build("two_qubit_logical").params.empty());
}

}  // namespace

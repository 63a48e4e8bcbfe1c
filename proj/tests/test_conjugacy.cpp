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

#include <random>

#include "floquetkit/conjugacy.hpp"
#include "test_util.hpp"

namespace fk = floquetkit;
using fk::parse_pauli;
using fk::StabiliserGroup;

namespace {

StabiliserGroup group(std::initializer_list<const char*> gens) {
  std::vector<std::string> s(gens.begin(), gens.end());
  return StabiliserGroup::from_strings(s);
}

void expect_pair_invariants(const fk::ConjugatePair& p) {
  const std::size_t nm = p.n_m();
  ASSERT_EQ(p.basis_b.size(), nm);
  for (std::size_t i = 0; i < nm; ++i) {
    for (std::size_t j = 0; j < nm; ++j) ASSERT_EQ(fk::commutes(p.basis_a[i], p.basis_b[j]), i == j ? 1 : 0);
    ASSERT_TRUE(p.basis_a[i].is_hermitian());
    ASSERT_TRUE(p.basis_b[i].is_hermitian());
    for (const auto& s : p.intersection.generators()) {
      ASSERT_EQ(fk::commutes(p.basis_a[i], s), 0);
      ASSERT_EQ(fk::commutes(p.basis_b[i], s), 0);
    }
  }
  ASSERT_EQ(p.group_a.rank(), p.group_b.rank());
  ASSERT_EQ(nm, p.group_a.rank() - p.intersection.rank());
  // Signed spans: S together with each basis regenerates the groups.
  std::vector<fk::PauliOperator> ga = p.intersection.generators(), gb = p.intersection.generators();
  ga.insert(ga.end(), p.basis_a.begin(), p.basis_a.end());
  gb.insert(gb.end(), p.basis_b.begin(), p.basis_b.end());
  ASSERT_TRUE(StabiliserGroup(p.n(), ga).same_signed(p.group_a));
  ASSERT_TRUE(StabiliserGroup(p.n(), gb).same_signed(p.group_b));
}

TEST(Intersection, SharedGenerator) {
  const auto s = fk::group_intersection(group({"+ZI", "+IZ"}), group({"+ZI", "+IX"}));
  EXPECT_TRUE(s.same_signed(group({"+ZI"})));
}

TEST(Intersection, ZAndXIsTrivial) { EXPECT_EQ(fk::group_intersection(group({"+Z"}), group({"+X"})).rank(), 0u); }

TEST(Intersection, SignConflictOnXX) {
  try {
    fk::group_intersection(group({"+ZZ", "+XX"}), group({"+ZZ", "-XX"}));
    FAIL() << "expected SignConflict";
  } catch (const fk::SignConflict& e) {
    EXPECT_EQ(e.element().unsigned_part(), parse_pauli("XX"));
  }
}

TEST(CheckReversible, ZAndX) {
  const auto r = fk::check_reversible(group({"+Z"}), group({"+X"}));
  ASSERT_TRUE(r.reversible());
  EXPECT_EQ(r.pair->n_m(), 1u);
  EXPECT_EQ(r.pair->basis_a[0], parse_pauli("Z"));
  EXPECT_EQ(r.pair->basis_b[0], parse_pauli("X"));
}

TEST(CheckReversible, RebasesByInverseCommutationMatrix) {
  const auto r = fk::check_reversible(group({"+ZI", "+IZ"}), group({"+XX", "+IX"}));
  ASSERT_TRUE(r.reversible());
  const auto& p = *r.pair;
  ASSERT_EQ(p.m_before.size(), 2u);
  EXPECT_EQ(p.m_before[0].to_string(), "10");
  EXPECT_EQ(p.m_before[1].to_string(), "11");
  EXPECT_EQ(p.basis_b[0], parse_pauli("XI"));
  EXPECT_EQ(p.basis_b[1], parse_pauli("IX"));
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(p.m_after()[i], fk::BitVector::unit(2, i));
  expect_pair_invariants(p);
}

TEST(CheckReversible, ZZAndXXGivesWitness) {
  const auto r = fk::check_reversible(group({"+ZZ"}), group({"+XX"}));
  ASSERT_FALSE(r.reversible());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->element.unsigned_part(), parse_pauli("XX"));
  EXPECT_TRUE(r.witness->commutation.none());
}

TEST(CheckReversible, RankMismatchThrows) { EXPECT_THROW(fk::check_reversible(group({"ZI"}), group({"XI", "IX"})), fk::RankMismatch); }

TEST(CheckReversible, IdenticalGroupsGiveEmptyBases) {
  const auto r = fk::check_reversible(group({"+ZZ", "+XX"}), group({"+XX", "+ZZ"}));
  ASSERT_TRUE(r.reversible());
  EXPECT_EQ(r.pair->n_m(), 0u);
}

TEST(RebasedProducts, Examples) {
  const auto p = *fk::check_reversible(group({"+ZI", "+IZ"}), group({"+XX", "+IX"})).pair;
  EXPECT_EQ(fk::rebased_products(p, fk::BitVector::from_string("00")), parse_pauli("+II"));
  EXPECT_EQ(fk::rebased_products(p, fk::BitVector::from_string("10")), parse_pauli("+XI"));
  EXPECT_EQ(fk::rebased_products(p, fk::BitVector::from_string("11")), fk::multiply(parse_pauli("XI"), parse_pauli("IX")));
  EXPECT_EQ(fk::rebased_products(p, fk::BitVector::from_string("11")), parse_pauli("+XX"));
  EXPECT_THROW(fk::rebased_products(p, fk::BitVector::from_string("1")), std::invalid_argument);
}

TEST(CheckReversible, RandomPairsSatisfyInvariantsAndSymmetry) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 150; ++t) {
    const auto rp = fk::testing::random_reversible_pair(8, rng);
    const auto r = fk::check_reversible(rp.a, rp.b);
    ASSERT_TRUE(r.reversible());
    EXPECT_EQ(r.pair->n_m(), rp.n_m);
    expect_pair_invariants(*r.pair);
    const auto back = fk::check_reversible(rp.b, rp.a);
    ASSERT_TRUE(back.reversible());
    expect_pair_invariants(*back.pair);
  }
}

TEST(CheckReversible, VerdictInvariantUnderRandomClifford) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 4;
    // Alternate a reversible shape with a non-reversible one (<ZZ..> vs <XX..>).
    std::vector<fk::PauliOperator> ga, gb;
    const bool reversible = t % 2 == 0;
    if (reversible) {
      ga = {fk::PauliOperator::single(n, 0, 'Z')};
      gb = {fk::PauliOperator::single(n, 0, 'X')};
    } else {
      ga = {fk::multiply(fk::PauliOperator::single(n, 0, 'Z'), fk::PauliOperator::single(n, 1, 'Z'))};
      gb = {fk::multiply(fk::PauliOperator::single(n, 0, 'X'), fk::PauliOperator::single(n, 1, 'X'))};
    }
    ASSERT_EQ(fk::check_reversible(StabiliserGroup(n, ga), StabiliserGroup(n, gb)).reversible(), reversible);
    const auto c = fk::testing::Clifford::random(n, rng);
    const auto r = fk::check_reversible(StabiliserGroup(n, {c.conjugate(ga[0])}), StabiliserGroup(n, {c.conjugate(gb[0])}));
    ASSERT_EQ(r.reversible(), reversible);
    if (!reversible) {
      for (const auto& a : r.witness->m) ASSERT_TRUE(a.none());
    }
  }
}

TEST(CheckReversible, NonReversibleWitnessCommutesWithOtherQuotient) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + t % 3;
    const auto c = fk::testing::Clifford::random(n, rng);
    // <Z0, Z1Z2> vs <X0, X1X2>: the second quotient direction is degenerate.
    const auto z12 = fk::multiply(fk::PauliOperator::single(n, 1, 'Z'), fk::PauliOperator::single(n, 2, 'Z'));
    const auto x12 = fk::multiply(fk::PauliOperator::single(n, 1, 'X'), fk::PauliOperator::single(n, 2, 'X'));
    const StabiliserGroup a(n, {c.conjugate(fk::PauliOperator::single(n, 0, 'Z')), c.conjugate(z12)});
    const StabiliserGroup b(n, {c.conjugate(fk::PauliOperator::single(n, 0, 'X')), c.conjugate(x12)});
    const auto r = fk::check_reversible(a, b);
    ASSERT_FALSE(r.reversible());
    const auto& w = *r.witness;
    EXPECT_TRUE(b.contains_unsigned(w.element));
    EXPECT_FALSE(a.contains_unsigned(w.element));
    for (const auto& g : a.generators()) EXPECT_EQ(fk::commutes(g, w.element), 0);
  }
}

}  // namespace

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
#include <set>

#include "floquetkit/catalog.hpp"
#include "floquetkit/floquet.hpp"
#include "test_util.hpp"

namespace fk = floquetkit;
using fk::parse_pauli;
using fk::StabiliserGroup;

namespace {

StabiliserGroup group(std::initializer_list<const char*> gens) {
  std::vector<std::string> s(gens.begin(), gens.end());
  return StabiliserGroup::from_strings(s);
}

std::size_t total_nm(const fk::FloquetSequence& seq) {
  std::size_t s = 0;
  for (const auto& p : seq.pairs) s += p.n_m();
  return s;
}

TEST(Validate, ZXZIsValid) {
  const auto rep = fk::validate_sequence({group({"Z"}), group({"X"}), group({"Z"})}, std::nullopt, 0.0);
  EXPECT_TRUE(rep.valid);
  ASSERT_EQ(rep.transitions.size(), 2u);
  for (const auto& t : rep.transitions) EXPECT_EQ(t.n_m, 1u);
}

TEST(Validate, ZZXXIsInvalidWithWitness) {
  const auto rep = fk::validate_sequence({group({"ZZ"}), group({"XX"})}, std::nullopt, 0.0);
  EXPECT_FALSE(rep.valid);
  ASSERT_EQ(rep.transitions.size(), 1u);
  EXPECT_TRUE(rep.transitions[0].witness.has_value());
  EXPECT_THROW(fk::make_sequence({group({"ZZ"}), group({"XX"})}), fk::InvalidSequence);
}

TEST(Validate, HoneycombIsValid) {
  const auto seq = fk::catalog::honeycomb(6, 2);
  const auto rep = fk::validate(seq);
  EXPECT_TRUE(rep.valid);
  for (const auto& t : rep.transitions) {
    ASSERT_TRUE(t.locality.has_value());
    EXPECT_TRUE(t.locality->pass);
  }
}

TEST(Validate, RejectsShortAndMismatchedSequences) {
  EXPECT_FALSE(fk::validate_sequence({group({"Z"})}, std::nullopt, 0.0).valid);
  EXPECT_FALSE(fk::validate_sequence({group({"Z"}), group({"XI"})}, std::nullopt, 0.0).valid);
  EXPECT_FALSE(fk::validate_sequence({group({"ZI"}), group({"XI", "IX"})}, std::nullopt, 0.0).valid);
}

TEST(Step, ForcedPlusAndMinus) {
  const auto seq = fk::make_sequence({group({"Z"}), group({"X"})});
  auto plus = fk::OutcomeSource::forced("0");
  auto st = fk::step(fk::initial_state(seq), seq.pairs[0], plus);
  EXPECT_TRUE(st.group.same_signed(group({"+X"})));
  auto minus = fk::OutcomeSource::forced("1");
  st = fk::step(fk::initial_state(seq), seq.pairs[0], minus);
  EXPECT_TRUE(st.group.same_signed(group({"-X"})));
  EXPECT_EQ(st.outcomes, (std::vector<std::uint8_t>{1}));
}

TEST(Step, TwoMeasurementsGiveFourDistinctSignVectors) {
  const auto seq = fk::make_sequence({group({"ZI", "IZ"}), group({"XX", "IX"})});
  std::set<std::vector<int>> signs;
  for (unsigned s = 0; s < 4; ++s) {
    auto src = fk::OutcomeSource::forced_from_index(s, 2);
    const auto st = fk::step(fk::initial_state(seq), seq.pairs[0], src);
    ASSERT_TRUE(st.group.same_unsigned(seq.isgs[1]));
    // Signs of the canonical generators XI and IX in the new group.
    std::vector<int> v;
    for (const char* g : {"XI", "IX"}) v.push_back(st.group.contains(parse_pauli(g)).sign_matches() ? 1 : -1);
    signs.insert(v);
  }
  EXPECT_EQ(signs.size(), 4u);
}

TEST(Step, GroupMismatchThrows) {
  const auto seq = fk::make_sequence({group({"Z"}), group({"X"})});
  fk::RunState st = fk::initial_state(seq);
  st.group = group({"X"});
  auto src = fk::OutcomeSource::seeded(0);
  EXPECT_THROW(fk::step(st, seq.pairs[0], src), fk::GroupMismatch);
}

TEST(RewriteLogicals, LogicalInNormaliserOfBIsUnchanged) {
  const auto pair = fk::catalog::two_qubit_logical().pairs[0];
  fk::LogicalBasis lb;
  lb.pairs.emplace_back(parse_pauli("XX"), parse_pauli("IZ"));
  const auto out = fk::rewrite_logicals(lb, pair);
  EXPECT_EQ(out.x(0), parse_pauli("XX"));
  EXPECT_EQ(out.z(0), parse_pauli("IZ"));
}

TEST(RewriteLogicals, AnticommutingLogicalPicksUpA) {
  const auto pair = fk::catalog::two_qubit_logical().pairs[0];
  fk::LogicalBasis lb;
  lb.pairs.emplace_back(parse_pauli("IX"), parse_pauli("ZZ"));
  const auto out = fk::rewrite_logicals(lb, pair);
  EXPECT_EQ(out.z(0), parse_pauli("IZ"));
  // With the group's sign flipped, the representative carries the sign.
  const auto out_minus = fk::rewrite_logicals(lb, pair, group({"-ZI"}));
  EXPECT_EQ(out_minus.z(0), parse_pauli("-IZ"));
}

TEST(RewriteLogicals, HoneycombSupportStaysInTwoLNeighbourhood) {
  const auto seq = fk::catalog::honeycomb(6, 2);
  const auto lb = fk::normaliser_logicals(seq.isgs[0]);
  const double l = seq.l;
  for (const auto& q : lb.flat()) {
    fk::LogicalBasis one;
    one.pairs.emplace_back(q, q);
    const auto r = fk::rewrite_logicals(one, seq.pairs[0]).x(0);
    EXPECT_TRUE(fk::region_subset(r.support(), fk::neighbourhood(*seq.lattice, q.support(), 2 * l)));
  }
}

// Logicals commute with the current group and stay in their class.
void check_run_invariants(const fk::FloquetSequence& seq, fk::OutcomeSource& src) {
  fk::RunState st = fk::initial_state(seq);
  for (const auto& pair : seq.pairs) {
    const auto before = st;
    st = fk::step(st, pair, src);
    ASSERT_TRUE(st.group.same_unsigned(pair.group_b));
    for (std::size_t i = 0; i < st.logicals.k(); ++i) {
      for (const auto* q : {&st.logicals.x(i), &st.logicals.z(i)}) {
        for (const auto& g : st.group.generators()) ASSERT_EQ(fk::commutes(*q, g), 0);
      }
      ASSERT_TRUE(before.group.contains(fk::multiply(st.logicals.x(i), before.logicals.x(i))).sign_matches());
      ASSERT_TRUE(before.group.contains(fk::multiply(st.logicals.z(i), before.logicals.z(i))).sign_matches());
    }
  }
}

TEST(Run, InvariantsHoldOnRandomSequences) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 40; ++t) {
    const auto rp = fk::testing::random_reversible_pair(6, rng);
    const auto seq = fk::make_sequence({rp.a, rp.b, rp.a});
    auto src = fk::OutcomeSource::seeded(static_cast<std::uint64_t>(t));
    check_run_invariants(seq, src);
    auto src2 = fk::OutcomeSource::seeded(static_cast<std::uint64_t>(t));
    const auto act = fk::period_action(seq, src2);
    EXPECT_TRUE(act.is_symplectic());
  }
}

TEST(Run, InvariantsHoldOnHoneycomb) {
  const auto seq = fk::catalog::honeycomb(6, 2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto src = fk::OutcomeSource::seeded(seed);
    check_run_invariants(seq, src);
  }
}

TEST(PeriodAction, TrivialPeriodIsIdentity) {
  const auto seq = fk::make_sequence({group({"ZI"}), group({"ZI"})});
  auto src = fk::OutcomeSource::forced(std::vector<std::uint8_t>{});
  const auto act = fk::period_action(seq, src);
  EXPECT_EQ(act.k, 1u);
  EXPECT_TRUE(act.is_identity());
  EXPECT_EQ(act.frame, "I");
}

TEST(PeriodAction, TwoQubitLogicalIsIdentityForAllStreams) {
  const auto seq = fk::catalog::two_qubit_logical();
  for (unsigned s = 0; s < 4; ++s) {
    auto src = fk::OutcomeSource::forced_from_index(s, 2);
    const auto act = fk::period_action(seq, src);
    EXPECT_TRUE(act.is_identity());
  }
}

TEST(PeriodAction, SingleQubitHasEmptyLogicalSpace) {
  auto src = fk::OutcomeSource::seeded(0);
  const auto act = fk::period_action(fk::catalog::single_qubit_zx(), src);
  EXPECT_EQ(act.k, 0u);
  EXPECT_TRUE(act.is_identity());
}

TEST(PeriodAction, NonPeriodicThrows) {
  const auto seq = fk::make_sequence({group({"Z"}), group({"X"})});
  auto src = fk::OutcomeSource::seeded(0);
  EXPECT_THROW(fk::period_action(seq, src), std::invalid_argument);
}

TEST(PeriodAction, HoneycombSymplecticPartIsOutcomeIndependent) {
  const auto seq = fk::catalog::honeycomb(6, 2);
  const std::size_t total = total_nm(seq);
  ASSERT_EQ(total, 12u);
  auto first_src = fk::OutcomeSource::forced_from_index(0, total);
  const auto reference = fk::period_action(seq, first_src);
  EXPECT_TRUE(reference.is_symplectic());
  EXPECT_FALSE(reference.is_identity());
  std::set<std::string> frames;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << total); ++s) {
    auto src = fk::OutcomeSource::forced_from_index(s, total);
    const auto act = fk::period_action(seq, src);
    ASSERT_EQ(act.symplectic, reference.symplectic) << "stream " << s;
    frames.insert(act.frame);
  }
  // Signs are frame data and do vary with the stream.
  EXPECT_GT(frames.size(), 1u);
}

TEST(PeriodAction, RandomPeriodsAreOutcomeIndependent) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 20; ++t) {
    const auto p1 = fk::testing::random_reversible_pair(5, rng);
    const auto seq = fk::make_sequence({p1.a, p1.b, p1.a});
    const std::size_t total = total_nm(seq);
    auto src0 = fk::OutcomeSource::forced_from_index(0, total);
    const auto ref = fk::period_action(seq, src0);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << total); ++s) {
      auto src = fk::OutcomeSource::forced_from_index(s, total);
      ASSERT_EQ(fk::period_action(seq, src).symplectic, ref.symplectic);
    }
  }
}

}  // namespace

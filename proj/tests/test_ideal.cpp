#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "support.hpp"

namespace idealspace {
namespace {

using testing::gen;
using testing::ring;

std::vector<std::string> lattice_labels(const IdealLattice& L) {
  std::vector<std::string> out;
  for (const auto& a : L.ideals()) out.push_back(ideal_label(a));
  return out;
}

TEST(Generate, Examples) {
  const RingPtr z12 = make_zmod(12);
  EXPECT_EQ(gen(z12, {"4"}).members().to_vector(), (std::vector<std::size_t>{0, 4, 8}));
  EXPECT_TRUE(generate_ideal(z12, {}).is_zero());
  const RingPtr r = ring("Z2xZ2xZ2");
  const Ideal x = gen(r, {"(1,0,0)"});
  EXPECT_EQ(x.size(), 2U);
  EXPECT_TRUE(classify(x, SpectrumKind::Min));
}

TEST(Generate, RejectsNonIdeals) {
  const RingPtr z6 = make_zmod(6);
  BitSet s(6);
  s.set(0);
  s.set(1);
  EXPECT_THROW(Ideal(z6, s), Error);
}

TEST(Enumerate, DivisorLatticeOfZ12) {
  const auto L = enumerate_ideals(make_zmod(12));
  EXPECT_EQ(lattice_labels(*L), (std::vector<std::string>{"<0>", "<6>", "<4>", "<3>", "<2>", "<1>"}));
  EXPECT_TRUE((*L)[L->zero_index()].is_zero());
  EXPECT_FALSE((*L)[L->unit_index()].proper());
}

TEST(Enumerate, EightIdealsOfZ2Cubed) { EXPECT_EQ(enumerate_ideals(ring("Z2xZ2xZ2"))->size(), 8U); }

TEST(Enumerate, FieldsHaveTwoIdeals) {
  for (long long p : {2, 3, 5, 7, 11, 13, 31}) EXPECT_EQ(enumerate_ideals(make_zmod(p))->size(), 2U) << p;
}

TEST(Enumerate, MatchesSubsetFilterOracle) {
  for (const auto& e : testing::small_rings()) {
    const RingPtr r = ring(e);
    ASSERT_LE(r->size(), 16U) << e;
    std::set<std::vector<std::size_t>> got;
    const auto L = enumerate_ideals(r);
    for (const auto& a : L->ideals()) got.insert(a.members().to_vector());
    EXPECT_EQ(got, testing::oracle_ideals(*r)) << e;
  }
}

TEST(Enumerate, IdealCap) {
  Limits l;
  l.max_ideals = 5;
  try {
    enumerate_ideals(make_zmod(12), l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Operations, Examples) {
  const RingPtr z36 = make_zmod(36), z12 = make_zmod(12);
  EXPECT_EQ(ideal_intersect(gen(z36, {"2"}), gen(z36, {"3"})), gen(z36, {"6"}));
  EXPECT_EQ(ideal_sum(gen(z12, {"2"}), gen(z12, {"3"})), unit_ideal(z12));
  EXPECT_TRUE(ideal_product(gen(z12, {"2"}), zero_ideal(z12)).is_zero());
  EXPECT_EQ(ideal_power(gen(z12, {"2"}), 2), gen(z12, {"4"}));
}

TEST(Radical, Examples) {
  const RingPtr z12 = make_zmod(12);
  EXPECT_EQ(radical(gen(z12, {"4"})), gen(z12, {"2"}));
  EXPECT_TRUE(radical(zero_ideal(make_zmod(6))).is_zero());
}

TEST(Operations, LatticeInvariants) {
  for (const auto& e : testing::suite()) {
    const RingPtr r = ring(e);
    const auto L = enumerate_ideals(r);
    for (std::size_t i = 0; i < L->size(); ++i) {
      const Ideal& a = (*L)[i];
      const Ideal ra = radical(a);
      EXPECT_TRUE(a.is_subset_of(ra));
      EXPECT_EQ(radical(ra), ra);
      for (std::size_t j = 0; j < L->size(); ++j) {
        const Ideal& b = (*L)[j];
        const Ideal prod = ideal_product(a, b), meet = ideal_intersect(a, b), sum = ideal_sum(a, b);
        EXPECT_TRUE(prod.is_subset_of(meet));
        EXPECT_TRUE(meet.is_subset_of(a) && meet.is_subset_of(b));
        EXPECT_TRUE(a.is_subset_of(sum) && b.is_subset_of(sum));
        if (a.is_subset_of(b)) EXPECT_TRUE(ra.is_subset_of(radical(b)));
        EXPECT_EQ((*L)[L->sum_index(i, j)], sum);
        EXPECT_EQ((*L)[L->meet_index(i, j)], meet);
        EXPECT_EQ(L->leq(i, j), a.is_subset_of(b));
      }
    }
  }
}

TEST(Generators, RegenerateTheIdeal) {
  for (const auto& e : testing::suite()) {
    const RingPtr r = ring(e);
    const auto L = enumerate_ideals(r);
    for (const auto& a : L->ideals()) EXPECT_EQ(generate_ideal(r, generators_of(a)), a) << e;
  }
}

TEST(Classify, Examples) {
  const RingPtr z12 = make_zmod(12);
  EXPECT_TRUE(classify(gen(z12, {"2"}), SpectrumKind::Spc));
  EXPECT_FALSE(classify(gen(z12, {"4"}), SpectrumKind::Rad));
  for (long long p : {2, 3, 5}) EXPECT_TRUE(classify(zero_ideal(make_zmod(p)), SpectrumKind::Max));
  const RingPtr r = ring("Z2xZ2xZ2");
  EXPECT_TRUE(classify(gen(r, {"(1,0,0)"}), SpectrumKind::Min));
  EXPECT_FALSE(classify(gen(r, {"(1,1,0)"}), SpectrumKind::Min));
}

TEST(Classify, OnlyFgnAdmitsTheUnitIdeal) {
  const RingPtr z6 = make_zmod(6);
  const auto L = enumerate_ideals(z6);
  for (SpectrumKind k : kAllKinds) EXPECT_EQ(classify(*L, L->unit_index(), k), k == SpectrumKind::Fgn) << kind_name(k);
}

TEST(Classify, KindsAndNames) {
  for (SpectrumKind k : kAllKinds) EXPECT_EQ(parse_kind(kind_name(k)), k);
  EXPECT_EQ(parse_kind("prp"), SpectrumKind::Prp);
  EXPECT_THROW(parse_kind("foo"), Error);
}

// Finite rings: primes are maximal, and meet irreducibility is the same in
// its binary and complete forms.
TEST(Classify, FiniteRingCoincidences) {
  for (const auto& e : testing::suite()) {
    const auto L = enumerate_ideals(ring(e));
    for (std::size_t i = 0; i < L->size(); ++i) {
      const bool spc = classify(*L, i, SpectrumKind::Spc);
      EXPECT_EQ(spc, classify(*L, i, SpectrumKind::Max)) << e << i;
      EXPECT_EQ(spc, classify(*L, i, SpectrumKind::Spn)) << e << i;
      EXPECT_EQ(classify(*L, i, SpectrumKind::Irr), classify(*L, i, SpectrumKind::Irc)) << e << i;
      EXPECT_EQ(spc, classify(*L, i, SpectrumKind::Irs) && classify(*L, i, SpectrumKind::Rad)) << e << i;
    }
  }
}

// Independent definitions of a few kinds, straight from the members.
TEST(Classify, AgreesWithDirectDefinitions) {
  for (const auto& e : testing::suite()) {
    const RingPtr r = ring(e);
    const auto L = enumerate_ideals(r);
    const std::size_t N = L->size();
    for (std::size_t i = 0; i + 1 < N; ++i) {
      const Ideal& a = (*L)[i];
      bool prime = true;
      for (Element x = 0; x < r->size() && prime; ++x)
        for (Element y = 0; y < r->size() && prime; ++y)
          if (a.contains(r->mul(x, y)) && !a.contains(x) && !a.contains(y)) prime = false;
      EXPECT_EQ(classify(*L, i, SpectrumKind::Spc), prime) << e << i;

      bool strongly_irreducible = true;
      for (std::size_t b = 0; b < N && strongly_irreducible; ++b)
        for (std::size_t c = 0; c < N && strongly_irreducible; ++c)
          if (ideal_intersect((*L)[b], (*L)[c]).is_subset_of(a) && !(*L)[b].is_subset_of(a) &&
              !(*L)[c].is_subset_of(a))
            strongly_irreducible = false;
      EXPECT_EQ(classify(*L, i, SpectrumKind::Irs), strongly_irreducible) << e << i;

      bool nil = true;
      a.members().for_each([&](std::size_t x) { nil = nil && r->is_nilpotent(static_cast<Element>(x)); });
      EXPECT_EQ(classify(*L, i, SpectrumKind::Nil), nil) << e << i;
      EXPECT_EQ(classify(*L, i, SpectrumKind::Rad), radical(a) == a) << e << i;
      EXPECT_TRUE(classify(*L, i, SpectrumKind::Prp));
      EXPECT_TRUE(classify(*L, i, SpectrumKind::Fgn));
      EXPECT_FALSE(classify(*L, i, SpectrumKind::Reg));
    }
  }
}

TEST(Lattice, IndexOfRejectsForeignIdeals) {
  const auto L = enumerate_ideals(make_zmod(6));
  EXPECT_THROW(L->index_of(zero_ideal(make_zmod(4))), Error);
}

}  // namespace
}  // namespace idealspace

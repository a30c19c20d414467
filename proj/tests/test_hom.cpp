#include <gtest/gtest.h>

#include "support.hpp"

namespace idealspace {
namespace {

using testing::elem;
using testing::gen;
using testing::ring;

TEST(Quotient, Z12ModFourIsZ4) {
  const RingPtr z12 = make_zmod(12);
  const Ideal a = gen(z12, {"4"});
  auto [q, f] = make_quotient(z12, a);
  EXPECT_EQ(q->size(), 4U);
  EXPECT_TRUE(find_isomorphism(q, make_zmod(4)).has_value());
  EXPECT_EQ(kernel_of(f).members().to_vector(), (std::vector<std::size_t>{0, 4, 8}));
}

TEST(Quotient, Z12ModSixIsZ6) {
  const RingPtr z12 = make_zmod(12);
  auto [q, f] = make_quotient(z12, gen(z12, {"6"}));
  EXPECT_TRUE(find_isomorphism(q, make_zmod(6)).has_value());
}

TEST(Quotient, ByZeroIsACopy) {
  for (const auto& e : {"Z6", "Z2xZ4", "Z12"}) {
    const RingPtr r = ring(e);
    auto [q, f] = make_quotient(r, zero_ideal(r));
    EXPECT_TRUE(f.is_surjective() && f.is_injective()) << e;
    EXPECT_TRUE(find_isomorphism(q, r).has_value()) << e;
  }
}

TEST(Quotient, ContractingZeroGivesTheIdeal) {
  for (const auto& e : {"Z12", "Z36", "Z2xZ4", "Z6xZ6"}) {
    const RingPtr r = ring(e);
    const auto L = enumerate_ideals(r);
    for (std::size_t i = 0; i + 1 < L->size(); ++i) {
      auto [q, f] = make_quotient(r, (*L)[i]);
      EXPECT_EQ(contraction(f, zero_ideal(q)), (*L)[i]) << e << " " << i;
    }
  }
}

TEST(Quotient, UnitIdealRejected) {
  const RingPtr r = make_zmod(6);
  EXPECT_THROW(make_quotient(r, unit_ideal(r)), Error);
}

TEST(Localization, Z12AtTwo) {
  const RingPtr z12 = make_zmod(12);
  const Element two = elem(z12, "2");
  const auto s = MultiplicativeSet::generated_by(z12, std::span(&two, 1));
  std::vector<std::string> names;
  s.members().for_each([&](std::size_t x) { names.push_back(z12->name(static_cast<Element>(x))); });
  EXPECT_EQ(names, (std::vector<std::string>{"1", "2", "4", "8"}));
  EXPECT_EQ(z12->name(localization_idempotent(s)), "4");
  auto [loc, f] = localize(s);
  EXPECT_EQ(loc->names(), (std::vector<std::string>{"0", "4", "8"}));
  EXPECT_TRUE(find_isomorphism(loc, make_zmod(3)).has_value());
}

TEST(Localization, Z6AtThree) {
  const RingPtr z6 = make_zmod(6);
  const Element three = elem(z6, "3");
  const auto s = MultiplicativeSet::generated_by(z6, std::span(&three, 1));
  EXPECT_EQ(z6->name(localization_idempotent(s)), "3");
  auto [loc, f] = localize(s);
  EXPECT_TRUE(find_isomorphism(loc, make_zmod(2)).has_value());
}

TEST(Localization, AtUnitsIsACopy) {
  const RingPtr r = ring("Z2xZ6");
  const auto s = MultiplicativeSet::generated_by(r, {});
  auto [loc, f] = localize(s);
  EXPECT_TRUE(f.is_injective());
  EXPECT_TRUE(find_isomorphism(loc, r).has_value());
}

TEST(Localization, ZeroInSRejected) {
  const RingPtr z4 = make_zmod(4);
  const Element two = elem(z4, "2");
  const auto s = MultiplicativeSet::generated_by(z4, std::span(&two, 1));
  try {
    localize(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInMultiplicativeSet);
  }
}

// Members of S become units and the kernel is the set killed by some s.
TEST(Localization, UniversalPropertiesOnEveryGenerator) {
  for (const auto& e : testing::small_rings()) {
    const RingPtr r = ring(e);
    for (Element x = 0; x < r->size(); ++x) {
      if (r->is_nilpotent(x)) continue;
      const auto s = MultiplicativeSet::generated_by(r, std::span(&x, 1));
      auto [loc, f] = localize(s);
      s.members().for_each([&](std::size_t m) { EXPECT_TRUE(loc->is_unit(f(static_cast<Element>(m)))) << e; });
      const Ideal ker = kernel_of(f);
      for (Element y = 0; y < r->size(); ++y) {
        bool killed = false;
        s.members().for_each([&](std::size_t m) { killed = killed || r->mul(y, static_cast<Element>(m)) == r->zero(); });
        EXPECT_EQ(ker.contains(y), killed) << e << " x=" << x << " y=" << y;
      }
    }
  }
}

TEST(Homs, Z12ToZ4IsReduction) {
  const auto homs = enumerate_homs(make_zmod(12), make_zmod(4));
  ASSERT_EQ(homs.size(), 1U);
  for (Element x = 0; x < 12; ++x) EXPECT_EQ(homs[0](x), x % 4);
}

TEST(Homs, NoneFromZ2ToZ3) { EXPECT_TRUE(enumerate_homs(make_zmod(2), make_zmod(3)).empty()); }

TEST(Homs, IdentityAlwaysPresent) {
  for (const auto& e : {"Z6", "Z2xZ2xZ2", "Z2xZ4", "Z12/(4)"}) {
    const RingPtr r = ring(e);
    std::vector<Element> id(r->size());
    for (Element x = 0; x < r->size(); ++x) id[x] = x;
    const auto homs = enumerate_homs(r, r);
    EXPECT_NE(std::find(homs.begin(), homs.end(), RingHom(r, r, id)), homs.end()) << e;
  }
}

// Oracle: every map with f(1)=1 checked pointwise, for tiny rings.
TEST(Homs, MatchBruteForceOnTinyRings) {
  const std::vector<std::string> rings = {"Z2", "Z3", "Z4", "Z6", "Z2xZ2", "Z2xZ3"};
  for (const auto& a : rings)
    for (const auto& b : rings) {
      const RingPtr s = ring(a), t = ring(b);
      std::size_t count = 0;
      std::vector<Element> m(s->size(), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == s->size()) {
          if (m[s->one()] != t->one()) return;
          for (Element x = 0; x < s->size(); ++x)
            for (Element y = 0; y < s->size(); ++y)
              if (m[s->add(x, y)] != t->add(m[x], m[y]) || m[s->mul(x, y)] != t->mul(m[x], m[y])) return;
          ++count;
          return;
        }
        for (Element v = 0; v < t->size(); ++v) {
          m[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
      const auto homs = enumerate_homs(s, t);
      EXPECT_EQ(homs.size(), count) << a << " -> " << b;
      for (const auto& f : homs) {
        for (Element x = 0; x < s->size(); ++x)
          for (Element y = 0; y < s->size(); ++y) {
            EXPECT_EQ(f(s->add(x, y)), t->add(f(x), f(y)));
            EXPECT_EQ(f(s->mul(x, y)), t->mul(f(x), f(y)));
          }
      }
    }
}

TEST(Homs, WorkCap) {
  Limits l;
  l.max_hom_work = 10;
  try {
    enumerate_homs(make_zmod(6), make_zmod(6), l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Homs, InvalidMapRejected) {
  const RingPtr z4 = make_zmod(4), z2 = make_zmod(2);
  EXPECT_THROW(RingHom(z2, z4, {0, 1}), Error);  // 1+1 = 0 but 1+1 = 2 in Z4
}

TEST(Jacobson, Examples) {
  EXPECT_TRUE(jacobson_radical(make_zmod(6)).is_zero());
  const RingPtr z4 = make_zmod(4);
  EXPECT_EQ(jacobson_radical(z4), gen(z4, {"2"}));
  for (long long p : {2, 3, 5, 7, 11}) EXPECT_TRUE(jacobson_radical(make_zmod(p)).is_zero());
}

// Oracle: intersection of the maximal ideals.
TEST(Jacobson, EqualsIntersectionOfMaximalIdeals) {
  for (const auto& e : testing::small_rings()) {
    const RingPtr r = ring(e);
    const auto L = enumerate_ideals(r);
    Ideal acc = unit_ideal(r);
    for (std::size_t i = 0; i < L->size(); ++i)
      if (classify(*L, i, SpectrumKind::Max)) acc = ideal_intersect(acc, (*L)[i]);
    EXPECT_EQ(jacobson_radical(r), acc) << e;
  }
}

TEST(Contraction, QuotientPreimage) {
  const RingPtr z12 = make_zmod(12), z4 = make_zmod(4);
  const RingHom f = enumerate_homs(z12, z4).front();
  EXPECT_EQ(contraction(f, gen(z4, {"2"})).members().to_vector(), (std::vector<std::size_t>{0, 2, 4, 6, 8, 10}));
  EXPECT_EQ(contraction(f, zero_ideal(z4)), kernel_of(f));
  EXPECT_EQ(contraction(f, unit_ideal(z4)), unit_ideal(z12));
}

TEST(Regular, ProductsOfFieldsOnly) {
  EXPECT_TRUE(is_von_neumann_regular(*make_zmod(6)));
  EXPECT_TRUE(is_von_neumann_regular(*ring("Z2xZ2xZ2")));
  EXPECT_TRUE(is_von_neumann_regular(*make_zmod(30)));
  EXPECT_FALSE(is_von_neumann_regular(*make_zmod(4)));
  EXPECT_FALSE(is_von_neumann_regular(*ring("Z2xZ4")));
}

}  // namespace
}  // namespace idealspace

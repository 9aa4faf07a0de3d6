#include <gtest/gtest.h>

#include <random>

#include "genpos/gqp.hpp"
#include "genpos/group_spec.hpp"
#include "oracle.hpp"

using namespace genpos;

namespace {

  // Brute force: members of H^{v1} meet H^{v2} counted over H directly from
  // the membership rule (u, h) in H^v iff u = v - v^h.
  std::size_t pair_meet_brute(GqpGroup const& g, Vec const& a, Vec const& b) {
    std::size_t n = 0;
    for (index_t h = 0; h < g.h().size(); ++h) {
      if (g.sub(a, g.action(a, h)) == g.sub(b, g.action(b, h))) {
        ++n;
      }
    }
    return n;
  }

  std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

}  // namespace

TEST(GqpGroup, Basics) {
  GqpGroup g(2, 3);
  EXPECT_EQ(g.c(), 2);
  EXPECT_EQ(g.h().order(), 8u);
  EXPECT_EQ(g.order(), 72u);
  EXPECT_EQ(g.h_maximals().size(), 3u);
  GqpGroup g3(3, 7);
  EXPECT_EQ(g3.c(), 2);
  EXPECT_EQ(g3.h().order(), 81u);
  EXPECT_EQ(g3.h_maximals().size(), 4u);
  GqpGroup g13(3, 13);
  EXPECT_EQ(g13.c(), 3);
  EXPECT_THROW(GqpGroup(3, 5), PreconditionError);
  EXPECT_THROW(GqpGroup(4, 5), PreconditionError);
  EXPECT_THROW(GqpGroup(7, 29), CapExceeded);
}

TEST(GqpGroup, FrattiniOfWreathIsKernelOfProduct) {
  GqpGroup g(3, 7);
  auto const& phi = g.h_frattini();
  EXPECT_EQ(phi.order(), 9u);
  for (index_t i = 0; i < g.h().size(); ++i) {
    auto const& pl = g.h().element(i).payload;
    bool expect    = pl[3] == 0 && (pl[0] + pl[1] + pl[2]) % 3 == 0;
    EXPECT_EQ(phi.contains(i), expect);
  }
}

TEST(GqpAction, IdentityAndHandExample) {
  GqpGroup g(2, 3);
  Vec      v{1, 0};
  EXPECT_EQ(g.action(v, 0), v);
  index_t h = g.h().index_of(Element({1, 0, 1}));
  EXPECT_EQ(g.action(v, h), (Vec{0, 2}));
}

TEST(GqpAction, RightActionAndLinear) {
  std::mt19937 rng(5);
  for (auto [p, q] : {std::pair{2, 5}, {3, 7}, {5, 11}}) {
    GqpGroup g(p, q);
    std::uniform_int_distribution<index_t>       ph(0, static_cast<index_t>(g.h().size() - 1));
    std::uniform_int_distribution<std::uint64_t> pv(0, g.v_size() - 1);
    std::uniform_int_distribution<int>           ps(0, q - 1);
    for (int t = 0; t < 10000; ++t) {
      index_t a = ph(rng), b = ph(rng);
      Vec     v = g.vector_at(pv(rng)), w = g.vector_at(pv(rng));
      ASSERT_EQ(g.action(v, g.h().product(a, b)), g.action(g.action(v, a), b));
      int s = ps(rng);
      Vec lin(p), lhs(p);
      for (int i = 0; i < p; ++i) {
        lin[i] = (v[i] * s + w[i]) % q;
      }
      auto av = g.action(v, a), aw = g.action(w, a);
      for (int i = 0; i < p; ++i) {
        lhs[i] = (av[i] * s + aw[i]) % q;
      }
      ASSERT_EQ(g.action(lin, a), lhs);
    }
  }
}

TEST(GqpAction, AgreesWithDenseConjugation) {
  // (0,h)^{-1} (v,1) (0,h) = (v^h, 1) inside the generic group.
  GqpGroup g(2, 3);
  auto     dense = construct("gqp:2,3");
  for (std::uint64_t code = 0; code < g.v_size(); ++code) {
    Vec v = g.vector_at(code);
    for (index_t h = 0; h < g.h().size(); ++h) {
      auto x  = dense.index_of(g.embed(v, 0));
      auto y  = dense.index_of(g.embed(Vec(2, 0), h));
      auto cj = dense.conjugate(x, y);
      ASSERT_EQ(dense.element(cj), g.embed(g.action(v, h), 0));
    }
  }
}

TEST(GqpAction, OrbitSpansV) {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 7}, {3, 13}, {5, 11}}) {
    EXPECT_TRUE(GqpGroup(p, q).v_irreducible()) << p << "," << q;
  }
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta({0, 0}, {1, 0}), (std::vector<int>{2}));
  EXPECT_TRUE(delta({0, 0, 0}, {1, 1, 1}).empty());
  EXPECT_EQ(delta({1, 2, 3}, {1, 5, 3}), (std::vector<int>{1, 3}));
  EXPECT_THROW(delta({1, 2}, {1, 2}), PreconditionError);
}

TEST(ConjMeet, Examples) {
  GqpGroup g2(2, 3);
  EXPECT_EQ(sym_order(g2, conj_meet(g2, {{1, 1}})), 8u);
  EXPECT_EQ(sym_order(g2, conj_meet(g2, {{0, 0}, {1, 0}})), 2u);
  GqpGroup g3(3, 7);
  EXPECT_EQ(sym_order(g3, conj_meet(g3, {{0, 0, 0}, {1, 0, 0}})), 9u);
}

TEST(ConjMeet, PairOrdersExhaustive) {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 7}}) {
    GqpGroup g(p, q);
    for (std::uint64_t a = 0; a < g.v_size(); ++a) {
      for (std::uint64_t b = 0; b < g.v_size(); ++b) {
        if (a == b) {
          continue;
        }
        Vec  va = g.vector_at(a), vb = g.vector_at(b);
        auto u  = delta(va, vb).size();
        auto n  = sym_order(g, conj_meet(g, {va, vb}));
        ASSERT_EQ(n, pair_meet_brute(g, va, vb));
        if (u > 0) {
          ASSERT_EQ(n, ipow(p, u));
        } else {
          ASSERT_LE(n, static_cast<std::uint64_t>(p));
        }
      }
    }
  }
}

TEST(ConjMeet, PairOrdersRandomAtFive) {
  GqpGroup     g(5, 11);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint64_t> pv(0, g.v_size() - 1);
  std::uniform_int_distribution<int>           coin(0, 2);
  int                                          done = 0;
  while (done < 1000) {
    Vec a = g.vector_at(pv(rng));
    Vec b = g.vector_at(pv(rng));
    // Bias toward shared coordinates so every |Delta| occurs.
    for (int i = 0; i < 5; ++i) {
      if (coin(rng) == 0) {
        b[i] = a[i];
      }
    }
    if (a == b) {
      continue;
    }
    auto u = delta(a, b).size();
    auto n = sym_order(g, conj_meet(g, {a, b}));
    if (u > 0) {
      ASSERT_EQ(n, ipow(5, u));
    } else {
      ASSERT_LE(n, 5u);
    }
    ++done;
  }
}

TEST(Symbolic, ComplementsArePairwiseDistinct) {
  for (auto [p, q] : {std::pair{2, 3}, {3, 7}, {5, 11}}) {
    GqpGroup g(p, q);
    EXPECT_TRUE(g.fixed_space(*g.h_all()).empty());
  }
}

TEST(Symbolic, EqualityUpToFixedVectors) {
  GqpGroup g(3, 7);
  auto     k = conj_meet(g, {{0, 0, 0}, {1, 0, 0}}).part;
  auto     basis = g.fixed_space(*k);
  ASSERT_FALSE(basis.empty());
  EXPECT_TRUE(sym_equal(g, affine({0, 0, 0}, k), affine(basis[0], k)));
  auto c = canonical(g, affine(basis[0], k));
  EXPECT_EQ(c.offset, (Vec{0, 0, 0}));
  EXPECT_FALSE(sym_equal(g, affine({0, 0, 0}, g.h_all()),
                         affine({1, 0, 0}, g.h_all())));
}

TEST(Symbolic, WholeGroupIsNeutral) {
  GqpGroup g(3, 7);
  auto     a = conj_meet(g, {{0, 1, 2}, {3, 1, 4}});
  EXPECT_TRUE(sym_equal(g, sym_intersect(g, full_v(g.h_all()), a), a));
}

TEST(Symbolic, MaximalSubgroupCounts) {
  EXPECT_EQ(maximal_subgroups_structural(GqpGroup(2, 3)).size(), 12u);
  EXPECT_EQ(maximal_subgroups_structural(GqpGroup(3, 7)).size(), 347u);
  EXPECT_EQ(maximal_subgroups_structural(GqpGroup(5, 11)).size(), 161057u);
}

TEST(Symbolic, MatchesDenseMaximalSubgroups) {
  GqpGroup g(2, 3);
  auto     dense = construct("gqp:2,3");
  auto     sym   = maximal_subgroups_structural(g);
  auto     gen   = maximal_subgroups(dense);
  ASSERT_EQ(sym.size(), gen.size());
  std::vector<Bitset> a, b;
  for (auto const& s : sym) {
    a.push_back(to_dense(g, s, dense));
  }
  for (auto const& s : gen) {
    b.push_back(s.members());
  }
  auto lex = [](Bitset const& x, Bitset const& y) { return lex_less(x, y); };
  std::sort(a.begin(), a.end(), lex);
  std::sort(b.begin(), b.end(), lex);
  EXPECT_EQ(a, b);
}

TEST(Symbolic, AgreesWithBitVectorsOnPairsAndTriples) {
  GqpGroup g(2, 3);
  auto     dense = construct("gqp:2,3");
  auto     sym   = maximal_subgroups_structural(g);
  std::vector<Bitset> bits;
  for (auto const& s : sym) {
    bits.push_back(to_dense(g, s, dense));
  }
  auto check = [&](SymbolicSubgroup const& s, Bitset const& b) {
    ASSERT_EQ(to_dense(g, s, dense), b);
    ASSERT_EQ(sym_order(g, s), b.count());
    for (index_t x = 0; x < dense.size(); ++x) {
      auto const& pl = dense.element(x).payload;
      Vec         u(pl.begin(), pl.begin() + 2);
      index_t     h = g.h().index_of(Element({pl[2], pl[3], pl[4]}));
      ASSERT_EQ(sym_contains(g, s, u, h), b.test(x));
    }
  };
  std::vector<std::pair<SymbolicSubgroup, Bitset>> pairs;
  for (std::size_t i = 0; i < sym.size(); ++i) {
    for (std::size_t j = i + 1; j < sym.size(); ++j) {
      auto s = sym_intersect(g, sym[i], sym[j]);
      auto b = bits[i] & bits[j];
      check(s, b);
      pairs.emplace_back(s, b);
      for (std::size_t k = j + 1; k < sym.size(); ++k) {
        check(sym_intersect(g, s, sym[k]), b & bits[k]);
      }
    }
  }
  for (auto const& [s1, b1] : pairs) {
    for (auto const& [s2, b2] : pairs) {
      ASSERT_EQ(sym_equal(g, s1, s2), b1 == b2);
      ASSERT_EQ(sym_equal(g, canonical(g, s1), s2), b1 == b2);
    }
  }
}

TEST(ConjugateFamily, FamilyIsInGeneralPosition) {
  for (auto [p, q] : {std::pair{2, 3}, {3, 7}, {3, 13}, {5, 11}}) {
    GqpGroup g(p, q);
    auto     fam = lemma33_family(g);
    ASSERT_EQ(fam.members.size(), static_cast<std::size_t>(p));
    EXPECT_TRUE(sym_general_position(g, fam.members).general_position);
    auto meet = fam.members[0];
    for (auto const& m : fam.members) {
      meet = sym_intersect(g, meet, m);
    }
    // For p >= 3 the conjugates meet trivially; at p = 2 the two of them
    // share the order-2 centralizer of e_1 - e_2.
    EXPECT_EQ(sym_order(g, meet), p == 2 ? 2u : 1u) << p << "," << q;
  }
}

TEST(ConjugateFamily, MeetOrderMatchesDenseConjugates) {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 7}}) {
    GqpGroup g(p, q);
    auto     dense = construct(g.spec());
    // The complement H is the set of elements with zero vector part.
    Bitset h(dense.size());
    for (index_t x = 0; x < dense.size(); ++x) {
      auto const& pl = dense.element(x).payload;
      h.set(x);
      for (int i = 0; i < p; ++i) {
        if (pl[i] != 0) {
          h.reset(x);
        }
      }
    }
    Bitset meet = Bitset::full(dense.size());
    for (int i = 0; i < p; ++i) {
      index_t t = dense.index_of(g.embed(g.unit(i), 0));
      Bitset  conj(dense.size());
      h.for_each([&](std::size_t x) {
        conj.set(dense.conjugate(static_cast<index_t>(x), t));
      });
      meet &= conj;
    }
    auto fam  = lemma33_family(g);
    auto smet = fam.members[0];
    for (auto const& m : fam.members) {
      smet = sym_intersect(g, smet, m);
    }
    EXPECT_EQ(sym_order(g, smet), meet.count()) << p << "," << q;
    EXPECT_EQ(to_dense(g, smet, dense), meet);
  }
}

TEST(ConjugateFamily, DenseCrossCheckAtTwo) {
  GqpGroup              g(2, 3);
  auto                  dense = construct("gqp:2,3");
  std::vector<Subgroup> subs;
  for (auto const& m : lemma33_family(g).members) {
    subs.emplace_back(dense, to_dense(g, m, dense));
  }
  EXPECT_TRUE(is_general_position(subs).general_position);
}

TEST(MdGqp, Values) {
  auto r2 = md_gqp(GqpGroup(2, 3));
  EXPECT_EQ(r2.value, 3u);
  EXPECT_EQ(r2.status, Status::exact);
  auto r7 = md_gqp(GqpGroup(3, 7));
  EXPECT_EQ(r7.value, 3u);
  EXPECT_EQ(r7.status, Status::exact);
}

TEST(MdGqp, FamilyVerifiesDensely) {
  GqpGroup              g(2, 3);
  auto                  dense = construct("gqp:2,3");
  auto                  r     = md_gqp(g);
  std::vector<Subgroup> subs;
  for (auto const& m : r.family.members) {
    subs.emplace_back(dense, to_dense(g, m, dense));
  }
  EXPECT_TRUE(is_general_position(subs).general_position);
  EXPECT_EQ(md_search(dense).value, r.value);
}

TEST(MdGqp, SymmetryReductionIsSound) {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 7}}) {
    GqpGroup g(p, q);
    auto     with    = md_gqp(g, {Budget{}, true});
    auto     without = md_gqp(g, {Budget{}, false});
    EXPECT_EQ(with.value, without.value) << p << "," << q;
    EXPECT_EQ(without.status, Status::exact);
  }
}

TEST(MdGqp, BudgetGivesLowerBound) {
  auto r = md_gqp(GqpGroup(5, 11), {Budget::seconds(0.5), true});
  EXPECT_GE(r.value, 5u);
  EXPECT_EQ(r.status, Status::lower_bound);
}

TEST(Invariants, StructuralM) {
  for (auto [p, q] : {std::pair{2, 3}, {3, 7}, {3, 13}, {5, 11}}) {
    EXPECT_EQ(GqpGroup(p, q).m_structural(), 3u);
  }
  EXPECT_EQ(m_soluble(construct("gqp:2,3")), 3u);
}

TEST(Invariants, BaseSubgroupCertificate) {
  auto c = base_certificate(GqpGroup(3, 7));
  EXPECT_EQ(c.chief_value, 6u);
  ASSERT_TRUE(c.sequence_verified.has_value());
  EXPECT_TRUE(*c.sequence_verified);
  EXPECT_EQ(c.sequence_length, 6u);
  auto big = base_certificate(GqpGroup(5, 11));
  EXPECT_EQ(big.chief_value, 10u);
  EXPECT_FALSE(big.sequence_verified.has_value());
}

TEST(Invariants, ReportAtTwo) {
  auto r = invariants_gqp(GqpGroup(2, 3));
  EXPECT_EQ(r.m.value, 3u);
  EXPECT_EQ(r.md.value, 3u);
  EXPECT_EQ(r.i.value, 4u);
  EXPECT_EQ(r.m.status, Status::exact);
  EXPECT_EQ(r.md.status, Status::exact);
  EXPECT_EQ(r.i.status, Status::exact);
}

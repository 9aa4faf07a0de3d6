#include <gtest/gtest.h>

#include <set>

#include "genpos/group_spec.hpp"
#include "genpos/subgroup.hpp"
#include "oracle.hpp"

using namespace genpos;

namespace {

  oracle::Set as_set(Subgroup const& s) {
    oracle::Set out(s.parent().size(), false);
    s.members().for_each([&](std::size_t i) { out[i] = true; });
    return out;
  }

  Element perm(std::vector<int> one_based) {
    std::vector<std::int32_t> img;
    for (int x : one_based) {
      img.push_back(x - 1);
    }
    return Element(img);
  }

  bool closed(Subgroup const& s) {
    auto const& g = s.parent();
    auto        idx = s.indices();
    for (auto a : idx) {
      if (!s.contains(g.inverse(a))) {
        return false;
      }
      for (auto b : idx) {
        if (!s.contains(g.product(a, b))) {
          return false;
        }
      }
    }
    return s.contains(index_t{0});
  }

  std::vector<std::string> const kSmall = {
      "cyclic:12",      "abelian:2,2,2",  "abelian:2,4",  "sym:3",
      "sym:4",          "alt:4",          "dihedral:4",   "dihedral:6",
      "quaternion:8",   "heis:3",         "fieldmod:2^2,1",
      "metacyclic:7,3,2", "direct(sym:3,cyclic:2)", "abelian:3,3"};

}  // namespace

TEST(Closure, Examples) {
  auto s3 = construct("sym:3");
  EXPECT_TRUE(closure(s3, {}).is_trivial());
  EXPECT_EQ(closure(s3, {perm({2, 1, 3}), perm({2, 3, 1})}).order(), 6u);
  auto v4 = construct("abelian:2,2");
  EXPECT_EQ(closure(v4, {Element({1, 0})}).order(), 2u);
}

TEST(Closure, MatchesSaturationOracle) {
  for (auto spec : {"sym:4", "gqp:2,3", "dihedral:6", "quaternion:16"}) {
    auto g = construct(spec);
    for (index_t a = 0; a < g.size(); a += 5) {
      for (index_t b = 1; b < g.size(); b += 7) {
        auto s = closure_of(g, {a, b});
        ASSERT_EQ(as_set(s), oracle::closure(g, {a, b})) << spec;
        ASSERT_TRUE(closed(s));
        ASSERT_EQ(closure_of(g, s.generators()), s);
      }
    }
  }
}

TEST(MeetAndConjugate, Basics) {
  auto g = construct("sym:4");
  auto a = closure_of(g, {3, 7});
  EXPECT_EQ(intersect(a, a), a);
  EXPECT_EQ(conjugate(a, index_t{0}), a);
  for (index_t x = 0; x < g.size(); ++x) {
    auto c = conjugate(a, x);
    EXPECT_EQ(c.order(), a.order());
    EXPECT_TRUE(closed(c));
  }
  auto other = construct("sym:4");
  EXPECT_THROW(intersect(a, whole_group(other)), ParentMismatch);
}

TEST(AllSubgroups, CountsAndOracle) {
  EXPECT_EQ(all_subgroups(construct("cyclic:7")).size(), 2u);
  EXPECT_EQ(all_subgroups(construct("sym:3")).size(), 6u);
  EXPECT_EQ(all_subgroups(construct("abelian:2,2")).size(), 5u);
  EXPECT_EQ(all_subgroups(construct("sym:4")).size(), 30u);
  EXPECT_EQ(all_subgroups(construct("alt:5")).size(), 59u);
  for (auto const& spec : kSmall) {
    auto g    = construct(spec);
    auto subs = all_subgroups(g);
    std::set<oracle::Set> mine;
    for (auto const& s : subs) {
      mine.insert(as_set(s));
      ASSERT_EQ(g.order() % s.order(), 0u) << spec;
    }
    EXPECT_EQ(mine.size(), subs.size()) << spec;
    EXPECT_EQ(mine, oracle::subgroups(g)) << spec;
  }
  EXPECT_THROW(all_subgroups(construct("sym:6")), CapExceeded);
}

TEST(AllSubgroups, ElementaryAbelianCount) {
  // Gaussian binomial sum for F_2^5.
  EXPECT_EQ(all_subgroups(construct("abelian:2,2,2,2,2")).size(), 374u);
}

TEST(Maximal, ExamplesAndOracle) {
  auto c12 = maximal_subgroups(construct("cyclic:12"));
  ASSERT_EQ(c12.size(), 2u);
  std::multiset<std::uint64_t> orders{c12[0].order(), c12[1].order()};
  EXPECT_EQ(orders, (std::multiset<std::uint64_t>{4, 6}));
  auto v4 = maximal_subgroups(construct("abelian:2,2"));
  EXPECT_EQ(v4.size(), 3u);
  EXPECT_EQ(maximal_subgroups(construct("gqp:2,3")).size(), 12u);
  for (auto const& spec : kSmall) {
    auto g = construct(spec);
    std::set<oracle::Set> mine;
    for (auto const& m : maximal_subgroups(g)) {
      mine.insert(as_set(m));
    }
    auto o = oracle::maximal(g);
    EXPECT_EQ(mine, std::set<oracle::Set>(o.begin(), o.end())) << spec;
  }
}

TEST(Maximal, CanonicallyOrdered) {
  auto ms = maximal_subgroups(construct("sym:4"));
  for (std::size_t i = 1; i < ms.size(); ++i) {
    EXPECT_TRUE(canonical_less(ms[i - 1], ms[i]));
  }
}

TEST(Maximal, PGroupMethodAgreesWithLattice) {
  for (auto spec : {"dihedral:8", "quaternion:16", "heis:3", "wreath:3",
                    "abelian:2,2,4", "abelian:3,9", "wreath:2"}) {
    auto g  = construct(spec);
    auto a  = maximal_subgroups_pgroup(whole_group(g));
    auto b  = maximal_among(all_subgroups(g), whole_group(g));
    EXPECT_EQ(a, b) << spec;
  }
}

TEST(Maximal, CrossValidatedAgainstAllSubgroups) {
  // Every proper subgroup lies in some maximal one, and no maximal one lies
  // in another proper subgroup.
  for (auto spec : {"direct(sym:3,sym:3)", "direct(alt:4,cyclic:2)",
                    "metacyclic:13,4,5", "dihedral:15", "gqp:2,3"}) {
    auto g    = construct(spec);
    auto subs = all_subgroups(g);
    auto ms   = maximal_subgroups(g);
    for (auto const& s : subs) {
      if (s.is_whole()) {
        continue;
      }
      bool inside = false;
      for (auto const& m : ms) {
        inside = inside || s.is_subgroup_of(m);
        if (m.is_subgroup_of(s) && !(m == s)) {
          FAIL() << spec;
        }
      }
      EXPECT_TRUE(inside) << spec;
    }
  }
}

TEST(Frattini, Examples) {
  EXPECT_TRUE(frattini(construct("abelian:2,2")).is_trivial());
  EXPECT_EQ(frattini(construct("dihedral:4")).order(), 2u);
  EXPECT_EQ(frattini(construct("quaternion:8")).order(), 2u);
  EXPECT_EQ(frattini(construct("cyclic:8")).order(), 4u);
  EXPECT_TRUE(frattini(construct("sym:4")).is_trivial());
}

TEST(Frattini, WreathKernelOfProductMap) {
  // In C_3 wr C_3 the Frattini subgroup is the base elements whose
  // exponents sum to zero.
  auto h   = construct("wreath:3");
  auto phi = frattini(h);
  EXPECT_EQ(phi.order(), 9u);
  for (auto const& e : phi.elements()) {
    EXPECT_EQ(e.payload[3], 0);
    EXPECT_EQ((e.payload[0] + e.payload[1] + e.payload[2]) % 3, 0);
  }
  EXPECT_EQ(frattini_pgroup(whole_group(h)), phi);
}

TEST(Frattini, NonGenerators) {
  // Dropping a Frattini element from a generating set never matters.
  for (auto spec : {"dihedral:4", "quaternion:8", "cyclic:8", "heis:3",
                    "direct(cyclic:4,sym:3)", "abelian:2,4"}) {
    auto g   = construct(spec);
    auto phi = frattini(g);
    for (index_t a = 0; a < g.size(); ++a) {
      for (index_t b = a; b < g.size(); ++b) {
        for (auto x : phi.indices()) {
          if (closure_of(g, {a, b, x}).is_whole()) {
            ASSERT_TRUE(closure_of(g, {a, b}).is_whole()) << spec;
          }
        }
      }
    }
  }
}

TEST(Normal, MinimalNormalAndQuotient) {
  auto s3 = construct("sym:3");
  auto mn = minimal_normal_subgroups(s3);
  ASSERT_EQ(mn.size(), 1u);
  EXPECT_EQ(mn[0].order(), 3u);
  EXPECT_EQ(minimal_normal_subgroups(construct("abelian:2,2")).size(), 3u);
  auto q = quotient(s3, mn[0]);
  EXPECT_EQ(q.order(), 2u);
  auto a3 = closure(s3, {perm({2, 3, 1})});
  EXPECT_THROW(quotient(s3, closure(s3, {perm({2, 1, 3})})), PreconditionError);
  (void)a3;
}

TEST(Normal, NormalSubgroupsMatchOracle) {
  for (auto const& spec : kSmall) {
    auto g = construct(spec);
    std::set<oracle::Set> mine;
    for (auto const& n : normal_subgroups(g)) {
      mine.insert(as_set(n));
    }
    std::set<oracle::Set> want;
    for (auto const& s : oracle::subgroups(g)) {
      if (oracle::is_normal(g, s)) {
        want.insert(s);
      }
    }
    EXPECT_EQ(mine, want) << spec;
  }
}

TEST(Normal, QuotientIsHomomorphic) {
  for (auto spec : {"sym:4", "dihedral:6", "gqp:2,3", "quaternion:16"}) {
    auto g = construct(spec);
    for (auto const& n : normal_subgroups(g)) {
      auto q = quotient(g, n);
      ASSERT_EQ(q.order() * n.order(), g.order());
      for (index_t a = 0; a < g.size(); a += 3) {
        for (index_t b = 0; b < g.size(); b += 5) {
          ASSERT_EQ(q.map(g.product(a, b)),
                    q.group.product(q.map(a), q.map(b)));
        }
      }
      EXPECT_EQ(q.preimage(q.image(n)), n);
    }
  }
}

TEST(ChiefSeries, Examples) {
  auto c4 = chief_series(construct("cyclic:4"));
  ASSERT_EQ(c4.factors.size(), 2u);
  EXPECT_EQ(c4.factors[0].order, 2u);
  EXPECT_EQ(c4.factors[1].order, 2u);
  EXPECT_TRUE(c4.factors[0].complemented);
  EXPECT_FALSE(c4.factors[1].complemented);

  auto s4 = chief_series(construct("sym:4"));
  std::vector<std::uint64_t> orders;
  for (auto const& f : s4.factors) {
    orders.push_back(f.order);
    EXPECT_TRUE(f.complemented);
  }
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{2, 3, 4}));
  EXPECT_EQ(chief_series(construct("gqp:2,3")).complemented_count(), 3u);
}

TEST(ChiefSeries, StructuralInvariants) {
  for (auto const& spec : kSmall) {
    auto g  = construct(spec);
    auto cs = chief_series(g);
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < cs.factors.size(); ++i) {
      prod *= cs.factors[i].order;
      EXPECT_NE(prime_power_base(cs.factors[i].order), 0u) << spec;
      EXPECT_TRUE(is_normal(cs.chain[i]));
      // nothing normal strictly between consecutive terms
      for (auto const& n : normal_subgroups(g)) {
        bool between = cs.chain[i + 1].is_subgroup_of(n)
                       && n.is_subgroup_of(cs.chain[i])
                       && n.order() != cs.chain[i].order()
                       && n.order() != cs.chain[i + 1].order();
        EXPECT_FALSE(between) << spec;
      }
      EXPECT_EQ(cs.factors[i].complemented,
                complemented_by_search(g, cs.chain[i], cs.chain[i + 1]))
          << spec << " factor " << i;
    }
    EXPECT_EQ(prod, g.order()) << spec;
  }
}

TEST(ChiefSeries, ComplementedCountIsSeriesIndependent) {
  for (auto spec : {"abelian:2,2,2", "direct(sym:3,sym:3)", "dihedral:12",
                    "direct(alt:4,cyclic:2)", "abelian:2,4,3",
                    "fieldmod:2^2,2", "gqp:2,3"}) {
    auto g    = construct(spec);
    auto want = chief_series(g).complemented_count();
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      EXPECT_EQ(chief_series(g, seed).complemented_count(), want) << spec;
    }
  }
}

TEST(Export, DotAndSerialization) {
  auto g   = construct("sym:3");
  auto dot = lattice_dot(g);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  auto a3 = closure(g, {perm({2, 3, 1})});
  EXPECT_EQ(serialize(a3),
            (std::vector<std::string>{"()", "(1 2 3)", "(1 3 2)"}));
}

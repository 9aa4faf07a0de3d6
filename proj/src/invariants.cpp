#include "genpos/invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "genpos/gqp.hpp"
#include "genpos/group_spec.hpp"

namespace genpos {

  std::string to_string(Status s) {
    return s == Status::exact ? "exact" : "lower_bound";
  }

  Budget Budget::seconds(double s) {
    Budget b;
    b.deadline_ = clock::now()
                  + std::chrono::duration_cast<clock::duration>(
                      std::chrono::duration<double>(s));
    return b;
  }

  bool Budget::expired() const {
    return deadline_ && clock::now() >= *deadline_;
  }

  bool is_irredundant(FiniteGroup const& g, std::vector<index_t> const& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      std::vector<index_t> rest;
      for (std::size_t j = 0; j < seq.size(); ++j) {
        if (j != i) {
          rest.push_back(seq[j]);
        }
      }
      if (closure_of(g, rest).contains(seq[i])) {
        return false;
      }
    }
    return true;
  }

  bool is_irredundant(FiniteGroup const& g, std::vector<Element> const& seq) {
    std::vector<index_t> idx;
    for (auto const& e : seq) {
      idx.push_back(g.index_of(e));
    }
    return is_irredundant(g, idx);
  }

  namespace {

    struct Candidates {
      std::vector<index_t> elements;
      // leader[c]: cands[c] comes first in its conjugacy class under k.
      std::vector<bool> leader;
    };

    // One generator (the least index) per nontrivial cyclic subgroup of k.
    // Large orders first. Elements of small order tend to live in proper
    // normal subgroups, and once only those are left the tail bound in
    // MSearch cuts the branch. Within an order, class leaders come first.
    Candidates cyclic_representatives(Subgroup const& k) {
      FiniteGroup const&                             g = k.parent();
      std::unordered_map<Bitset, index_t, BitsetHash> gen_of;
      std::vector<index_t>                           out;
      auto cyclic = [&](index_t x) {
        Bitset  c(g.size());
        index_t y = x;
        while (y != 0) {
          c.set(y);
          y = g.product(y, x);
        }
        c.set(0);
        return c;
      };
      for (index_t x : k.indices()) {
        if (x != 0 && gen_of.emplace(cyclic(x), x).second) {
          out.push_back(x);
        }
      }
      std::unordered_map<index_t, bool> lead;
      for (index_t x : out) {
        bool first = true;
        for (index_t h : k.indices()) {
          if (gen_of.at(cyclic(g.conjugate(x, h))) < x) {
            first = false;
            break;
          }
        }
        lead[x] = first;
      }
      std::stable_sort(out.begin(), out.end(), [&](index_t a, index_t b) {
        auto oa = g.element_order(a), ob = g.element_order(b);
        return oa != ob ? oa > ob : lead[a] > lead[b];
      });
      Candidates c{out, {}};
      for (index_t x : out) {
        c.leader.push_back(lead[x]);
      }
      return c;
    }

    // Images of an irredundant generating sequence stay irredundant modulo
    // Phi, so the partial closures times Phi strictly increase and the
    // remaining length is at most Omega(|top : cur Phi|).
    struct MSearch {
      Subgroup const&      top;
      std::vector<index_t> cands;
      std::vector<bool>    leader;
      // tail[c] = <cands[c..]>; later picks all come from there.
      std::vector<Subgroup> const& tail;
      Budget               budget;
      Bitset               phi;
      std::uint64_t        phi_order;
      unsigned             best = 0;
      std::vector<index_t> best_seq;
      std::vector<index_t> seq;
      bool                 timed_out = false;
      // Nonzero: give up quietly after this many nodes.
      std::uint64_t        node_cap  = 0;
      std::uint64_t        nodes     = 0;

      std::uint64_t times_phi(Subgroup const& s) const {
        return s.order() * phi_order / s.members().count_and(phi);
      }

      void run(std::size_t from, Subgroup const& cur,
               std::vector<Subgroup> const& leave) {
        std::uint64_t const cur_phi = times_phi(cur);
        for (std::size_t c = from; c < cands.size(); ++c) {
          if (timed_out || budget.expired()) {
            timed_out = true;
            return;
          }
          if (node_cap != 0 && nodes >= node_cap) {
            return;
          }
          index_t const x = cands[c];
          // A conjugate of the finished set starts with a class leader.
          if (cur.contains(x) || (seq.empty() && !leader[c])) {
            continue;
          }
          Subgroup       next  = extend(cur, x);
          unsigned const k     = static_cast<unsigned>(seq.size()) + 1;
          bool const     whole = next.order() == top.order();
          if (whole) {
            if (k <= best) {
              continue;
            }
          } else {
            std::uint64_t const with_phi = times_phi(next);
            if (with_phi == cur_phi
                || k + omega(top.order() / with_phi) <= best) {
              continue;
            }
            Subgroup const& rest = tail[c + 1];
            if (rest.order() != top.order()
                && join(next, rest).order() != top.order()) {
              continue;
            }
          }
          std::vector<Subgroup> nl;
          nl.reserve(leave.size() + 1);
          bool ok = true;
          for (std::size_t i = 0; i < leave.size(); ++i) {
            Subgroup li = extend(leave[i], x);
            if (li.contains(seq[i])) {
              ok = false;
              break;
            }
            nl.push_back(std::move(li));
          }
          if (!ok) {
            continue;
          }
          nl.push_back(cur);
          seq.push_back(x);
          ++nodes;
          if (whole) {
            best     = k;
            best_seq = seq;
          } else {
            run(c + 1, next, nl);
          }
          seq.pop_back();
        }
      }
    };

    std::uint64_t ratio_omega(std::uint64_t a, std::uint64_t b) {
      return omega(a / b);
    }

    struct GPSearch {
      std::vector<Bitset> pool;
      std::uint64_t       base_order;
      Budget              budget;
      unsigned            best = 0;
      std::vector<std::size_t> best_seq;
      std::vector<std::size_t> seq;
      bool                timed_out = false;

      void run(std::size_t from, Bitset const& d, std::size_t dcount,
               std::vector<Bitset> const& leave) {
        unsigned const k = static_cast<unsigned>(seq.size()) + 1;
        for (std::size_t c = from; c < pool.size(); ++c) {
          if (timed_out || budget.expired()) {
            timed_out = true;
            return;
          }
          Bitset            nd = d & pool[c];
          std::size_t const nc = nd.count();
          if (nc == dcount) {
            continue;
          }
          bool const can_extend = k + ratio_omega(nc, base_order) > best;
          if (k <= best && !can_extend) {
            continue;
          }
          std::vector<Bitset> nl;
          nl.reserve(leave.size() + 1);
          bool ok = true;
          for (auto const& l : leave) {
            Bitset li = l & pool[c];
            if (li.count() == nc) {
              ok = false;
              break;
            }
            nl.push_back(std::move(li));
          }
          if (!ok) {
            continue;
          }
          nl.push_back(d);
          seq.push_back(c);
          if (k > best) {
            best     = k;
            best_seq = seq;
          }
          if (can_extend) {
            run(c + 1, nd, nc, nl);
          }
          seq.pop_back();
        }
      }
    };

  }  // namespace

  MResult m_bruteforce(Subgroup const& k, Budget budget) {
    MResult out;
    if (k.is_trivial()) {
      out.witness.generates_parent = true;
      return out;
    }
    auto          phi   = frattini(k);
    auto [cands, leader] = cyclic_representatives(k);
    std::uint64_t top   = omega(k.order() / phi.order());
    auto tails = [&](std::vector<index_t> const& order) {
      std::vector<Subgroup> t(order.size() + 1, trivial_subgroup(k.parent()));
      for (std::size_t c = order.size(); c-- > 0;) {
        t[c] = extend(t[c + 1], order[c]);
      }
      return t;
    };
    auto finish = [&](MSearch const& s, Status st) {
      out.value                    = static_cast<unsigned>(s.best_seq.size());
      out.status                   = st;
      out.witness.elements         = s.best_seq;
      out.witness.generates_parent = !s.best_seq.empty();
      return out;
    };
    // Small orders first finds long sequences quickly; a capped run of that
    // gives a floor, so the exact passes below only have to refute.
    std::vector<index_t> rev(cands.rbegin(), cands.rend());
    auto                 rev_tail = tails(rev);
    MSearch              floor{k,  rev,   std::vector<bool>(rev.size(), true),
                  rev_tail,      budget, phi.members(), phi.order(), 0, {}, {},
                  false,         3000,   0};
    floor.run(0, trivial_subgroup(k.parent()), {});
    if (floor.timed_out) {
      return finish(floor, Status::lower_bound);
    }
    if (floor.best == top) {
      return finish(floor, Status::exact);
    }
    // Passes with a falling target t from Omega(|k : Phi(k)|) down to just
    // above the floor. A pass only keeps branches that can still reach
    // length t, so the first pass that finds anything is exact.
    auto tail = tails(cands);
    for (unsigned t = static_cast<unsigned>(top); t > floor.best; --t) {
      MSearch s{k,     cands, leader, tail,  budget, phi.members(), phi.order(),
                t - 1, {},    {},     false, 0,      0};
      s.run(0, trivial_subgroup(k.parent()), {});
      if (s.timed_out) {
        return finish(s.best_seq.empty() ? floor : s, Status::lower_bound);
      }
      if (!s.best_seq.empty()) {
        return finish(s, Status::exact);
      }
    }
    if (floor.best_seq.empty()) {
      throw std::logic_error(k.parent().spec() + ": no generating sequence found");
    }
    return finish(floor, Status::exact);
  }

  MResult m_bruteforce(FiniteGroup const& g, Budget budget) {
    if (g.order() > kBruteCap) {
      throw CapExceeded(g.spec() + ": order " + std::to_string(g.order())
                        + " exceeds the brute-force cap "
                        + std::to_string(kBruteCap));
    }
    return m_bruteforce(whole_group(g), budget);
  }

  unsigned m_soluble(FiniteGroup const& g) {
    auto spec = parse_group_spec(g.spec());
    if (spec.kind == "gqp") {
      return GqpGroup(static_cast<int>(spec.args[0]),
                      static_cast<int>(spec.args[1]))
          .m_structural();
    }
    if (!is_soluble(g)) {
      throw PreconditionError(g.spec() + ": group is not soluble");
    }
    return chief_series(g).complemented_count();
  }

  IResult i_bruteforce(FiniteGroup const& g, Budget budget) {
    IResult out;
    if (g.order() == 1) {
      out.witness.generates_parent = true;
      out.subgroup                 = {0};
      return out;
    }
    auto subs = all_subgroups(g);
    std::reverse(subs.begin(), subs.end());
    std::unordered_set<Bitset, BitsetHash> seen;
    bool                                   first = true;
    for (auto const& s : subs) {
      if (seen.count(s.members())) {
        continue;
      }
      for (index_t x = 0; x < g.size(); ++x) {
        seen.insert(conjugate(s, x).members());
      }
      // Irredundant sequences of s are at most Omega(|s|) long.
      if (!first && omega(s.order()) <= out.value) {
        continue;
      }
      if (budget.expired()) {
        out.status = Status::lower_bound;
        break;
      }
      auto r = m_bruteforce(s, budget);
      if (r.status == Status::lower_bound) {
        out.status = Status::lower_bound;
      }
      if (first || r.value > out.value) {
        out.value    = r.value;
        out.subgroup = s.indices();
        out.witness  = r.witness;
        out.witness.generates_parent = s.is_whole();
      }
      first = false;
    }
    return out;
  }

  bool general_position_by_subsets(std::vector<Subgroup> const& family) {
    std::size_t const k = family.size();
    if (k > 20) {
      throw CapExceeded("subset test limited to 20 members");
    }
    FiniteGroup const&                     g = family.front().parent();
    std::unordered_set<Bitset, BitsetHash> meets;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Bitset m = Bitset::full(g.size());
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1u) {
          m &= family[i].members();
        }
      }
      if (!meets.insert(std::move(m)).second) {
        return false;
      }
    }
    return true;
  }

  GPCheck is_general_position(std::vector<Subgroup> const& family) {
    if (family.empty()) {
      throw PreconditionError("general position needs a non-empty family");
    }
    FiniteGroup const& g = family.front().parent();
    for (auto const& s : family) {
      if (!s.parent().same_as(g)) {
        throw ParentMismatch();
      }
    }
    GPCheck out;
    out.family.subgroups = family;
    Bitset all = Bitset::full(g.size());
    for (auto const& s : family) {
      all &= s.members();
    }
    out.general_position = true;
    for (std::size_t i = 0; i < family.size(); ++i) {
      Bitset rest = Bitset::full(g.size());
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (j != i) {
          rest &= family[j].members();
        }
      }
      rest.subtract(all);
      std::size_t w = rest.find_first();
      if (w == rest.size()) {
        out.general_position = false;
        out.family.witnesses.clear();
        break;
      }
      out.family.witnesses.push_back(static_cast<index_t>(w));
    }
    if (family.size() <= 12
        && general_position_by_subsets(family) != out.general_position) {
      throw std::logic_error("general position implementations disagree");
    }
    return out;
  }

  MdResult gp_search(Subgroup const& top, std::vector<Subgroup> const& pool,
                     Budget budget) {
    MdResult out;
    if (pool.empty()) {
      return out;
    }
    GPSearch s;
    Bitset   base = top.members();
    for (auto const& m : pool) {
      s.pool.push_back(m.members());
      base &= m.members();
    }
    s.base_order = base.count();
    s.budget     = budget;
    s.run(0, top.members(), top.order(), {});
    out.value  = s.best;
    out.status = s.timed_out ? Status::lower_bound : Status::exact;
    std::vector<Subgroup> fam;
    for (auto i : s.best_seq) {
      fam.push_back(pool[i]);
    }
    if (!fam.empty()) {
      out.family = is_general_position(fam).family;
    }
    return out;
  }

  MdResult md_search(FiniteGroup const& g, Budget budget) {
    if (g.order() == 1) {
      return {};
    }
    return gp_search(whole_group(g), maximal_subgroups(g), budget);
  }

  Lemma22Report lemma22_check(FiniteGroup const& g) {
    auto spec = parse_group_spec(g.spec());
    if (spec.kind != "fieldmod") {
      throw PreconditionError(g.spec() + ": lemma22_check needs a fieldmod group");
    }
    if (g.order() > kLatticeCap) {
      throw CapExceeded(g.spec() + ": order exceeds the lattice cap");
    }
    int const n = static_cast<int>(spec.args[2]);
    Lemma22Report rep;
    rep.dim = static_cast<unsigned>(n);

    Bitset  vbits(g.size());
    for (index_t i = 0; i < g.size(); ++i) {
      if (g.element(i).payload[n] == 0) {
        vbits.set(i);
      }
    }
    Subgroup const v(g, vbits);
    std::vector<std::int32_t> hp(n + 1, 0);
    hp[n] = 1;
    index_t const  h  = g.order() == v.order() ? 0 : g.index_of(Element(hp));
    Subgroup const hh = closure_of(g, {h});
    std::vector<Subgroup> hconj;
    for (index_t x : v.indices()) {
      auto c = conjugate(hh, x);
      if (std::find(hconj.begin(), hconj.end(), c) == hconj.end()) {
        hconj.push_back(std::move(c));
      }
    }

    std::vector<Subgroup> supp;
    for (auto const& m : maximal_subgroups(g)) {
      if (!v.is_subgroup_of(m)) {
        supp.push_back(m);
      }
    }
    rep.supplements = supp.size();

    auto check_shape = [&](Bitset const& meet, std::string const& label) {
      Subgroup const i(g, meet);
      Subgroup const w = intersect(i, v);
      if (h != 0 && !(conjugate(w, h) == w)) {
        rep.violations.push_back(label + ": W is not an F-subspace");
      }
      if (i.order() == w.order()) {
        return;
      }
      for (auto const& c : hconj) {
        if (c.is_subgroup_of(i) && i.order() == w.order() * c.order()) {
          return;
        }
      }
      rep.violations.push_back(label + ": meet is not W x| K");
    };

    std::vector<std::size_t> fam;
    std::function<void(std::size_t, Bitset const&, std::vector<Bitset> const&)>
        rec = [&](std::size_t from, Bitset const& d,
                  std::vector<Bitset> const& leave) {
          for (std::size_t c = from; c < supp.size(); ++c) {
            Bitset nd = d & supp[c].members();
            std::size_t const nc = nd.count();
            if (nc == d.count()) {
              continue;
            }
            std::vector<Bitset> nl;
            bool                ok = true;
            for (auto const& l : leave) {
              Bitset li = l & supp[c].members();
              if (li.count() == nc) {
                ok = false;
                break;
              }
              nl.push_back(std::move(li));
            }
            if (!ok) {
              continue;
            }
            nl.push_back(d);
            fam.push_back(c);
            unsigned const r = static_cast<unsigned>(fam.size());
            ++rep.families;
            rep.largest = std::max(rep.largest, r);
            std::string label = "family";
            for (auto f : fam) {
              label += " " + std::to_string(f);
            }
            check_shape(nd, label);
            if (r > rep.dim + 1) {
              rep.violations.push_back(label + ": size exceeds dim(V)+1");
            }
            if (r == rep.dim + 1) {
              bool structure = false;
              if (nc == 1) {
                for (auto const& l : nl) {
                  for (auto const& c2 : hconj) {
                    if (l == c2.members()) {
                      structure = true;
                    }
                  }
                }
              }
              if (!structure) {
                rep.violations.push_back(label
                                         + ": no (r-1)-subfamily meets in a "
                                           "conjugate of <h> over a trivial meet");
              }
            }
            if (r < rep.dim + 2) {
              rec(c + 1, nd, nl);
            }
            fam.pop_back();
          }
        };
    rec(0, Bitset::full(g.size()), {});
    return rep;
  }

  Lemma24Report lemma24_check(FiniteGroup const& h, bool meet_irreducible_only,
                              Budget budget) {
    Subgroup const whole = whole_group(h);
    if (!is_abelian(whole)) {
      throw PreconditionError(h.spec() + ": lemma24_check needs an abelian group");
    }
    Lemma24Report rep;
    auto          subs = all_subgroups(h);
    std::vector<Subgroup> pool;
    for (auto const& s : subs) {
      if (s.is_whole()) {
        continue;
      }
      if (meet_irreducible_only) {
        // Unique minimal overgroup in an abelian group: H/S is a cyclic
        // group of prime-power order.
        std::uint64_t const idx = h.order() / s.order();
        if (prime_power_base(idx) == 0) {
          continue;
        }
        bool cyclic = false;
        for (index_t x : whole.indices()) {
          std::uint64_t r = 1;
          index_t       y = x;
          while (!s.contains(y)) {
            y = h.product(y, x);
            ++r;
          }
          if (r == idx) {
            cyclic = true;
            break;
          }
        }
        if (!cyclic) {
          continue;
        }
      }
      pool.push_back(s);
    }
    std::sort(pool.begin(), pool.end(), canonical_less);
    rep.candidates = pool.size();
    auto r         = gp_search(whole, pool, budget);
    rep.largest    = r.value;
    rep.status     = r.status;
    rep.family     = r.family.subgroups;
    auto m         = m_bruteforce(whole, budget);
    rep.m          = m.value;
    if (m.status == Status::lower_bound) {
      rep.status = Status::lower_bound;
    }
    return rep;
  }

}  // namespace genpos

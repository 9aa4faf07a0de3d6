// Deliberately naive reference implementations. They share nothing with
// the library beyond the multiplication table.
#ifndef GENPOS_TESTS_ORACLE_HPP_
#define GENPOS_TESTS_ORACLE_HPP_

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "genpos/group.hpp"

namespace oracle {

  using genpos::FiniteGroup;
  using genpos::index_t;
  using Set = std::vector<bool>;

  // Saturate under products until nothing new appears.
  inline Set closure(FiniteGroup const& g, std::vector<index_t> const& gens) {
    Set s(g.size(), false);
    s[0] = true;
    for (auto x : gens) {
      s[x] = true;
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<index_t> cur;
      for (index_t i = 0; i < g.size(); ++i) {
        if (s[i]) {
          cur.push_back(i);
        }
      }
      for (auto a : cur) {
        for (auto b : cur) {
          auto c = g.product(a, b);
          if (!s[c]) {
            s[c] = true;
            grew = true;
          }
        }
      }
    }
    return s;
  }

  inline std::size_t count(Set const& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
  }

  inline Set meet(Set a, Set const& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = a[i] && b[i];
    }
    return a;
  }

  inline bool subset(Set const& a, Set const& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] && !b[i]) {
        return false;
      }
    }
    return true;
  }

  // Every subgroup of order s is generated by at most log2(s) elements, so
  // closing all small subsets finds the whole lattice.
  inline std::set<Set> subgroups(FiniteGroup const& g) {
    std::size_t const n = g.size();
    unsigned          depth = 0;
    while ((std::size_t{1} << depth) < n) {
      ++depth;
    }
    std::set<Set>        out;
    std::vector<index_t> pick;
    std::function<void(index_t)> rec = [&](index_t from) {
      out.insert(closure(g, pick));
      if (pick.size() == depth) {
        return;
      }
      for (index_t x = from; x < n; ++x) {
        pick.push_back(x);
        rec(x + 1);
        pick.pop_back();
      }
    };
    rec(1);
    return out;
  }

  inline std::vector<Set> maximal(FiniteGroup const& g) {
    auto             all = subgroups(g);
    std::vector<Set> out;
    for (auto const& s : all) {
      if (count(s) == g.size()) {
        continue;
      }
      bool top = true;
      for (auto const& t : all) {
        if (count(t) != g.size() && count(t) > count(s) && subset(s, t)) {
          top = false;
          break;
        }
      }
      if (top) {
        out.push_back(s);
      }
    }
    return out;
  }

  inline Set derived(FiniteGroup const& g) {
    std::vector<index_t> comms;
    for (index_t a = 0; a < g.size(); ++a) {
      for (index_t b = 0; b < g.size(); ++b) {
        comms.push_back(g.commutator(a, b));
      }
    }
    return closure(g, comms);
  }

  // [A, G] by brute force over all pairs.
  inline Set commutator_with_whole(FiniteGroup const& g, Set const& a) {
    std::vector<index_t> comms;
    for (index_t x = 0; x < g.size(); ++x) {
      if (!a[x]) {
        continue;
      }
      for (index_t y = 0; y < g.size(); ++y) {
        comms.push_back(g.commutator(x, y));
      }
    }
    return closure(g, comms);
  }

  inline bool nilpotent(FiniteGroup const& g) {
    Set cur(g.size(), true);
    while (true) {
      Set next = commutator_with_whole(g, cur);
      if (count(next) == 1) {
        return true;
      }
      if (next == cur) {
        return false;
      }
      cur = next;
    }
  }

  inline bool is_normal(FiniteGroup const& g, Set const& s) {
    for (index_t x = 0; x < g.size(); ++x) {
      if (!s[x]) {
        continue;
      }
      for (index_t y = 0; y < g.size(); ++y) {
        if (!s[g.conjugate(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  // Exhaustive maximum over all irredundant generating sets (tiny groups).
  inline unsigned m_value(FiniteGroup const& g) {
    std::size_t const    n = g.size();
    unsigned             best = 0;
    std::vector<index_t> pick;
    std::function<void(index_t)> rec = [&](index_t from) {
      if (!pick.empty()) {
        bool irredundant = true;
        for (std::size_t i = 0; i < pick.size() && irredundant; ++i) {
          auto rest = pick;
          rest.erase(rest.begin() + static_cast<long>(i));
          if (closure(g, rest)[pick[i]]) {
            irredundant = false;
          }
        }
        if (!irredundant) {
          return;
        }
        if (count(closure(g, pick)) == n) {
          best = std::max<unsigned>(best, static_cast<unsigned>(pick.size()));
          return;
        }
      }
      for (index_t x = from; x < n; ++x) {
        pick.push_back(x);
        rec(x + 1);
        pick.pop_back();
      }
    };
    rec(1);
    return best;
  }

  // General position by distinct subset meets.
  inline bool general_position(std::vector<Set> const& fam) {
    std::set<Set> meets;
    std::size_t   k = fam.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Set m(fam.front().size(), true);
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1u) {
          m = meet(m, fam[i]);
        }
      }
      if (!meets.insert(m).second) {
        return false;
      }
    }
    return true;
  }

  inline unsigned largest_gp(std::vector<Set> const& pool) {
    unsigned         best = 0;
    std::vector<Set> fam;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      best = std::max<unsigned>(best, static_cast<unsigned>(fam.size()));
      for (std::size_t i = from; i < pool.size(); ++i) {
        fam.push_back(pool[i]);
        if (general_position(fam)) {
          rec(i + 1);
        }
        fam.pop_back();
      }
    };
    rec(0);
    return best;
  }

}  // namespace oracle

#endif  // GENPOS_TESTS_ORACLE_HPP_

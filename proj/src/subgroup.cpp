#include "genpos/subgroup.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>
#include <unordered_map>

#include "genpos/kernels.hpp"

namespace genpos {

  namespace {

    void same_parent(Subgroup const& a, Subgroup const& b) {
      if (!a.parent().same_as(b.parent())) {
        throw ParentMismatch();
      }
    }

    // Grow `members`/`elems` (a subgroup with generators `gens`) by `x`,
    // adding whole right cosets until the set is closed under right
    // multiplication by every generator.
    void dimino(FiniteGroup const& g, Bitset& members,
                std::vector<index_t>& elems, std::vector<index_t>& gens,
                index_t x) {
      if (members.test(x)) {
        return;
      }
      std::size_t const    base_size = elems.size();
      std::vector<index_t> base(elems.begin(), elems.end());
      gens.push_back(x);
      std::vector<index_t> reps{0};
      auto add_coset = [&](index_t y) {
        reps.push_back(y);
        for (std::size_t i = 0; i < base_size; ++i) {
          index_t z = g.product(base[i], y);
          members.set(z);
          elems.push_back(z);
        }
      };
      add_coset(x);
      for (std::size_t r = 0; r < reps.size(); ++r) {
        for (index_t t : gens) {
          index_t y = g.product(reps[r], t);
          if (!members.test(y)) {
            add_coset(y);
          }
        }
      }
    }

    std::vector<index_t> to_indices(Bitset const& b) {
      std::vector<index_t> out;
      out.reserve(b.count());
      b.for_each([&](std::size_t i) { out.push_back(static_cast<index_t>(i)); });
      return out;
    }

    bool is_power_of(std::uint64_t n, std::uint64_t p) {
      while (n % p == 0) {
        n /= p;
      }
      return n == 1;
    }

    Subgroup from_gens(Subgroup const& base, std::vector<index_t> const& add) {
      FiniteGroup const&   g       = base.parent();
      Bitset               members = base.members();
      std::vector<index_t> elems   = base.indices();
      std::vector<index_t> gens    = base.generators();
      for (index_t x : add) {
        dimino(g, members, elems, gens, x);
      }
      return Subgroup(g, std::move(members), std::move(gens));
    }

  }  // namespace

  struct Subgroup::Lazy {
    std::once_flag       once;
    bool                 known = false;
    std::vector<index_t> gens;
  };

  Subgroup::Subgroup(FiniteGroup parent, Bitset members,
                     std::vector<index_t> generators)
      : parent_(std::move(parent)),
        members_(std::move(members)),
        order_(members_.count()),
        lazy_(std::make_shared<Lazy>()) {
    if (!generators.empty() || order_ == 1) {
      lazy_->known = true;
      lazy_->gens  = std::move(generators);
    }
  }

  bool Subgroup::contains(Element const& e) const {
    auto i = parent_.find(e);
    return i && members_.test(*i);
  }

  bool Subgroup::is_subgroup_of(Subgroup const& o) const {
    same_parent(*this, o);
    return members_.is_subset_of(o.members_);
  }

  std::vector<index_t> Subgroup::indices() const {
    return to_indices(members_);
  }

  std::vector<Element> Subgroup::elements() const {
    std::vector<Element> out;
    members_.for_each([&](std::size_t i) {
      out.push_back(parent_.element(static_cast<index_t>(i)));
    });
    return out;
  }

  std::vector<index_t> const& Subgroup::generators() const {
    std::call_once(lazy_->once, [this] {
      if (lazy_->known) {
        return;
      }
      Bitset               cur(members_.size());
      std::vector<index_t> elems{0};
      std::vector<index_t> gens;
      cur.set(0);
      // Prefer elements of large order: fewer generators, smaller steps.
      std::vector<index_t> cand = indices();
      std::vector<std::uint64_t> ord(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) {
        ord[i] = parent_.element_order(cand[i]);
      }
      std::vector<std::size_t> perm(cand.size());
      for (std::size_t i = 0; i < perm.size(); ++i) {
        perm[i] = i;
      }
      std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) {
        return ord[a] > ord[b];
      });
      for (auto i : perm) {
        if (elems.size() == order_) {
          break;
        }
        if (!cur.test(cand[i])) {
          dimino(parent_, cur, elems, gens, cand[i]);
        }
      }
      lazy_->gens = std::move(gens);
    });
    return lazy_->gens;
  }

  bool canonical_less(Subgroup const& a, Subgroup const& b) {
    return lex_less(a.members(), b.members());
  }

  bool order_less(Subgroup const& a, Subgroup const& b) {
    if (a.order() != b.order()) {
      return a.order() < b.order();
    }
    return canonical_less(a, b);
  }

  Subgroup trivial_subgroup(FiniteGroup const& g) {
    Bitset b(g.size());
    b.set(0);
    return Subgroup(g, std::move(b));
  }

  Subgroup whole_group(FiniteGroup const& g) {
    std::vector<index_t> gens = g.generator_indices();
    return Subgroup(g, Bitset::full(g.size()), std::move(gens));
  }

  Subgroup closure_of(FiniteGroup const& g, std::vector<index_t> const& gens) {
    return from_gens(trivial_subgroup(g), gens);
  }

  Subgroup closure(FiniteGroup const& g, std::vector<Element> const& gens) {
    std::vector<index_t> idx;
    for (auto const& e : gens) {
      idx.push_back(g.index_of(e));
    }
    return closure_of(g, idx);
  }

  Subgroup extend(Subgroup const& s, index_t x) {
    return from_gens(s, {x});
  }

  Subgroup join(Subgroup const& a, Subgroup const& b) {
    same_parent(a, b);
    if (b.is_subgroup_of(a)) {
      return a;
    }
    return from_gens(a, b.generators());
  }

  Subgroup intersect(Subgroup const& a, Subgroup const& b) {
    same_parent(a, b);
    return Subgroup(a.parent(), a.members() & b.members());
  }

  Subgroup conjugate(Subgroup const& a, index_t x) {
    FiniteGroup const& g = a.parent();
    Bitset             out(g.size());
    a.members().for_each([&](std::size_t i) {
      out.set(g.conjugate(static_cast<index_t>(i), x));
    });
    std::vector<index_t> gens;
    for (index_t s : a.generators()) {
      gens.push_back(g.conjugate(s, x));
    }
    return Subgroup(g, std::move(out), std::move(gens));
  }

  Subgroup conjugate(Subgroup const& a, Element const& x) {
    return conjugate(a, a.parent().index_of(x));
  }

  bool normalizes(Subgroup const& s, index_t x) {
    FiniteGroup const& g = s.parent();
    for (index_t t : s.generators()) {
      if (!s.contains(g.conjugate(t, x))) {
        return false;
      }
    }
    return true;
  }

  bool is_normal_in(Subgroup const& n, Subgroup const& k) {
    if (!n.is_subgroup_of(k)) {
      return false;
    }
    for (index_t x : k.generators()) {
      if (!normalizes(n, x)) {
        return false;
      }
    }
    return true;
  }

  bool is_normal(Subgroup const& n) {
    return is_normal_in(n, whole_group(n.parent()));
  }

  Subgroup normal_closure(Subgroup const& within,
                          std::vector<index_t> const& seed) {
    FiniteGroup const&   g = within.parent();
    Bitset               members(g.size());
    std::vector<index_t> elems{0};
    std::vector<index_t> gens;
    members.set(0);
    for (index_t x : seed) {
      dimino(g, members, elems, gens, x);
    }
    std::vector<index_t> const& outer = within.generators();
    // gens grows while we scan it; every generator gets conjugated by
    // every outer generator exactly once.
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (index_t k : outer) {
        index_t c = g.conjugate(gens[i], k);
        if (!members.test(c)) {
          dimino(g, members, elems, gens, c);
        }
      }
    }
    return Subgroup(g, std::move(members), std::move(gens));
  }

  Subgroup commutator_subgroup(Subgroup const& within, Subgroup const& a,
                               Subgroup const& b) {
    FiniteGroup const&   g = within.parent();
    std::vector<index_t> seed;
    for (index_t x : a.generators()) {
      for (index_t y : b.generators()) {
        index_t c = g.commutator(x, y);
        if (c != 0) {
          seed.push_back(c);
        }
      }
    }
    return normal_closure(within, seed);
  }

  Subgroup derived_subgroup(Subgroup const& k) {
    return commutator_subgroup(k, k, k);
  }

  Subgroup derived_subgroup(FiniteGroup const& g) {
    return derived_subgroup(whole_group(g));
  }

  std::vector<Subgroup> derived_series(Subgroup const& k) {
    std::vector<Subgroup> out{k};
    while (true) {
      Subgroup next = derived_subgroup(out.back());
      if (next.order() == out.back().order()) {
        return out;
      }
      out.push_back(std::move(next));
    }
  }

  std::vector<Subgroup> lower_central_series(Subgroup const& k) {
    std::vector<Subgroup> out{k};
    while (true) {
      Subgroup next = commutator_subgroup(k, out.back(), k);
      if (next.order() == out.back().order()) {
        return out;
      }
      out.push_back(std::move(next));
    }
  }

  bool is_abelian(Subgroup const& k) {
    FiniteGroup const& g    = k.parent();
    auto const&        gens = k.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (g.product(gens[i], gens[j]) != g.product(gens[j], gens[i])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_nilpotent(Subgroup const& k) {
    return lower_central_series(k).back().is_trivial();
  }
  bool is_nilpotent(FiniteGroup const& g) {
    return is_nilpotent(whole_group(g));
  }
  bool is_soluble(Subgroup const& k) {
    return derived_series(k).back().is_trivial();
  }
  bool is_soluble(FiniteGroup const& g) {
    return is_soluble(whole_group(g));
  }
  bool is_p_group(Subgroup const& k) {
    return k.order() == 1 || prime_power_base(k.order()) != 0;
  }

  std::vector<Bitset> conjugacy_classes(Subgroup const& k) {
    FiniteGroup const&          g = k.parent();
    std::vector<index_t> const& gens = k.generators();
    Bitset                      seen(g.size());
    std::vector<Bitset>         out;
    k.members().for_each([&](std::size_t start) {
      if (seen.test(start)) {
        return;
      }
      Bitset               cls(g.size());
      std::vector<index_t> queue{static_cast<index_t>(start)};
      cls.set(start);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (index_t t : gens) {
          index_t y = g.conjugate(queue[i], t);
          if (!cls.test(y)) {
            cls.set(y);
            queue.push_back(y);
          }
        }
      }
      seen |= cls;
      out.push_back(std::move(cls));
    });
    return out;
  }

  Subgroup pcore_over(FiniteGroup const& g, Subgroup const& base,
                      std::uint64_t p) {
    Subgroup const whole   = whole_group(g);
    auto const     classes = conjugacy_classes(whole);
    Subgroup       cur     = base;
    bool           grew    = true;
    while (grew) {
      grew = false;
      for (auto const& cls : classes) {
        if (cls.is_subset_of(cur.members())) {
          continue;
        }
        std::vector<index_t> seed = cur.generators();
        seed.push_back(static_cast<index_t>(cls.find_first()));
        Subgroup cand = normal_closure(whole, seed);
        if (is_power_of(cand.order() / base.order(), p)) {
          cur  = std::move(cand);
          grew = true;
        }
      }
    }
    return cur;
  }

  Subgroup fitting_subgroup(FiniteGroup const& g) {
    Subgroup const base = trivial_subgroup(g);
    Subgroup       out  = base;
    for (auto p : prime_divisors(g.order())) {
      out = join(out, pcore_over(g, base, p));
    }
    return out;
  }

  unsigned fitting_length(FiniteGroup const& g) {
    Subgroup cur    = trivial_subgroup(g);
    unsigned length = 0;
    while (!cur.is_whole()) {
      Subgroup next = cur;
      for (auto p : prime_divisors(g.order() / cur.order())) {
        next = join(next, pcore_over(g, cur, p));
      }
      if (next.order() == cur.order()) {
        throw PreconditionError(g.spec() + ": group is not soluble");
      }
      cur = std::move(next);
      ++length;
    }
    return length;
  }

  std::vector<Subgroup> all_subgroups(Subgroup const& k, std::size_t cap) {
    if (k.order() > cap) {
      throw CapExceeded("all_subgroups: order " + std::to_string(k.order())
                        + " exceeds the cap " + std::to_string(cap));
    }
    FiniteGroup const& g        = k.parent();
    bool const         soluble  = is_soluble(k);
    bool const         abelian  = is_abelian(k);
    std::vector<index_t> const pool = k.indices();

    std::vector<Subgroup>                          list{trivial_subgroup(g)};
    std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
    seen.emplace(list.front().members(), 0);

    for (std::size_t qi = 0; qi < list.size(); ++qi) {
      Subgroup const s    = list[qi];
      Bitset         done = s.members();
      std::vector<index_t> const elems = s.indices();
      for (index_t x : pool) {
        if (done.test(x)) {
          continue;
        }
        if (soluble) {
          if (!abelian && !normalizes(s, x)) {
            done.set(x);
            continue;
          }
          std::uint64_t r = 1;
          index_t       y = x;
          while (!s.contains(y)) {
            y = g.product(y, x);
            ++r;
          }
          if (!is_prime(r)) {
            done.set(x);
            continue;
          }
        }
        Subgroup t = extend(s, x);
        if (soluble) {
          done |= t.members();
        } else {
          for (index_t e : elems) {
            done.set(g.product(e, x));
          }
        }
        if (seen.emplace(t.members(), list.size()).second) {
          list.push_back(std::move(t));
        }
      }
    }
    std::sort(list.begin(), list.end(), order_less);
    return list;
  }

  std::vector<Subgroup> all_subgroups(FiniteGroup const& g, std::size_t cap) {
    if (g.order() > cap) {
      throw CapExceeded(g.spec() + ": order " + std::to_string(g.order())
                        + " exceeds the subgroup enumeration cap "
                        + std::to_string(cap));
    }
    return all_subgroups(whole_group(g), cap);
  }

  std::vector<Subgroup> maximal_among(std::vector<Subgroup> const& subs,
                                      Subgroup const& top) {
    std::vector<Subgroup const*> proper;
    for (auto const& s : subs) {
      if (s.order() < top.order() && s.members().is_subset_of(top.members())) {
        proper.push_back(&s);
      }
    }
    std::stable_sort(proper.begin(), proper.end(),
                     [](auto a, auto b) { return a->order() > b->order(); });
    std::vector<Subgroup> out;
    for (auto const* s : proper) {
      bool covered = false;
      for (auto const& m : out) {
        if (s->members().is_subset_of(m.members())) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        out.push_back(*s);
      }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  Subgroup frattini_pgroup(Subgroup const& k) {
    FiniteGroup const&   g    = k.parent();
    std::uint64_t const  p    = k.order() == 1 ? 1 : prime_power_base(k.order());
    if (p == 0) {
      throw PreconditionError("frattini_pgroup: not a p-group");
    }
    std::vector<index_t> seed;
    auto const&          gens = k.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      seed.push_back(g.power(gens[i], p));
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        seed.push_back(g.commutator(gens[i], gens[j]));
      }
    }
    std::erase(seed, index_t{0});
    return normal_closure(k, seed);
  }

  std::vector<Subgroup> maximal_subgroups_pgroup(Subgroup const& k) {
    if (k.is_trivial()) {
      return {};
    }
    FiniteGroup const& g   = k.parent();
    int const          p   = static_cast<int>(prime_power_base(k.order()));
    if (p == 0) {
      throw PreconditionError("maximal_subgroups_pgroup: not a p-group");
    }
    Subgroup const       phi = frattini_pgroup(k);
    std::vector<index_t> basis;
    {
      Subgroup cur = phi;
      for (index_t x : k.generators()) {
        if (!cur.contains(x)) {
          basis.push_back(x);
          cur = extend(cur, x);
        }
      }
    }
    int const d = static_cast<int>(basis.size());
    // Coordinates of every element of k in k/phi = F_p^d, by BFS along
    // right multiplication.
    std::vector<std::int8_t> code(g.size() * d, -1);
    std::vector<index_t>     queue{0};
    std::vector<char>        seen(g.size(), 0);
    seen[0] = 1;
    for (int i = 0; i < d; ++i) {
      code[i] = 0;
    }
    std::vector<index_t> const& phigens = phi.generators();
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      index_t y = queue[qi];
      auto step = [&](index_t t, int axis) {
        index_t z = g.product(y, t);
        if (seen[z]) {
          return;
        }
        seen[z] = 1;
        for (int i = 0; i < d; ++i) {
          code[z * d + i] = code[y * d + i];
        }
        if (axis >= 0) {
          code[z * d + axis] = static_cast<std::int8_t>((code[z * d + axis] + 1) % p);
        }
        queue.push_back(z);
      };
      for (int i = 0; i < d; ++i) {
        step(basis[i], i);
      }
      for (index_t t : phigens) {
        step(t, -1);
      }
    }
    std::vector<Subgroup> out;
    std::vector<int>      f(d, 0);
    long long             total = 1;
    for (int i = 0; i < d; ++i) {
      total *= p;
    }
    for (long long c = 1; c < total; ++c) {
      long long x = c;
      int       lead = -1;
      for (int i = 0; i < d; ++i) {
        f[i] = static_cast<int>(x % p);
        x /= p;
        if (lead < 0 && f[i] != 0) {
          lead = i;
        }
      }
      if (f[lead] != 1) {
        continue;
      }
      Bitset m(g.size());
      for (index_t e : queue) {
        int s = 0;
        for (int i = 0; i < d; ++i) {
          s += f[i] * code[e * d + i];
        }
        if (s % p == 0) {
          m.set(e);
        }
      }
      out.emplace_back(g, std::move(m));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  std::vector<Subgroup> maximal_subgroups(Subgroup const& k) {
    if (k.is_trivial()) {
      return {};
    }
    if (k.order() <= kSubgroupCap) {
      return maximal_among(all_subgroups(k, kSubgroupCap), k);
    }
    if (is_p_group(k) && k.order() <= kLatticeCap) {
      return maximal_subgroups_pgroup(k);
    }
    throw CapExceeded("maximal_subgroups: order " + std::to_string(k.order())
                      + " is beyond the generic method");
  }

  std::vector<Subgroup> maximal_subgroups(FiniteGroup const& g) {
    if (!g.enumerable() || g.order() > kLatticeCap) {
      throw CapExceeded(g.spec() + ": order " + std::to_string(g.order())
                        + " exceeds the lattice cap");
    }
    return maximal_subgroups(whole_group(g));
  }

  Subgroup frattini(Subgroup const& k) {
    Subgroup out = k;
    for (auto const& m : maximal_subgroups(k)) {
      out = intersect(out, m);
    }
    return out;
  }

  Subgroup frattini(FiniteGroup const& g) {
    return frattini(whole_group(g));
  }

  std::vector<Subgroup> normal_subgroups(FiniteGroup const& g) {
    Subgroup const whole   = whole_group(g);
    auto const     classes = conjugacy_classes(whole);
    std::vector<Subgroup>                               list{trivial_subgroup(g)};
    std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
    seen.emplace(list.front().members(), 0);
    for (std::size_t i = 0; i < list.size(); ++i) {
      Subgroup const n = list[i];
      for (auto const& cls : classes) {
        if (cls.is_subset_of(n.members())) {
          continue;
        }
        std::vector<index_t> seed = n.generators();
        seed.push_back(static_cast<index_t>(cls.find_first()));
        Subgroup t = normal_closure(whole, seed);
        if (seen.emplace(t.members(), list.size()).second) {
          list.push_back(std::move(t));
        }
      }
    }
    std::sort(list.begin(), list.end(), order_less);
    return list;
  }

  std::vector<Subgroup> minimal_normal_over(FiniteGroup const& g,
                                            Subgroup const& base) {
    Subgroup const        whole = whole_group(g);
    std::vector<Subgroup> cands;
    for (auto const& cls : conjugacy_classes(whole)) {
      if (cls.is_subset_of(base.members())) {
        continue;
      }
      std::vector<index_t> seed = base.generators();
      seed.push_back(static_cast<index_t>(cls.find_first()));
      Subgroup t = normal_closure(whole, seed);
      if (std::find(cands.begin(), cands.end(), t) == cands.end()) {
        cands.push_back(std::move(t));
      }
    }
    std::vector<Subgroup> out;
    for (auto const& t : cands) {
      bool minimal = true;
      for (auto const& u : cands) {
        if (u.order() < t.order() && u.members().is_subset_of(t.members())) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(t);
      }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  std::vector<Subgroup> minimal_normal_subgroups(FiniteGroup const& g) {
    return minimal_normal_over(g, trivial_subgroup(g));
  }

  index_t QuotientGroup::map(index_t parent_index) const {
    return group.index_of(Element({static_cast<std::int32_t>(labels[parent_index])}));
  }

  Subgroup QuotientGroup::image(Subgroup const& s) const {
    Bitset b(group.size());
    s.members().for_each([&](std::size_t i) {
      b.set(map(static_cast<index_t>(i)));
    });
    return Subgroup(group, std::move(b));
  }

  Subgroup QuotientGroup::preimage(Subgroup const& s) const {
    FiniteGroup const& g = kernel.parent();
    Bitset             b(g.size());
    for (index_t i = 0; i < g.size(); ++i) {
      if (s.contains(map(i))) {
        b.set(i);
      }
    }
    return Subgroup(g, std::move(b));
  }

  QuotientGroup quotient(FiniteGroup const& g, Subgroup const& n) {
    if (!n.parent().same_as(g)) {
      throw ParentMismatch();
    }
    if (!is_normal(n)) {
      throw PreconditionError(g.spec() + ": quotient by a non-normal subgroup");
    }
    std::size_t const          size = g.size();
    std::vector<index_t>       labels(size, static_cast<index_t>(size));
    std::vector<index_t> const elems = n.indices();
    for (index_t x = 0; x < size; ++x) {
      if (labels[x] != size) {
        continue;
      }
      for (index_t e : elems) {
        labels[g.product(e, x)] = x;
      }
    }
    std::vector<Element> gens;
    for (index_t x : g.generator_indices()) {
      gens.emplace_back(std::vector<std::int32_t>{static_cast<std::int32_t>(labels[x])});
    }
    std::ostringstream spec;
    spec << g.spec() << "/N" << n.order();
    FiniteGroup q(spec.str(), make_quotient_kernel(g, labels), std::move(gens),
                  size / n.order(), g.enumeration_cap());
    return QuotientGroup{std::move(q), n, std::move(labels)};
  }

  unsigned ChiefSeries::complemented_count() const {
    return static_cast<unsigned>(std::count_if(
        factors.begin(), factors.end(),
        [](ChiefFactor const& f) { return f.complemented; }));
  }

  bool complemented_by_search(FiniteGroup const& g, Subgroup const& n,
                              Subgroup const& m) {
    QuotientGroup const q  = quotient(g, m);
    Subgroup const      nq = q.image(n);
    for (auto const& u : all_subgroups(q.group)) {
      if (u.order() * nq.order() == q.order()
          && (u.members() & nq.members()).count() == 1) {
        return true;
      }
    }
    return false;
  }

  ChiefSeries chief_series(FiniteGroup const& g,
                           std::optional<std::uint64_t> tie_break_seed) {
    std::vector<Subgroup> up{trivial_subgroup(g)};
    std::mt19937_64       rng(tie_break_seed.value_or(0));
    while (!up.back().is_whole()) {
      auto cands = minimal_normal_over(g, up.back());
      std::size_t pick = 0;
      if (tie_break_seed) {
        pick = std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng);
      }
      up.push_back(cands[pick]);
    }
    ChiefSeries out;
    out.chain.assign(up.rbegin(), up.rend());
    std::optional<std::vector<Subgroup>> maxes;
    for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
      Subgroup const& n = out.chain[i];
      Subgroup const& m = out.chain[i + 1];
      ChiefFactor     f{n.order() / m.order(), true, false};
      auto const&     ng = n.generators();
      for (std::size_t a = 0; a < ng.size() && f.abelian; ++a) {
        for (std::size_t b = a + 1; b < ng.size(); ++b) {
          if (!m.contains(g.commutator(ng[a], ng[b]))) {
            f.abelian = false;
            break;
          }
        }
      }
      if (f.abelian) {
        // An abelian chief factor N/M is complemented exactly when it is
        // not inside the Frattini subgroup of G/M.
        if (!maxes) {
          maxes = maximal_subgroups(g);
        }
        for (auto const& x : *maxes) {
          if (m.members().is_subset_of(x.members())
              && !n.members().is_subset_of(x.members())) {
            f.complemented = true;
            break;
          }
        }
      } else {
        f.complemented = complemented_by_search(g, n, m);
      }
      out.factors.push_back(f);
    }
    return out;
  }

  std::vector<std::string> serialize(Subgroup const& s) {
    std::vector<std::string> out;
    for (auto const& e : s.elements()) {
      out.push_back(s.parent().format(e));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string lattice_dot(FiniteGroup const& g) {
    if (g.order() > 100) {
      throw CapExceeded(g.spec() + ": lattice export is limited to order 100");
    }
    auto const         subs = all_subgroups(g);
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < subs.size(); ++i) {
      os << "  s" << i << " [label=\"" << subs[i].order() << "\"];\n";
    }
    for (std::size_t j = 0; j < subs.size(); ++j) {
      for (auto const& m : maximal_among(subs, subs[j])) {
        auto it = std::lower_bound(subs.begin(), subs.end(), m, order_less);
        os << "  s" << (it - subs.begin()) << " -> s" << j << ";\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace genpos

#ifndef GENPOS_SUBGROUP_HPP_
#define GENPOS_SUBGROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genpos/bitset.hpp"
#include "genpos/group.hpp"

namespace genpos {

  // A subgroup of an enumerated group, stored as a bit-vector over the
  // parent's element index. Values are immutable; a generating set is
  // computed on demand and shared between copies.
  class Subgroup {
   public:
    Subgroup(FiniteGroup parent, Bitset members,
             std::vector<index_t> generators = {});

    FiniteGroup const& parent() const noexcept {
      return parent_;
    }
    Bitset const& members() const noexcept {
      return members_;
    }
    std::uint64_t order() const noexcept {
      return order_;
    }
    bool contains(index_t i) const noexcept {
      return members_.test(i);
    }
    bool contains(Element const& e) const;
    bool is_trivial() const noexcept {
      return order_ == 1;
    }
    bool is_whole() const noexcept {
      return order_ == members_.size();
    }
    bool is_subgroup_of(Subgroup const& o) const;

    std::vector<index_t> indices() const;
    std::vector<Element> elements() const;
    // Short generating set (greedy over the canonical element order).
    std::vector<index_t> const& generators() const;

    friend bool operator==(Subgroup const& a, Subgroup const& b) {
      return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
    }

   private:
    struct Lazy;
    FiniteGroup           parent_;
    Bitset                members_;
    std::uint64_t         order_;
    std::shared_ptr<Lazy> lazy_;
  };

  // Canonical order: lexicographic on the member bit-vector.
  bool canonical_less(Subgroup const& a, Subgroup const& b);
  // By order, then canonical.
  bool order_less(Subgroup const& a, Subgroup const& b);

  Subgroup trivial_subgroup(FiniteGroup const& g);
  Subgroup whole_group(FiniteGroup const& g);

  Subgroup closure(FiniteGroup const& g, std::vector<Element> const& gens);
  Subgroup closure_of(FiniteGroup const& g, std::vector<index_t> const& gens);
  // <s, x> by Dimino's coset extension.
  Subgroup extend(Subgroup const& s, index_t x);
  Subgroup join(Subgroup const& a, Subgroup const& b);

  Subgroup intersect(Subgroup const& a, Subgroup const& b);
  // {x^-1 a x : a in A}
  Subgroup conjugate(Subgroup const& a, index_t x);
  Subgroup conjugate(Subgroup const& a, Element const& x);

  bool normalizes(Subgroup const& s, index_t x);
  bool is_normal_in(Subgroup const& n, Subgroup const& k);
  bool is_normal(Subgroup const& n);
  // Smallest subgroup of `within` containing `seed` and normalized by it.
  Subgroup normal_closure(Subgroup const& within,
                          std::vector<index_t> const& seed);
  // [A, B] for subgroups normalized by `within`.
  Subgroup commutator_subgroup(Subgroup const& within, Subgroup const& a,
                               Subgroup const& b);

  Subgroup derived_subgroup(Subgroup const& k);
  Subgroup derived_subgroup(FiniteGroup const& g);
  std::vector<Subgroup> derived_series(Subgroup const& k);
  std::vector<Subgroup> lower_central_series(Subgroup const& k);
  bool is_abelian(Subgroup const& k);
  bool is_nilpotent(Subgroup const& k);
  bool is_nilpotent(FiniteGroup const& g);
  bool is_soluble(Subgroup const& k);
  bool is_soluble(FiniteGroup const& g);
  bool is_p_group(Subgroup const& k);

  // Conjugacy classes of the group generated inside `k`, ordered by least
  // member.
  std::vector<Bitset> conjugacy_classes(Subgroup const& k);

  // Largest normal p-subgroup of G/base, as a subgroup of G containing base.
  Subgroup pcore_over(FiniteGroup const& g, Subgroup const& base,
                      std::uint64_t p);
  Subgroup fitting_subgroup(FiniteGroup const& g);
  unsigned fitting_length(FiniteGroup const& g);

  // Complete duplicate-free list ordered by (order, canonical). Soluble
  // inputs use cyclic extension by prime-index steps; others extend by
  // every element. Refuses |k| > cap.
  std::vector<Subgroup> all_subgroups(Subgroup const& k,
                                      std::size_t cap = kSubgroupCap);
  std::vector<Subgroup> all_subgroups(FiniteGroup const& g,
                                      std::size_t cap = kSubgroupCap);

  // Canonically ordered. Uses all_subgroups up to kSubgroupCap and the
  // Frattini-quotient method for larger p-groups; throws CapExceeded
  // otherwise.
  std::vector<Subgroup> maximal_subgroups(Subgroup const& k);
  std::vector<Subgroup> maximal_subgroups(FiniteGroup const& g);
  // Maximal subgroups of a p-group of any enumerable order.
  std::vector<Subgroup> maximal_subgroups_pgroup(Subgroup const& k);
  // Maximal elements among proper members of a complete subgroup list.
  std::vector<Subgroup> maximal_among(std::vector<Subgroup> const& subs,
                                      Subgroup const& top);

  Subgroup frattini(FiniteGroup const& g);
  Subgroup frattini(Subgroup const& k);
  // P^p P' for a p-group; equals the Frattini subgroup.
  Subgroup frattini_pgroup(Subgroup const& k);

  std::vector<Subgroup> normal_subgroups(FiniteGroup const& g);
  // Minimal normal subgroups of G strictly containing `base` (that is,
  // minimal normal subgroups of G/base, pulled back).
  std::vector<Subgroup> minimal_normal_over(FiniteGroup const& g,
                                            Subgroup const& base);
  std::vector<Subgroup> minimal_normal_subgroups(FiniteGroup const& g);

  struct QuotientGroup {
    FiniteGroup          group;
    Subgroup             kernel;
    // parent index -> least parent index of its coset
    std::vector<index_t> labels;

    std::uint64_t order() const {
      return group.order();
    }
    // Natural map, parent index to quotient index.
    index_t map(index_t parent_index) const;
    // Image of a subgroup containing the kernel.
    Subgroup image(Subgroup const& s) const;
    // Full preimage of a quotient subgroup.
    Subgroup preimage(Subgroup const& s) const;
  };

  QuotientGroup quotient(FiniteGroup const& g, Subgroup const& n);

  struct ChiefFactor {
    std::uint64_t order;
    bool          abelian;
    bool          complemented;
  };

  struct ChiefSeries {
    // G = chain[0] > chain[1] > ... > chain.back() = 1
    std::vector<Subgroup>    chain;
    // factors[i] is chain[i] / chain[i+1]
    std::vector<ChiefFactor> factors;

    unsigned complemented_count() const;
  };

  // Deterministic unless `tie_break_seed` is given, in which case the
  // minimal normal subgroup at each step is chosen pseudo-randomly.
  ChiefSeries chief_series(FiniteGroup const& g,
                           std::optional<std::uint64_t> tie_break_seed = {});

  // Does N/M have a complement in G/M? Searches subgroups of G/M directly.
  bool complemented_by_search(FiniteGroup const& g, Subgroup const& n,
                              Subgroup const& m);

  // Sorted element serializations.
  std::vector<std::string> serialize(Subgroup const& s);
  // Hasse diagram of the subgroup lattice, for |G| <= 100.
  std::string lattice_dot(FiniteGroup const& g);

}  // namespace genpos

#endif  // GENPOS_SUBGROUP_HPP_

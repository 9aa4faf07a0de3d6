#ifndef GENPOS_INVARIANTS_HPP_
#define GENPOS_INVARIANTS_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "genpos/group.hpp"
#include "genpos/subgroup.hpp"

namespace genpos {

  enum class Status { exact, lower_bound };
  std::string to_string(Status s);

  // Wall-clock allowance for a search. Default-constructed means no limit.
  class Budget {
   public:
    using clock = std::chrono::steady_clock;

    Budget() = default;
    static Budget seconds(double s);
    static Budget unlimited() {
      return {};
    }

    bool expired() const;
    bool limited() const noexcept {
      return deadline_.has_value();
    }

   private:
    std::optional<clock::time_point> deadline_;
  };

  struct IrredundantSequence {
    std::vector<index_t> elements;
    bool                 generates_parent = false;
  };

  struct MResult {
    unsigned            value = 0;
    Status              status = Status::exact;
    IrredundantSequence witness;
  };

  struct IResult {
    unsigned            value = 0;
    Status              status = Status::exact;
    std::vector<index_t> subgroup;  // members of the subgroup attaining it
    IrredundantSequence witness;
  };

  struct GPFamily {
    std::vector<Subgroup> subgroups;
    // witnesses[i] lies in the meet of all members but i, and not in the
    // meet of all members.
    std::vector<index_t> witnesses;
  };

  struct GPCheck {
    bool     general_position = false;
    GPFamily family;
  };

  struct MdResult {
    unsigned value = 0;
    Status   status = Status::exact;
    GPFamily family;
  };

  bool is_irredundant(FiniteGroup const& g, std::vector<Element> const& seq);
  bool is_irredundant(FiniteGroup const& g, std::vector<index_t> const& seq);

  // Largest irredundant generating sequence of k, by depth-first search over
  // increasing sequences of cyclic-subgroup generators.
  MResult m_bruteforce(Subgroup const& k, Budget budget = {});
  MResult m_bruteforce(FiniteGroup const& g, Budget budget = {});

  // Number of complemented chief factors. G_{q,p} descriptors take the
  // structured path (see gqp.hpp).
  unsigned m_soluble(FiniteGroup const& g);

  // max m(H) over subgroups, one subgroup per conjugacy class.
  IResult i_bruteforce(FiniteGroup const& g, Budget budget = {});

  // Primary test with witnesses; for up to 12 members it is cross-checked
  // against distinctness of all subset meets and throws std::logic_error
  // on disagreement.
  GPCheck is_general_position(std::vector<Subgroup> const& family);
  // All 2^k subset intersections pairwise distinct.
  bool general_position_by_subsets(std::vector<Subgroup> const& family);

  MdResult md_search(FiniteGroup const& g, Budget budget = {});
  // Largest family in general position drawn from `pool`, meets computed
  // inside `top`. Shared by md_search and the abelian harness.
  MdResult gp_search(Subgroup const& top, std::vector<Subgroup> const& pool,
                     Budget budget = {});

  struct Lemma22Report {
    unsigned                 dim = 0;
    std::size_t              supplements = 0;
    std::size_t              families = 0;
    unsigned                 largest = 0;
    std::vector<std::string> violations;

    bool holds() const {
      return violations.empty();
    }
  };

  // G must be a fieldmod group V x| <h>. Every family of V-supplementing
  // maximal subgroups in general position, up to size dim(V)+2, is checked
  // for the W x| K meet shape and the size/structure bounds.
  Lemma22Report lemma22_check(FiniteGroup const& g);

  struct Lemma24Report {
    unsigned              largest = 0;
    unsigned              m = 0;
    std::size_t           candidates = 0;
    Status                status = Status::exact;
    std::vector<Subgroup> family;

    bool holds() const {
      return largest <= m;
    }
  };

  // Largest family of arbitrary subgroups of an abelian group in general
  // position, compared with m(H). With `meet_irreducible_only` the search is
  // restricted to subgroups with a unique minimal overgroup, which loses
  // nothing: each member of a family can be enlarged to one that is maximal
  // subject to not containing the meet of the others.
  Lemma24Report lemma24_check(FiniteGroup const& h,
                              bool meet_irreducible_only = true,
                              Budget budget = {});

}  // namespace genpos

#endif  // GENPOS_INVARIANTS_HPP_

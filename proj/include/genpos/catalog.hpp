#ifndef GENPOS_CATALOG_HPP_
#define GENPOS_CATALOG_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "genpos/group.hpp"
#include "genpos/group_spec.hpp"

namespace genpos {

  enum class Predicate { soluble, abelian, derived_nilpotent, supersoluble_known };

  Predicate   parse_predicate(std::string const& name);
  std::string to_string(Predicate p);

  struct CorpusFilter {
    std::uint64_t          max_order = 200;
    std::vector<Predicate> predicates;
  };

  inline constexpr std::uint64_t kCorpusMaxOrder = 512;

  // Candidate descriptors of order <= max_order, sorted by (order, spec):
  // cyclic and abelian groups, dihedral and generalized quaternion groups,
  // S_3, S_4, A_4, extraspecial groups of order p^3 for p in {3, 5},
  // C_q x| C_p for p | q-1, the fieldmod family, gqp:2,3, and direct
  // products of a nonabelian member with another member.
  std::vector<std::string> corpus_specs(std::uint64_t max_order);

  // Computed from the group, never from the descriptor. Supersolubility is
  // read off a chief series: soluble with every chief factor of prime order.
  bool satisfies(FiniteGroup const& g, Predicate p);

  // Visits the corpus in corpus_specs order, constructing each group once.
  void for_each_corpus(CorpusFilter const&                           filter,
                       std::function<void(FiniteGroup const&)> const& visit);
  std::vector<FiniteGroup> corpus(CorpusFilter const& filter);

  // V = (F_{p^f})^n x| <h>, h a primitive element acting by scalars.
  FiniteGroup build_fieldmod(int p, int f, int n);

  // {"spec": ..., "order": ..., "soluble": ..., ...} on one line.
  std::string corpus_json_line(FiniteGroup const& g);

}  // namespace genpos

#endif  // GENPOS_CATALOG_HPP_

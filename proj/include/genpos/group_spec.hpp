#ifndef GENPOS_GROUP_SPEC_HPP_
#define GENPOS_GROUP_SPEC_HPP_

#include <memory>
#include <string>
#include <vector>

#include "genpos/group.hpp"

namespace genpos {

  // Parsed form of a group descriptor:
  //
  //   cyclic:n | abelian:n1,n2,... | dihedral:n | sym:n | alt:n
  //   | perm:<path> | direct(<spec>,<spec>) | gqp:p,q | fieldmod:p^f,n
  //   | quaternion:n | heis:p | metacyclic:n,m,r | wreath:p
  struct GroupSpec {
    std::string                 kind;
    std::vector<long long>      args;
    std::string                 path;       // perm only
    std::vector<GroupSpec>      children;   // direct only

    std::string to_string() const;
  };

  GroupSpec parse_group_spec(std::string const& text);

  FiniteGroup construct(GroupSpec const& spec,
                        std::size_t      enumeration_cap = kEnumerationCap);
  FiniteGroup construct(std::string const& text,
                        std::size_t        enumeration_cap = kEnumerationCap);

  // Permutation import/export, JSON {"degree": d, "generators": [[...]]}
  // with one-based images.
  FiniteGroup import_perm(std::string const& path,
                          std::size_t enumeration_cap = kEnumerationCap);
  FiniteGroup perm_group_from_json(std::string const& json_text,
                                   std::string const& spec_label,
                                   std::size_t enumeration_cap = kEnumerationCap);
  // Permutation groups are written as-is; other kinds via their right
  // regular representation.
  std::string perm_json(FiniteGroup const& g);
  void export_perm(FiniteGroup const& g, std::string const& path);

}  // namespace genpos

#endif  // GENPOS_GROUP_SPEC_HPP_

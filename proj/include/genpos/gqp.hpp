#ifndef GENPOS_GQP_HPP_
#define GENPOS_GQP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genpos/bitset.hpp"
#include "genpos/group.hpp"
#include "genpos/invariants.hpp"
#include "genpos/kernels.hpp"
#include "genpos/subgroup.hpp"

namespace genpos {

  using Vec = std::vector<std::int32_t>;

  // G_{q,p} = F_q^p x| H with H = C_p wr C_p, kept in structured form. H is
  // enumerated (order p^{p+1}); V never is. Elements of H are addressed by
  // their index in h().
  class GqpGroup {
   public:
    GqpGroup(int p, int q);

    int p() const noexcept {
      return p_;
    }
    int q() const noexcept {
      return q_;
    }
    int c() const noexcept {
      return action_.c();
    }
    std::string spec() const;

    FiniteGroup const& h() const noexcept {
      return h_;
    }
    WreathAction const& action_table() const noexcept {
      return action_;
    }
    std::uint64_t v_size() const noexcept {
      return v_size_;
    }
    std::uint64_t order() const noexcept {
      return v_size_ * h_.order();
    }

    // Vectors are addressed by their base-q code, coordinate 0 most
    // significant, so code order is lexicographic order.
    Vec vector_at(std::uint64_t code) const;
    std::uint64_t code_of(Vec const& v) const;
    Vec unit(int i) const;
    Vec sub(Vec const& a, Vec const& b) const;

    // v^h
    Vec action(Vec const& v, index_t h) const;
    // C_H(d) = {h : d^h = d}
    std::shared_ptr<Bitset const> centralizer(Vec const& d) const;
    // Basis (reduced row echelon) of the vectors fixed by every element of k.
    std::vector<Vec> fixed_space(Bitset const& k) const;

    // Canonically ordered maximal subgroups of H, and Phi(H).
    std::vector<Subgroup> const& h_maximals() const noexcept {
      return h_max_;
    }
    Subgroup const& h_frattini() const noexcept {
      return *h_phi_;
    }
    std::shared_ptr<Bitset const> h_all() const noexcept {
      return h_all_;
    }
    std::vector<index_t> const& h_generators() const noexcept {
      return h_gens_;
    }

    // Every nonzero vector generates V as an F_q H-module.
    bool v_irreducible() const;
    // Representatives of the H-orbits on V, least code first.
    std::vector<std::uint64_t> orbit_representatives() const;

    // V is a complemented chief factor, then H contributes m(H) = d(H).
    unsigned m_structural() const;

    // Payload of (v, h) in the generic kernel of construct("gqp:p,q").
    Element embed(Vec const& v, index_t h) const;

   private:
    int                           p_, q_;
    WreathAction                  action_;
    std::uint64_t                 v_size_;
    FiniteGroup                   h_;
    std::vector<std::int32_t>     hpay_;  // flattened payloads of H
    std::vector<index_t>          h_gens_;
    std::vector<Subgroup>         h_max_;
    std::shared_ptr<Subgroup>     h_phi_;
    std::shared_ptr<Bitset const> h_all_;
    struct Cache;
    std::shared_ptr<Cache>        cache_;
  };

  // FullV(X) = V x| X, or Affine(v, K) = {(v - v^h, h) : h in K}. `part` is
  // X or K as a set of H-indices.
  struct SymbolicSubgroup {
    enum class Kind { full_v, affine };
    Kind                          kind = Kind::full_v;
    Vec                           offset;
    std::shared_ptr<Bitset const> part;
  };

  SymbolicSubgroup full_v(std::shared_ptr<Bitset const> x);
  SymbolicSubgroup affine(Vec v, std::shared_ptr<Bitset const> k);

  // One-based coordinates where the vectors agree. Rejects equal inputs.
  std::vector<int> delta(Vec const& a, Vec const& b);

  // H^{v_1} meet ... meet H^{v_n} as Affine(v_1, K).
  SymbolicSubgroup conj_meet(GqpGroup const& g, std::vector<Vec> const& vs);

  SymbolicSubgroup sym_intersect(GqpGroup const& g, SymbolicSubgroup const& a,
                                 SymbolicSubgroup const& b);
  bool          sym_equal(GqpGroup const& g, SymbolicSubgroup const& a,
                          SymbolicSubgroup const& b);
  std::uint64_t sym_order(GqpGroup const& g, SymbolicSubgroup const& s);
  bool          sym_contains(GqpGroup const& g, SymbolicSubgroup const& s,
                             Vec const& u, index_t h);
  // Affine offsets reduced to the lexicographically least representative.
  SymbolicSubgroup canonical(GqpGroup const& g, SymbolicSubgroup const& s);
  // Members as a subset of construct(g.spec()); needs an enumerable group.
  Bitset to_dense(GqpGroup const& g, SymbolicSubgroup const& s,
                  FiniteGroup const& dense);

  // Type 1 (Affine(v, H), v in code order) then type 2 (FullV(X), X in the
  // canonical order of h_maximals()).
  std::vector<SymbolicSubgroup> maximal_subgroups_structural(GqpGroup const& g);

  struct SymElement {
    Vec     v;
    index_t h = 0;
  };

  struct SymFamily {
    std::vector<SymbolicSubgroup> members;
    std::vector<SymElement>       witnesses;
  };

  struct SymGPCheck {
    bool      general_position = false;
    SymFamily family;
  };

  SymGPCheck sym_general_position(GqpGroup const&                      g,
                                  std::vector<SymbolicSubgroup> const& family);

  // {H^{e_1}, ..., H^{e_p}} with its witnesses.
  SymFamily lemma33_family(GqpGroup const& g);

  struct MdGqpOptions {
    Budget budget;
    bool   symmetry = true;
  };

  struct MdGqpResult {
    unsigned      value = 0;
    Status        status = Status::exact;
    SymFamily     family;
    std::uint64_t nodes = 0;
  };

  MdGqpResult md_gqp(GqpGroup const& g, MdGqpOptions const& opt = {});

  // m(V x| B), B the base group of H, two ways: the chief-series count of
  // C_q x| C_p times p (m is additive over direct factors here), and an
  // explicit irredundant generating sequence of length 2p checked by
  // closure when |V x| B| <= cap. Omega(|V x| B|) = 2p bounds it above.
  struct BaseCertificate {
    unsigned            chief_value = 0;
    std::optional<bool> sequence_verified;
    unsigned            sequence_length = 0;
  };
  BaseCertificate base_certificate(GqpGroup const& g,
                                   std::size_t     cap = 200000);

  struct InvariantValue {
    unsigned    value = 0;
    Status      status = Status::exact;
    std::string method;
  };

  struct GqpReport {
    InvariantValue  m, md, i;
    MdGqpResult     md_search;
    BaseCertificate base;
  };

  GqpReport invariants_gqp(GqpGroup const& g, Budget md_budget = {});

  std::string format_vec(Vec const& v);

}  // namespace genpos

#endif  // GENPOS_GQP_HPP_

#ifndef GENPOS_GROUP_HPP_
#define GENPOS_GROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genpos/error.hpp"

namespace genpos {

  using index_t = std::uint32_t;

  // Default size caps. The CLI can override them from the environment.
  inline constexpr std::size_t kEnumerationCap = 100000;
  inline constexpr std::size_t kLatticeCap     = 20000;
  inline constexpr std::size_t kSubgroupCap    = 200;
  inline constexpr std::size_t kBruteCap       = 500;

  // Opaque element payload. Each group kind fixes an encoding; the total
  // order on payloads is lexicographic and therefore stable across runs.
  struct Element {
    std::vector<std::int32_t> payload;

    Element() = default;
    explicit Element(std::vector<std::int32_t> p) : payload(std::move(p)) {}

    friend auto operator<=>(Element const&, Element const&) = default;
    friend bool operator==(Element const&, Element const&)  = default;
  };

  struct ElementHash {
    std::size_t operator()(Element const& e) const noexcept;
  };

  // Multiplication oracle for one family of groups. Kernels know nothing
  // about which subset of payloads forms the group; FiniteGroup closes the
  // generators.
  class GroupKernel {
   public:
    virtual ~GroupKernel() = default;

    // Payload length; fixed per kernel instance.
    virtual std::size_t payload_size() const                       = 0;
    virtual Element identity() const                               = 0;
    virtual Element multiply(Element const& a, Element const& b) const = 0;
    virtual Element inverse(Element const& a) const                = 0;
    // Payload has the right shape and ranges for this kernel.
    virtual bool well_formed(Element const& a) const = 0;
    // Every well-formed payload is a group element (true for all structured
    // kinds; false for permutation kernels, where the group is generated).
    virtual bool ambient_is_group() const {
      return true;
    }
    virtual std::string format(Element const& a) const;
  };

  // Immutable handle to a finite group. Copies share state. The dense
  // element index is built lazily (thread-safe) on first use of any
  // index-space member.
  class FiniteGroup {
   public:
    FiniteGroup(std::string                        spec,
                std::shared_ptr<GroupKernel const> kernel,
                std::vector<Element>               generators,
                std::optional<std::uint64_t>       known_order,
                std::size_t enumeration_cap = kEnumerationCap);

    std::string const& spec() const;
    GroupKernel const& kernel() const;
    std::shared_ptr<GroupKernel const> kernel_ptr() const;
    std::vector<Element> const& generators() const;
    std::size_t enumeration_cap() const;

    // Forces enumeration when the order is not known structurally.
    std::uint64_t order() const;
    bool enumerable() const;

    Element identity() const;
    bool contains(Element const& a) const;
    // Both throw NotMemberError for foreign payloads.
    Element mul(Element const& a, Element const& b) const;
    Element inv(Element const& a) const;
    std::string format(Element const& a) const;

    // ---- index space; throws CapExceeded when not enumerable ----
    std::size_t size() const;
    index_t product(index_t a, index_t b) const;
    index_t inverse(index_t a) const;
    Element const& element(index_t i) const;
    std::optional<index_t> find(Element const& a) const;
    index_t index_of(Element const& a) const;
    std::vector<index_t> generator_indices() const;
    // g^-1 a g
    index_t conjugate(index_t a, index_t g) const;
    // a^-1 b^-1 a b
    index_t commutator(index_t a, index_t b) const;
    index_t power(index_t a, std::uint64_t k) const;
    std::uint64_t element_order(index_t a) const;
    bool has_table() const;

    bool same_as(FiniteGroup const& o) const noexcept {
      return impl_ == o.impl_;
    }

   private:
    struct Impl;
    Impl& ensure_enumerated() const;
    std::shared_ptr<Impl> impl_;
  };

  // Order of the group generated by `gens` inside the ambient kernel,
  // without building a dense index. Throws CapExceeded above `cap`.
  std::uint64_t generated_order(GroupKernel const&          kernel,
                                std::vector<Element> const& gens,
                                std::size_t                 cap);

  // Number of prime factors of n counted with multiplicity.
  unsigned omega(std::uint64_t n);
  bool is_prime(std::uint64_t n);
  std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
  // If n = p^k with k >= 1 returns p, else 0.
  std::uint64_t prime_power_base(std::uint64_t n);

}  // namespace genpos

#endif  // GENPOS_GROUP_HPP_

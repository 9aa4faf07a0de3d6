#include "genpos/group.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace genpos {

  namespace {
    // Above this order products go through the kernel plus a hash lookup.
    constexpr std::size_t kTableCap = 2048;
  }  // namespace

  std::size_t ElementHash::operator()(Element const& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e.payload) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string GroupKernel::format(Element const& a) const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.payload.size(); ++i) {
      os << (i ? "," : "") << a.payload[i];
    }
    os << ')';
    return os.str();
  }

  struct FiniteGroup::Impl {
    std::string                        spec;
    std::shared_ptr<GroupKernel const> kernel;
    std::vector<Element>               generators;
    std::optional<std::uint64_t>       known_order;
    std::size_t                        cap;

    std::once_flag                                       once;
    std::vector<Element>                                 elements;
    std::unordered_map<Element, index_t, ElementHash>    index;
    std::vector<index_t>                                 table;
    std::vector<index_t>                                 inverses;

    void enumerate() {
      if (known_order && *known_order > cap) {
        throw CapExceeded(spec + ": order " + std::to_string(*known_order)
                          + " exceeds the enumeration cap "
                          + std::to_string(cap));
      }
      std::unordered_set<Element, ElementHash> seen;
      std::vector<Element>                      queue;
      Element                                   e = kernel->identity();
      seen.insert(e);
      queue.push_back(e);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto const& g : generators) {
          Element y = kernel->multiply(queue[i], g);
          if (seen.insert(y).second) {
            if (seen.size() > cap) {
              throw CapExceeded(spec + ": more than " + std::to_string(cap)
                                + " elements");
            }
            queue.push_back(std::move(y));
          }
        }
      }
      std::sort(queue.begin(), queue.end());
      if (queue.front() != e) {
        // Encodings are chosen so the identity payload is least; keep the
        // invariant index(identity) == 0 regardless.
        auto it = std::find(queue.begin(), queue.end(), e);
        std::rotate(queue.begin(), it, it + 1);
      }
      elements = std::move(queue);
      index.reserve(elements.size());
      for (index_t i = 0; i < elements.size(); ++i) {
        index.emplace(elements[i], i);
      }
      if (known_order && *known_order != elements.size()) {
        throw PreconditionError(spec + ": generators produce "
                                + std::to_string(elements.size())
                                + " elements, expected "
                                + std::to_string(*known_order));
      }
      known_order = elements.size();
      std::size_t n = elements.size();
      inverses.resize(n);
      if (n <= kTableCap) {
        table.resize(n * n);
        for (index_t a = 0; a < n; ++a) {
          for (index_t b = 0; b < n; ++b) {
            table[a * n + b]
                = index.at(kernel->multiply(elements[a], elements[b]));
          }
        }
        for (index_t a = 0; a < n; ++a) {
          for (index_t b = 0; b < n; ++b) {
            if (table[a * n + b] == 0) {
              inverses[a] = b;
              break;
            }
          }
        }
      } else {
        for (index_t a = 0; a < n; ++a) {
          inverses[a] = index.at(kernel->inverse(elements[a]));
        }
      }
    }
  };

  FiniteGroup::FiniteGroup(std::string                        spec,
                           std::shared_ptr<GroupKernel const> kernel,
                           std::vector<Element>               generators,
                           std::optional<std::uint64_t>       known_order,
                           std::size_t enumeration_cap)
      : impl_(std::make_shared<Impl>()) {
    impl_->spec        = std::move(spec);
    impl_->kernel      = std::move(kernel);
    impl_->known_order = known_order;
    impl_->cap         = enumeration_cap;
    for (auto& g : generators) {
      if (!impl_->kernel->well_formed(g)) {
        throw PreconditionError(impl_->spec + ": malformed generator "
                                + impl_->kernel->format(g));
      }
      if (g != impl_->kernel->identity()) {
        impl_->generators.push_back(std::move(g));
      }
    }
  }

  FiniteGroup::Impl& FiniteGroup::ensure_enumerated() const {
    std::call_once(impl_->once, [this] { impl_->enumerate(); });
    return *impl_;
  }

  std::string const& FiniteGroup::spec() const {
    return impl_->spec;
  }
  GroupKernel const& FiniteGroup::kernel() const {
    return *impl_->kernel;
  }
  std::shared_ptr<GroupKernel const> FiniteGroup::kernel_ptr() const {
    return impl_->kernel;
  }
  std::vector<Element> const& FiniteGroup::generators() const {
    return impl_->generators;
  }
  std::size_t FiniteGroup::enumeration_cap() const {
    return impl_->cap;
  }

  std::uint64_t FiniteGroup::order() const {
    if (impl_->known_order) {
      return *impl_->known_order;
    }
    return ensure_enumerated().elements.size();
  }

  bool FiniteGroup::enumerable() const {
    if (impl_->known_order) {
      return *impl_->known_order <= impl_->cap;
    }
    try {
      ensure_enumerated();
      return true;
    } catch (CapExceeded const&) {
      return false;
    }
  }

  Element FiniteGroup::identity() const {
    return impl_->kernel->identity();
  }

  bool FiniteGroup::contains(Element const& a) const {
    if (!impl_->kernel->well_formed(a)) {
      return false;
    }
    if (impl_->kernel->ambient_is_group() && impl_->known_order) {
      return true;
    }
    return ensure_enumerated().index.count(a) != 0;
  }

  Element FiniteGroup::mul(Element const& a, Element const& b) const {
    if (!contains(a) || !contains(b)) {
      throw NotMemberError(impl_->spec + ": operand is not a group element");
    }
    return impl_->kernel->multiply(a, b);
  }

  Element FiniteGroup::inv(Element const& a) const {
    if (!contains(a)) {
      throw NotMemberError(impl_->spec + ": operand is not a group element");
    }
    return impl_->kernel->inverse(a);
  }

  std::string FiniteGroup::format(Element const& a) const {
    return impl_->kernel->format(a);
  }

  std::size_t FiniteGroup::size() const {
    return ensure_enumerated().elements.size();
  }

  index_t FiniteGroup::product(index_t a, index_t b) const {
    auto& d = ensure_enumerated();
    if (!d.table.empty()) {
      return d.table[a * d.elements.size() + b];
    }
    return d.index.at(d.kernel->multiply(d.elements[a], d.elements[b]));
  }

  index_t FiniteGroup::inverse(index_t a) const {
    return ensure_enumerated().inverses[a];
  }

  Element const& FiniteGroup::element(index_t i) const {
    return ensure_enumerated().elements.at(i);
  }

  std::optional<index_t> FiniteGroup::find(Element const& a) const {
    auto& d  = ensure_enumerated();
    auto  it = d.index.find(a);
    if (it == d.index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  index_t FiniteGroup::index_of(Element const& a) const {
    auto i = find(a);
    if (!i) {
      throw NotMemberError(impl_->spec + ": " + impl_->kernel->format(a)
                           + " is not a group element");
    }
    return *i;
  }

  std::vector<index_t> FiniteGroup::generator_indices() const {
    std::vector<index_t> out;
    for (auto const& g : impl_->generators) {
      out.push_back(index_of(g));
    }
    return out;
  }

  index_t FiniteGroup::conjugate(index_t a, index_t g) const {
    return product(product(inverse(g), a), g);
  }

  index_t FiniteGroup::commutator(index_t a, index_t b) const {
    return product(product(inverse(a), inverse(b)), product(a, b));
  }

  index_t FiniteGroup::power(index_t a, std::uint64_t k) const {
    index_t result = 0;
    index_t base   = a;
    while (k != 0) {
      if (k & 1u) {
        result = product(result, base);
      }
      base = product(base, base);
      k >>= 1u;
    }
    return result;
  }

  std::uint64_t FiniteGroup::element_order(index_t a) const {
    std::uint64_t k = 1;
    index_t       x = a;
    while (x != 0) {
      x = product(x, a);
      ++k;
    }
    return k;
  }

  bool FiniteGroup::has_table() const {
    return !ensure_enumerated().table.empty();
  }

  std::uint64_t generated_order(GroupKernel const&          kernel,
                                std::vector<Element> const& gens,
                                std::size_t                 cap) {
    std::unordered_set<Element, ElementHash> seen;
    std::vector<Element>                      queue{kernel.identity()};
    seen.insert(queue.front());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& g : gens) {
        Element y = kernel.multiply(queue[i], g);
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            throw CapExceeded("generated subgroup exceeds "
                              + std::to_string(cap) + " elements");
          }
          queue.push_back(std::move(y));
        }
      }
    }
    return queue.size();
  }

  unsigned omega(std::uint64_t n) {
    unsigned c = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      while (n % d == 0) {
        n /= d;
        ++c;
      }
    }
    return n > 1 ? c + 1 : c;
  }

  bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        while (n % d == 0) {
          n /= d;
        }
      }
    }
    if (n > 1) {
      out.push_back(n);
    }
    return out;
  }

  std::uint64_t prime_power_base(std::uint64_t n) {
    auto ps = prime_divisors(n);
    return ps.size() == 1 ? ps.front() : 0;
  }

}  // namespace genpos

#ifndef GENPOS_BITSET_HPP_
#define GENPOS_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace genpos {

  // Dense set of element indices. Subgroup meets are word-wise ANDs over
  // these, so the layout is kept flat and the hot operations inline.
  class Bitset {
   public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + word_bits - 1) / word_bits, 0) {}

    static Bitset full(std::size_t nbits) {
      Bitset b(nbits);
      for (auto& w : b.words_) {
        w = ~word_type{0};
      }
      b.trim();
      return b;
    }

    std::size_t size() const noexcept {
      return nbits_;
    }

    bool test(std::size_t i) const noexcept {
      return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }
    void set(std::size_t i) noexcept {
      words_[i / word_bits] |= word_type{1} << (i % word_bits);
    }
    void reset(std::size_t i) noexcept {
      words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    bool none() const noexcept {
      for (auto w : words_) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    Bitset& operator&=(Bitset const& o) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= o.words_[i];
      }
      return *this;
    }
    Bitset& operator|=(Bitset const& o) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= o.words_[i];
      }
      return *this;
    }
    // this := this \ o
    Bitset& subtract(Bitset const& o) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~o.words_[i];
      }
      return *this;
    }

    friend Bitset operator&(Bitset a, Bitset const& b) noexcept {
      a &= b;
      return a;
    }
    friend Bitset operator|(Bitset a, Bitset const& b) noexcept {
      a |= b;
      return a;
    }

    // |this & o| without materializing the meet.
    std::size_t count_and(Bitset const& o) const noexcept {
      std::size_t c = 0;
      for (std::size_t i = 0; i < words_.size(); ++i) {
        c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
      }
      return c;
    }

    bool is_subset_of(Bitset const& o) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~o.words_[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool intersects(Bitset const& o) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & o.words_[i]) != 0) {
          return true;
        }
      }
      return false;
    }

    // Index of the first set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const noexcept {
      if (from >= nbits_) {
        return nbits_;
      }
      std::size_t wi = from / word_bits;
      word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
      while (true) {
        if (w != 0) {
          std::size_t r = wi * word_bits + std::countr_zero(w);
          return r < nbits_ ? r : nbits_;
        }
        if (++wi == words_.size()) {
          return nbits_;
        }
        w = words_[wi];
      }
    }
    std::size_t find_first() const noexcept {
      return find_next(0);
    }

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        word_type w = words_[wi];
        while (w != 0) {
          f(wi * word_bits + std::countr_zero(w));
          w &= w - 1;
        }
      }
    }

    std::vector<std::size_t> to_vector() const {
      std::vector<std::size_t> out;
      out.reserve(count());
      for_each([&out](std::size_t i) { out.push_back(i); });
      return out;
    }

    friend bool operator==(Bitset const& a, Bitset const& b) noexcept {
      return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    // Lexicographic order on the bit string b_0 b_1 ... b_{n-1} with 0 < 1:
    // at the first differing index the smaller set has the 0.
    friend bool lex_less(Bitset const& a, Bitset const& b) noexcept {
      for (std::size_t i = 0; i < a.words_.size(); ++i) {
        word_type d = a.words_[i] ^ b.words_[i];
        if (d != 0) {
          word_type low = d & (~d + 1);
          return (a.words_[i] & low) == 0;
        }
      }
      return false;
    }

    std::size_t hash() const noexcept {
      std::size_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
      for (auto w : words_) {
        h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6)
             + (h >> 2);
      }
      return h;
    }

    std::vector<word_type> const& words() const noexcept {
      return words_;
    }

   private:
    void trim() noexcept {
      std::size_t extra = words_.size() * word_bits - nbits_;
      if (extra != 0 && !words_.empty()) {
        words_.back() &= ~word_type{0} >> extra;
      }
    }

    std::size_t nbits_ = 0;
    std::vector<word_type> words_;
  };

  struct BitsetHash {
    std::size_t operator()(Bitset const& b) const noexcept {
      return b.hash();
    }
  };

}  // namespace genpos

#endif  // GENPOS_BITSET_HPP_

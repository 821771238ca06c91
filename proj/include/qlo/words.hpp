#ifndef QLO_WORDS_HPP_
#define QLO_WORDS_HPP_

// Free groups and free monoids on a finite alphabet: freely reduced words,
// prefix/suffix algebra, the quasi-lattice (F, F+) and the Scarparo cone
// {e} u bF+ inside F(a, b).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qlo/element.hpp"

namespace qlo {

  using Gen = std::uint32_t;

  struct Letter {
    Gen gen  = 0;
    int sign = 1;  // +1 or -1

    constexpr Letter inverse() const noexcept {
      return Letter{gen, -sign};
    }
    constexpr bool is_positive() const noexcept {
      return sign > 0;
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter, Letter) = default;
  };

  // A freely reduced word over an alphabet of `rank` generators. The empty
  // word is the identity. Every constructor path reduces, so an FWord is
  // always canonical and equality is equality in F.
  class FWord {
   public:
    FWord() = default;
    explicit FWord(std::size_t rank) : rank_(rank) {}

    static FWord reduce(std::size_t rank, std::span<Letter const> raw);
    static FWord from_positive(std::size_t rank, std::span<Gen const> gens);
    static FWord generator(std::size_t rank, Gen g, int sign = 1);

    std::size_t rank() const noexcept {
      return rank_;
    }
    std::span<Letter const> letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Letter front() const {
      return letters_.front();
    }
    Letter back() const {
      return letters_.back();
    }

    // Subwords of a reduced word are reduced.
    FWord prefix(std::size_t n) const;
    FWord suffix(std::size_t n) const;
    FWord drop_prefix(std::size_t n) const {
      return suffix(size() - n);
    }
    FWord drop_suffix(std::size_t n) const {
      return prefix(size() - n);
    }

    friend bool operator==(FWord const&, FWord const&) = default;
    friend auto operator<=>(FWord const&, FWord const&) = default;

   private:
    std::size_t         rank_ = 0;
    std::vector<Letter> letters_;
  };

  FWord mul(FWord const& x, FWord const& y);
  FWord inv(FWord const& x);
  FWord pow(FWord const& x, std::int64_t k);

  // Exponent sum of a generator.
  std::int64_t exponent_sum(FWord const& x, Gen g);

  bool is_prefix(FWord const& p, FWord const& w);
  bool is_suffix(FWord const& s, FWord const& w);

  bool fplus_is_positive(FWord const& x);

  // Join in (F, F+): the longer word when one is a prefix of the other.
  BasicJoin<FWord> fplus_join(FWord const& x, FWord const& y);

  // The Scarparo cone in F(a, b) (a = 0, b = 1): e, or positive words
  // starting with b.
  bool             scarparo_is_positive(FWord const& x);
  BasicJoin<FWord> scarparo_join(FWord const& x, FWord const& y);

  // Longest word that is a suffix of both h and u.
  FWord largest_common_suffix(FWord const& h, FWord const& u);

  // "a b^2 a^-1" using the supplied generator names; "e" for the identity.
  std::string to_string(FWord const& x, std::span<std::string const> names);

  // Letters are encoded as +(gen + 1) / -(gen + 1).
  void  encode(FWord const& x, std::vector<Element::value_type>& out);
  FWord decode_fword(std::size_t                         rank,
                     std::span<Element::value_type const> code);

}  // namespace qlo

#endif  // QLO_WORDS_HPP_

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgog {

/// One syllable g^e of a word; `gen` indexes the owning generator list.
struct Letter {
  std::size_t gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(Letter const&, Letter const&) = default;
};

/// A freely reduced word over integer generator ids.
///
/// Reduction is eager: adjacent syllables on the same generator are merged
/// and zero exponents dropped, so two words are equal as free-group
/// elements iff they compare equal.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::size_t gen, std::int64_t exp = 1);
  /// [a,b] = a^-1 b^-1 a b
  static Word commutator(Word const& a, Word const& b);

  std::vector<Letter> const& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Sum of |exponent| over syllables.
  std::size_t length() const noexcept;

  Word inverse() const;
  Word pow(std::int64_t e) const;
  Word operator*(Word const& rhs) const;

  /// Replace every generator g by images[g].
  Word substitute(std::span<Word const> images) const;
  /// Renumber generators; gen -> remap(gen).
  Word renumber(std::function<std::size_t(std::size_t)> const& remap) const;
  /// Delete every syllable whose generator satisfies `drop`, then reduce.
  Word erase_if(std::function<bool(std::size_t)> const& drop) const;

  /// Signed letter expansion: g^3 -> (+g,+g,+g), with +g encoded as 2g and
  /// g^-1 as 2g+1.
  std::vector<std::size_t> expand() const;
  static Word from_expanded(std::span<std::size_t const> letters);

  /// Largest generator id used plus one (0 for the empty word).
  std::size_t generator_bound() const noexcept;
  bool uses(std::size_t gen) const noexcept;

  std::string to_string(std::span<std::string const> names) const;

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const& a, Word const& b) {
    return a.expand() <=> b.expand();
  }

 private:
  std::vector<Letter> letters_;
};

using GeneratorResolver = std::function<std::size_t(std::string_view)>;

/// Parse a word expression. Grammar:
///   expr   := factor (('*' | ws) factor)*
///   factor := atom ('^' '-'? digits)?
///   atom   := ident | '1' | '(' expr ')' | '[' expr ',' expr ']'
/// Identifiers are resolved through `resolve`, which throws on unknown names.
Word parse_word(std::string_view text, GeneratorResolver const& resolve);

}  // namespace pgog

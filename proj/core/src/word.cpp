#include "pgog/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "pgog/error.hpp"

namespace pgog {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (l.exp == 0) return;
  if (!out.empty() && out.back().gen == l.gen) {
    out.back().exp += l.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(l);
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter const& l : letters) push_reduced(letters_, l);
}

Word Word::generator(std::size_t gen, std::int64_t exp) {
  return Word({Letter{gen, exp}});
}

Word Word::commutator(Word const& a, Word const& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (Letter const& l : letters_) n += static_cast<std::size_t>(std::llabs(l.exp));
  return n;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(Letter{it->gen, -it->exp});
  }
  return w;
}

Word Word::pow(std::int64_t e) const {
  Word base = e < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t i = 0; i < std::llabs(e); ++i) out = out * base;
  return out;
}

Word Word::operator*(Word const& rhs) const {
  Word w = *this;
  for (Letter const& l : rhs.letters_) push_reduced(w.letters_, l);
  return w;
}

Word Word::substitute(std::span<Word const> images) const {
  Word out;
  for (Letter const& l : letters_) {
    if (l.gen >= images.size()) {
      throw Error("substitution has no image for generator " + std::to_string(l.gen));
    }
    out = out * images[l.gen].pow(l.exp);
  }
  return out;
}

Word Word::renumber(std::function<std::size_t(std::size_t)> const& remap) const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  for (Letter const& l : letters_) ls.push_back(Letter{remap(l.gen), l.exp});
  return Word(std::move(ls));
}

Word Word::erase_if(std::function<bool(std::size_t)> const& drop) const {
  std::vector<Letter> ls;
  for (Letter const& l : letters_) {
    if (!drop(l.gen)) ls.push_back(l);
  }
  return Word(std::move(ls));
}

std::vector<std::size_t> Word::expand() const {
  std::vector<std::size_t> out;
  out.reserve(length());
  for (Letter const& l : letters_) {
    std::size_t code = 2 * l.gen + (l.exp < 0 ? 1 : 0);
    for (std::int64_t i = 0; i < std::llabs(l.exp); ++i) out.push_back(code);
  }
  return out;
}

Word Word::from_expanded(std::span<std::size_t const> letters) {
  std::vector<Letter> ls;
  ls.reserve(letters.size());
  for (std::size_t c : letters) ls.push_back(Letter{c / 2, (c & 1) ? -1 : 1});
  return Word(std::move(ls));
}

std::size_t Word::generator_bound() const noexcept {
  std::size_t b = 0;
  for (Letter const& l : letters_) b = std::max(b, l.gen + 1);
  return b;
}

bool Word::uses(std::size_t gen) const noexcept {
  return std::any_of(letters_.begin(), letters_.end(),
                     [gen](Letter const& l) { return l.gen == gen; });
}

std::string Word::to_string(std::span<std::string const> names) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (Letter const& l : letters_) {
    if (!s.empty()) s += ' ';
    s += l.gen < names.size() ? names[l.gen] : "g" + std::to_string(l.gen);
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, GeneratorResolver const& resolve)
      : text_(text), resolve_(resolve) {}

  Word parse() {
    Word w = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError(what, 1, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '[' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  Word expr() {
    if (!at_factor_start()) fail("expected a word");
    Word w = factor();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        w = w * factor();
      } else if (at_factor_start()) {
        w = w * factor();
      } else {
        return w;
      }
    }
  }

  Word factor() {
    Word a = atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      std::int64_t e = std::stoll(std::string(text_.substr(start, pos_ - start)));
      a = a.pow(neg ? -e : e);
    }
    return a;
  }

  Word atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of word");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = expr();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word a = expr();
      expect(',');
      Word b = expr();
      expect(']');
      return Word::commutator(a, b);
    }
    if (c == '1' && (pos_ + 1 == text_.size() ||
                     !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return Word{};
    }
    if (c == '_' || std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '.')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      std::size_t saved = pos_;
      pos_ = start;
      try {
        std::size_t g = resolve_(name);
        pos_ = saved;
        return Word::generator(g);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        fail(e.what());
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  GeneratorResolver const& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, GeneratorResolver const& resolve) {
  return WordParser(text, resolve).parse();
}

}  // namespace pgog

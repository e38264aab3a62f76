#include "pgog/dsl.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include "pgog/error.hpp"
#include "pgog/tower.hpp"
#include "pgog/witness_models.hpp"

namespace pgog {

namespace {

struct ModelKind {
  std::vector<std::string> params;
  std::function<ModelPtr(std::vector<std::uint32_t> const&)> build;
};

std::map<std::string, ModelKind> const& kinds() {
  static std::map<std::string, ModelKind> const table = {
      {"Gn", {{"p", "n"}, [](auto const& a) { return make_gn(a[0], a[1]); }}},
      {"GnUntwisted", {{"p", "n"}, [](auto const& a) { return make_gn(a[0], a[1], false); }}},
      {"Fn", {{"p", "n"}, [](auto const& a) { return make_fn(a[0], a[1]); }}},
      {"Heisenberg", {{"p"}, [](auto const& a) { return make_heisenberg(a[0]); }}},
      {"Lamplighter", {{"p", "n"}, [](auto const& a) { return make_lamplighter(a[0], a[1]); }}},
      {"En", {{"p", "n"}, [](auto const& a) { return make_en_witness(a[0], a[1]); }}},
      {"Abelian",
       {{"p", "rank"},
        [](auto const& a) {
          std::vector<std::string> basis;
          for (std::uint32_t i = 0; i < a[1]; ++i) basis.push_back("e" + std::to_string(i));
          return make_elementary_abelian(a[0], std::move(basis));
        }}},
      {"G", {{"p", "n"}, [](auto const& a) { return make_g(a[0], a[1]); }}},
      {"K", {{"p", "n"}, [](auto const& a) { return make_k(a[0], a[1]); }}},
      {"H", {{"p", "n"}, [](auto const& a) { return make_h(a[0], a[1]); }}},
      {"Chain", {{"p", "l"}, [](auto const& a) { return make_chain_witness(a[0], a[1], false); }}},
      {"ChainCyclic",
       {{"p", "l"}, [](auto const& a) { return make_chain_witness(a[0], a[1], true); }}},
  };
  return table;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

/// Cursor over one logical line; columns are 1-based within that line.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t offset = 0)
      : text_(text), line_(line), pos_(offset) {}

  [[noreturn]] void fail(std::string const& what, std::size_t at) const {
    throw ParseError(what, line_, at + 1);
  }
  [[noreturn]] void fail(std::string const& what) const { fail(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  std::size_t pos() const noexcept { return pos_; }
  std::size_t line() const noexcept { return line_; }
  std::string_view text() const noexcept { return text_; }
  void seek(std::size_t p) { pos_ = p; }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    std::size_t end = pos_ + tok.size();
    if (ident_start(tok.back()) && end < text_.size() && ident_char(text_[end])) return false;
    pos_ = end;
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected an identifier");
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::optional<std::string> peek_ident() {
    std::size_t saved = pos_;
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) {
      pos_ = saved;
      return std::nullopt;
    }
    std::string id = ident();
    pos_ = saved;
    return id;
  }
  std::uint32_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    unsigned long v = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (v > 0xFFFFFFFFul) fail("number out of range", start);
    return static_cast<std::uint32_t>(v);
  }
  /// Text up to (not including) the first top-level occurrence of any stop
  /// keyword or character in `stops`, or the end of the line.
  std::pair<std::string, std::size_t> until(std::vector<std::string_view> const& stops) {
    skip_ws();
    std::size_t const start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (depth == 0) {
        for (std::string_view s : stops) {
          if (text_.substr(pos_, s.size()) != s) continue;
          bool word = ident_start(s.front());
          bool left_ok = !word || pos_ == 0 || !ident_char(text_[pos_ - 1]);
          std::size_t end = pos_ + s.size();
          bool right_ok = !word || end >= text_.size() || !ident_char(text_[end]);
          if (left_ok && right_ok) return {trim(start, pos_), start};
        }
      }
      ++pos_;
    }
    return {trim(start, pos_), start};
  }

 private:
  std::string trim(std::size_t a, std::size_t b) const {
    while (b > a && std::isspace(static_cast<unsigned char>(text_[b - 1]))) --b;
    return std::string(text_.substr(a, b - a));
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_;
};

ModelPtr parse_model(Cursor& cur, std::uint32_t default_p) {
  std::size_t const at = cur.pos();
  std::string name = cur.ident();
  cur.expect("(");
  if (name == "Product") {
    ModelPtr a = parse_model(cur, default_p);
    cur.expect(",");
    ModelPtr b = parse_model(cur, default_p);
    cur.expect(")");
    return make_direct_product(a, b);
  }
  auto it = kinds().find(name);
  if (it == kinds().end()) cur.fail("unknown model '" + name + "'", at);
  ModelKind const& kind = it->second;
  std::map<std::string, std::uint32_t> named;
  std::vector<std::uint32_t> positional;
  if (!cur.accept(")")) {
    do {
      auto id = cur.peek_ident();
      if (id) {
        std::size_t kat = cur.pos();
        std::string key = cur.ident();
        cur.expect("=");
        if (std::find(kind.params.begin(), kind.params.end(), key) == kind.params.end()) {
          cur.fail(name + " has no parameter '" + key + "'", kat);
        }
        if (!named.emplace(key, cur.number()).second) cur.fail("parameter given twice", kat);
      } else {
        positional.push_back(cur.number());
      }
    } while (cur.accept(","));
    cur.expect(")");
  }
  std::vector<std::string> missing;
  for (std::string const& p : kind.params) {
    if (!named.contains(p)) missing.push_back(p);
  }
  if (!named.contains("p") && default_p && positional.size() + 1 == missing.size()) {
    named["p"] = default_p;
    missing.erase(missing.begin());
  }
  if (positional.size() != missing.size()) {
    cur.fail(name + " expects " + std::to_string(kind.params.size()) + " parameters", at);
  }
  for (std::size_t i = 0; i < missing.size(); ++i) named[missing[i]] = positional[i];
  std::vector<std::uint32_t> args;
  for (std::string const& p : kind.params) args.push_back(named[p]);
  try {
    return kind.build(args);
  } catch (ParseError const&) {
    throw;
  } catch (Error const& e) {
    cur.fail(e.what(), at);
  }
}

/// Model spec optionally followed by "gens a b c".
ModelPtr parse_model_with_names(Cursor& cur, std::uint32_t default_p,
                                std::vector<std::string_view> const& stops) {
  ModelPtr m = parse_model(cur, default_p);
  if (cur.accept("gens")) {
    std::vector<std::string> names;
    std::size_t at = cur.pos();
    while (!cur.done()) {
      bool stop = false;
      for (std::string_view s : stops) {
        std::size_t saved = cur.pos();
        if (cur.accept(s)) {
          cur.seek(saved);
          stop = true;
          break;
        }
      }
      if (stop) break;
      names.push_back(cur.ident());
    }
    try {
      m = rename_generators(m, names);
    } catch (Error const& e) {
      cur.fail(e.what(), at);
    }
  }
  return m;
}

/// "g->word, g->word" with commas inside brackets left alone.
std::map<std::string, std::string> parse_maps(Cursor& cur,
                                              std::vector<std::string_view> const& stops) {
  std::map<std::string, std::string> out;
  while (!cur.done()) {
    for (std::string_view s : stops) {
      std::size_t saved = cur.pos();
      if (cur.accept(s)) {
        cur.seek(saved);
        return out;
      }
    }
    std::size_t at = cur.pos();
    std::string key = cur.ident();
    cur.expect("->");
    std::vector<std::string_view> ends = stops;
    ends.push_back(",");
    auto [word, wat] = cur.until(ends);
    if (word.empty()) cur.fail("missing image for " + key, wat);
    if (!out.emplace(key, word).second) cur.fail("'" + key + "' mapped twice", at);
    if (!cur.accept(",")) break;
  }
  return out;
}

Word parse_word_at(Cursor const& cur, std::string const& text, std::size_t at,
                   FinitePresentation const& pres) {
  try {
    return pres.word(text);
  } catch (ParseError const& e) {
    throw ParseError(e.reason(), cur.line(), at + e.column());
  } catch (Error const& e) {
    throw ParseError(e.what(), cur.line(), at + 1);
  }
}

}  // namespace

ModelPtr make_model(std::string_view text, std::uint32_t default_p) {
  Cursor cur(text, 1);
  ModelPtr m = parse_model(cur, default_p);
  if (!cur.done()) cur.fail("trailing text after model");
  return m;
}

std::vector<std::pair<std::string, std::string>> model_catalogue() {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto const& [name, kind] : kinds()) {
    std::string params;
    for (std::string const& p : kind.params) params += (params.empty() ? "" : ",") + p;
    out.emplace_back(name, params);
  }
  out.emplace_back("Product", "A,B");
  return out;
}

FinitePresentation const* DslDocument::presentation(std::string_view name) const {
  for (auto const& [n, p] : presentations) {
    if (n == name) return &p;
  }
  return nullptr;
}

DslDocument parse_dsl(std::string_view text) {
  DslDocument doc;
  FinitePresentation* current = nullptr;
  auto ensure_current = [&]() {
    if (!current) {
      doc.presentations.emplace_back("main", FinitePresentation{});
      current = &doc.presentations.back().second;
    }
    return current;
  };

  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::size_t lineno = 0;
    std::string pending;
    std::size_t pending_line = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++lineno;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
      bool cont = !raw.empty() && raw.back() == '\\';
      if (cont) raw.pop_back();
      if (pending.empty()) pending_line = lineno;
      pending += pending.empty() ? raw : " " + raw;
      if (cont) continue;
      lines.emplace_back(pending_line, pending);
      pending.clear();
    }
    if (!pending.empty()) lines.emplace_back(pending_line, pending);
  }

  for (auto const& [lineno, line] : lines) {
    Cursor cur(line, lineno);
    if (cur.done()) continue;
    std::size_t const kw_at = cur.pos();
    std::string const kw = cur.ident();

    if (kw == "prime") {
      std::size_t at = cur.pos();
      doc.prime = cur.number();
      if (doc.prime < 2) cur.fail("prime must be at least 2", at);
    } else if (kw == "presentation") {
      std::string name = cur.ident();
      if (doc.presentation(name)) cur.fail("presentation '" + name + "' already defined");
      doc.presentations.emplace_back(name, FinitePresentation{});
      current = &doc.presentations.back().second;
    } else if (kw == "gens") {
      FinitePresentation* pres = ensure_current();
      while (!cur.done()) {
        std::size_t at = cur.pos();
        std::string g = cur.ident();
        try {
          pres->add_generator(g);
        } catch (Error const& e) {
          cur.fail(e.what(), at);
        }
      }
    } else if (kw == "rel") {
      FinitePresentation* pres = ensure_current();
      auto [lhs, lat] = cur.until({"="});
      if (lhs.empty()) cur.fail("empty relator", lat);
      Word l = parse_word_at(cur, lhs, lat, *pres);
      if (cur.accept("=")) {
        auto [rhs, rat] = cur.until({});
        if (rhs.empty()) cur.fail("missing right-hand side", rat);
        pres->add_relation(l, parse_word_at(cur, rhs, rat, *pres));
      } else {
        pres->add_relator(l);
      }
    } else if (kw == "vertex") {
      std::string name = cur.ident();
      cur.expect(":");
      if (!doc.graph) doc.graph.emplace();
      try {
        if (cur.accept("presentation")) {
          std::size_t at = cur.pos();
          std::string pname = cur.ident();
          auto const* pres = doc.presentation(pname);
          if (!pres) cur.fail("unknown presentation '" + pname + "'", at);
          doc.graph->add_vertex(name, *pres);
        } else {
          doc.graph->add_vertex(name, parse_model_with_names(cur, doc.prime, {}));
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        cur.fail(e.what(), kw_at);
      }
    } else if (kw == "edge") {
      std::string name = cur.ident();
      cur.expect(":");
      if (!doc.graph) cur.fail("edge before any vertex", kw_at);
      ModelPtr model = parse_model_with_names(cur, doc.prime, {"from"});
      cur.expect("from");
      std::string from = cur.ident();
      cur.expect("to");
      std::string to = cur.ident();
      cur.accept("with");
      cur.expect("d0:");
      std::size_t d0_at = cur.pos();
      auto d0 = parse_maps(cur, {"d1:"});
      cur.expect("d1:");
      std::size_t d1_at = cur.pos();
      auto d1 = parse_maps(cur, {});
      if (!cur.done()) cur.fail("trailing text");
      try {
        doc.graph->add_edge(name, model, from, to, d0, d1);
      } catch (ParseError const& e) {
        throw ParseError(e.reason(), lineno, d0_at + 1);
      } catch (Error const& e) {
        std::string what = e.what();
        cur.fail(what, what.find(" d1") != std::string::npos ? d1_at : d0_at);
      }
    } else if (kw == "witness") {
      WitnessDecl w;
      w.name = cur.ident();
      cur.expect(":");
      w.target = parse_model_with_names(cur, doc.prime, {"map"});
      cur.expect("map");
      w.images = parse_maps(cur, {});
      doc.witnesses.push_back(std::move(w));
    } else if (kw == "word") {
      std::string name = cur.ident();
      cur.expect("=");
      auto [body, at] = cur.until({});
      if (body.empty()) cur.fail("empty word", at);
      doc.words.emplace_back(name, body);
    } else {
      cur.fail("unknown statement '" + kw + "'", kw_at);
    }
    if (!cur.done()) cur.fail("trailing text");
  }
  return doc;
}

DslDocument parse_dsl_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dsl(ss.str());
}

}  // namespace pgog

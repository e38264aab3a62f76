#include "pgog/presentation.hpp"

#include <algorithm>
#include <utility>

#include "pgog/error.hpp"

namespace pgog {

FinitePresentation::FinitePresentation(std::vector<std::string> generators) {
  for (auto& g : generators) add_generator(std::move(g));
}

std::size_t FinitePresentation::add_generator(std::string name) {
  if (name.empty()) throw Error("generator names must be non-empty");
  if (find(name)) throw Error("duplicate generator '" + name + "'");
  generators_.push_back(std::move(name));
  return generators_.size() - 1;
}

void FinitePresentation::add_relator(Word w) {
  if (w.generator_bound() > generators_.size()) {
    throw Error("relator uses an undeclared generator");
  }
  relators_.push_back(std::move(w));
}

void FinitePresentation::add_relation(Word const& lhs, Word const& rhs) {
  add_relator(rhs.inverse() * lhs);
}

std::optional<std::size_t> FinitePresentation::find(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

std::size_t FinitePresentation::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown generator '" + std::string(name) + "'");
}

Word FinitePresentation::word(std::string_view text) const {
  return parse_word(text, [this](std::string_view n) { return index_of(n); });
}

FinitePresentation FinitePresentation::prefixed(std::string const& prefix) const {
  FinitePresentation out;
  for (auto const& g : generators_) out.add_generator(prefix + g);
  for (auto const& r : relators_) out.add_relator(r);
  return out;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::uint32_t p) {
  auto const P = static_cast<std::int64_t>(p);
  auto mod = [P](std::int64_t v) { return ((v % P) + P) % P; };
  auto inv = [P, &mod](std::int64_t a) {
    // Fermat: a^(p-2) mod p
    std::int64_t r = 1, b = mod(a), e = P - 2;
    while (e > 0) {
      if (e & 1) r = r * b % P;
      b = b * b % P;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : rows) {
    for (auto& v : row) v = mod(v);
  }
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    std::int64_t s = inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = v * s % P;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::int64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = mod(rows[r][k] - f * rows[rank][k]);
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::vector<std::int64_t>> exponent_matrix(FinitePresentation const& pres) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(pres.relators().size());
  for (Word const& r : pres.relators()) {
    std::vector<std::int64_t> row(pres.generator_count(), 0);
    for (Letter const& l : r.letters()) row[l.gen] += l.exp;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::size_t mod_p_rank(FinitePresentation const& pres, std::uint32_t p) {
  return pres.generator_count() - rank_mod_p(exponent_matrix(pres), p);
}

bool generates_mod_frattini(FinitePresentation const& pres, std::uint32_t p,
                            std::vector<std::size_t> const& subset) {
  auto rows = exponent_matrix(pres);
  std::size_t base = rank_mod_p(rows, p);
  for (std::size_t g : subset) {
    if (g >= pres.generator_count()) throw Error("generator index out of range");
    std::vector<std::int64_t> row(pres.generator_count(), 0);
    row[g] = 1;
    rows.push_back(std::move(row));
  }
  (void)base;
  return rank_mod_p(std::move(rows), p) == pres.generator_count();
}

}  // namespace pgog

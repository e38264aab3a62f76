#include "pgog/coset_enumeration.hpp"

#include <cstddef>
#include <deque>
#include <limits>

#include "pgog/error.hpp"

namespace pgog {

namespace {

constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

class Enumerator {
 public:
  Enumerator(std::size_t gens, std::size_t max_cosets) : cols_(2 * gens), max_(max_cosets) {
    new_coset();
  }

  bool full() const { return table_.size() >= max_; }
  bool live(std::size_t c) const { return parent_[c] == c; }
  std::size_t size() const { return table_.size(); }

  bool define(std::size_t c, std::size_t x) {
    if (full()) return false;
    std::size_t d = new_coset();
    table_[c][x] = d;
    table_[d][x ^ 1] = c;
    return true;
  }

  /// Scan w from c, filling gaps when `fill` is set. Returns false if a
  /// definition was needed but the table is full.
  bool scan(std::size_t c, std::vector<std::size_t> const& w, bool fill) {
    if (w.empty()) return true;
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && table_[b][w[j] ^ 1] != kUndefined) b = table_[b][w[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][w[i] ^ 1] = f;
        return true;
      }
      if (!fill || !define(f, w[i])) return !fill;
    }
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        std::size_t f = table_[e][x];
        if (f == kUndefined) continue;
        if (table_[f][x ^ 1] == e) table_[f][x ^ 1] = kUndefined;
        std::size_t e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] != kUndefined) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][x ^ 1] != kUndefined) {
          merge(e1, table_[f1][x ^ 1], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][x ^ 1] = e1;
        }
      }
    }
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  bool row_complete(std::size_t c) const {
    for (std::size_t x = 0; x < cols_; ++x) {
      if (table_[c][x] == kUndefined) return false;
    }
    return true;
  }

  std::size_t cols() const { return cols_; }
  std::size_t at(std::size_t c, std::size_t x) const { return table_[c][x]; }

 private:
  std::size_t new_coset() {
    table_.emplace_back(cols_, kUndefined);
    parent_.push_back(table_.size() - 1);
    return table_.size() - 1;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

CosetTable coset_enumerate(FinitePresentation const& pres, std::span<Word const> subgroup,
                           std::size_t max_cosets) {
  if (max_cosets < 1) throw Error("max_cosets must be positive");
  std::vector<std::vector<std::size_t>> rels;
  for (Word const& r : pres.relators()) rels.push_back(r.expand());
  std::vector<std::vector<std::size_t>> subs;
  for (Word const& s : subgroup) {
    if (s.generator_bound() > pres.generator_count()) {
      throw Error("subgroup word uses an undeclared generator");
    }
    subs.push_back(s.expand());
  }

  Enumerator en(pres.generator_count(), max_cosets);
  CosetTable out;
  out.generator_count = pres.generator_count();

  auto lookahead = [&]() {
    for (std::size_t c = 0; c < en.size(); ++c) {
      for (auto const& r : rels) {
        if (!en.live(c)) break;
        en.scan(c, r, false);
      }
    }
  };

  bool overflow = false;
  for (auto const& s : subs) {
    if (!en.scan(0, s, true)) overflow = true;
  }

  for (std::size_t c = 0; !overflow && c < en.size(); ++c) {
    for (auto const& r : rels) {
      if (!en.live(c)) break;
      if (!en.scan(c, r, true)) {
        overflow = true;
        break;
      }
    }
    for (std::size_t x = 0; !overflow && x < en.cols() && en.live(c); ++x) {
      if (en.at(c, x) == kUndefined && !en.define(c, x)) overflow = true;
    }
  }

  out.total_defined = en.size();
  // Out of room: deductions alone may still close the table.
  if (overflow) {
    for (int pass = 0; pass < 4; ++pass) lookahead();
  }
  // A complete table has every live row filled and every relator closing.
  bool complete = true;
  std::vector<std::size_t> renumber(en.size(), kUndefined);
  std::size_t live = 0;
  for (std::size_t c = 0; c < en.size(); ++c) {
    if (!en.live(c)) continue;
    renumber[c] = live++;
    if (!en.row_complete(c)) complete = false;
  }
  if (complete) {
    for (std::size_t c = 0; c < en.size() && complete; ++c) {
      if (!en.live(c)) continue;
      for (auto const& r : rels) {
        std::size_t f = c;
        for (std::size_t x : r) f = en.at(f, x);
        if (f != c) {
          complete = false;
          break;
        }
      }
    }
  }
  out.status = complete ? EnumerationStatus::complete : EnumerationStatus::inconclusive;
  for (std::size_t c = 0; c < en.size(); ++c) {
    if (!en.live(c)) continue;
    std::vector<std::size_t> row(en.cols(), kUndefined);
    for (std::size_t x = 0; x < en.cols(); ++x) {
      std::size_t d = en.at(c, x);
      if (d != kUndefined) row[x] = renumber[en.rep(d)];
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace pgog

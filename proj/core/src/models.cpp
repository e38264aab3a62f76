#include "pgog/models.hpp"

#include <algorithm>
#include <atomic>
#include <utility>

#include "pgog/error.hpp"
#include "pgog/prime_level.hpp"

namespace pgog {

namespace {

std::atomic<std::uint64_t> next_model_id{1};

std::uint32_t reduce(std::int64_t v, std::uint32_t m) {
  auto M = static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(((v % M) + M) % M);
}

std::string idx(std::string const& stem, std::size_t i) { return stem + std::to_string(i); }

Word gen(FinitePresentation const& pr, std::string const& n) {
  return Word::generator(pr.index_of(n));
}

}  // namespace

std::size_t ElementHash::operator()(Element const& e) const noexcept {
  std::size_t h = 1469598103934665603ull ^ e.model();
  for (std::uint32_t c : e.coords()) {
    h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(Element const& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + ")";
}

FiniteGroupModel::FiniteGroupModel(std::string name, std::uint32_t p,
                                   std::vector<std::uint32_t> moduli)
    : name_(std::move(name)), id_(next_model_id++), p_(p), moduli_(std::move(moduli)) {
  if (!is_prime(p)) throw Error("model prime must be prime");
  for (std::uint32_t m : moduli_) {
    std::uint32_t v = m;
    while (v > 1) {
      if (v % p) throw Error("coordinate modulus is not a power of p");
      v /= p;
      ++order_log_;
    }
  }
}

std::optional<std::size_t> FiniteGroupModel::find_generator(std::string_view name) const {
  auto it = std::find(generator_names_.begin(), generator_names_.end(), name);
  if (it == generator_names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generator_names_.begin());
}

Element const& FiniteGroupModel::generator(std::string_view name) const {
  if (auto i = find_generator(name)) return generators_[*i];
  throw Error(name_ + " has no generator '" + std::string(name) + "'");
}

Element FiniteGroupModel::identity() const {
  return wrap(std::vector<std::uint32_t>(moduli_.size(), 0));
}

Element FiniteGroupModel::element(std::vector<std::int64_t> const& coords) const {
  if (coords.size() != moduli_.size()) {
    throw Error(name_ + ": expected " + std::to_string(moduli_.size()) + " coordinates");
  }
  std::vector<std::uint32_t> c(coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = reduce(coords[i], moduli_[i]);
  return wrap(std::move(c));
}

void FiniteGroupModel::require_owned(Element const& e) const {
  if (!owns(e)) throw Error("element does not belong to " + name_);
}

Element FiniteGroupModel::multiply(Element const& a, Element const& b) const {
  require_owned(a);
  require_owned(b);
  std::vector<std::uint32_t> out(moduli_.size(), 0);
  multiply_coords(a.coords(), b.coords(), out);
  return wrap(std::move(out));
}

Element FiniteGroupModel::inverse(Element const& a) const {
  require_owned(a);
  std::vector<std::uint32_t> out(moduli_.size(), 0);
  inverse_coords(a.coords(), out);
  return wrap(std::move(out));
}

void FiniteGroupModel::inverse_coords(std::span<std::uint32_t const> a,
                                      std::span<std::uint32_t> out) const {
  // a^-1 is the last power before the identity.
  std::vector<std::uint32_t> prev(a.begin(), a.end());
  std::vector<std::uint32_t> cur(moduli_.size());
  std::vector<std::uint32_t> const zero(moduli_.size(), 0);
  if (prev == zero) {
    std::fill(out.begin(), out.end(), 0);
    return;
  }
  std::size_t const limit = size_guard();
  for (std::size_t k = 0; k < limit; ++k) {
    multiply_coords(prev, a, cur);
    if (cur == zero) {
      std::copy(prev.begin(), prev.end(), out.begin());
      return;
    }
    prev.swap(cur);
  }
  throw Error(name_ + ": element order exceeds the size guard");
}

Element FiniteGroupModel::power(Element const& a, std::int64_t e) const {
  Element base = e < 0 ? inverse(a) : a;
  std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e);
  Element result = identity();
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    base = multiply(base, base);
    n >>= 1;
  }
  return result;
}

void FiniteGroupModel::add_generator(std::string name, std::vector<std::int64_t> const& coords) {
  if (find_generator(name)) throw Error(name_ + ": duplicate generator " + name);
  generator_names_.push_back(std::move(name));
  generators_.push_back(element(coords));
}

void FiniteGroupModel::set_presentation(FinitePresentation pres) {
  if (pres.generators() != generator_names_) {
    throw Error(name_ + ": presentation generators must match model generators");
  }
  presentation_ = std::move(pres);
}

Element commutator(FiniteGroupModel const& m, Element const& a, Element const& b) {
  return m.multiply(m.multiply(m.inverse(a), m.inverse(b)), m.multiply(a, b));
}

std::uint64_t element_order(FiniteGroupModel const& m, Element const& a) {
  Element e = m.identity();
  Element cur = a;
  std::uint64_t k = 1;
  std::size_t const limit = size_guard();
  while (cur != e) {
    cur = m.multiply(cur, a);
    if (++k > limit) throw SizeGuardExceeded(m.name() + ": element order exceeds the size guard");
  }
  return k;
}

// --- concrete models --------------------------------------------------------

namespace {

std::vector<std::int64_t> unit(std::size_t dim, std::size_t i) {
  std::vector<std::int64_t> v(dim, 0);
  v[i] = 1;
  return v;
}

class ElementaryAbelianModel final : public FiniteGroupModel {
 public:
  ElementaryAbelianModel(std::uint32_t p, std::vector<std::string> basis, std::string name)
      : FiniteGroupModel(std::move(name), p, std::vector<std::uint32_t>(basis.size(), p)) {
    FinitePresentation pres(basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      add_generator(basis[i], unit(basis.size(), i));
      pres.add_relator(Word::generator(i, p));
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        pres.add_relator(Word::commutator(Word::generator(i), Word::generator(j)));
      }
    }
    set_presentation(std::move(pres));
  }

 protected:
  void multiply_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
                       std::span<std::uint32_t> out) const override {
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % prime();
  }
  void inverse_coords(std::span<std::uint32_t const> a,
                      std::span<std::uint32_t> out) const override {
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (prime() - a[i]) % prime();
  }
};

class HeisenbergModel final : public FiniteGroupModel {
 public:
  explicit HeisenbergModel(std::uint32_t p)
      : FiniteGroupModel("Heisenberg(p=" + std::to_string(p) + ")", p, {p, p, p}) {
    add_generator("x", {1, 0, 0});
    add_generator("y", {0, 1, 0});
    FinitePresentation pres({"x", "y"});
    Word x = Word::generator(0), y = Word::generator(1);
    Word c = Word::commutator(x, y);
    pres.add_relator(x.pow(p));
    pres.add_relator(y.pow(p));
    pres.add_relator(c.pow(p));
    pres.add_relator(Word::commutator(c, x));
    pres.add_relator(Word::commutator(c, y));
    set_presentation(std::move(pres));
  }

 protected:
  void multiply_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
                       std::span<std::uint32_t> out) const override {
    std::uint32_t const p = prime();
    out[0] = (a[0] + b[0]) % p;
    out[1] = (a[1] + b[1]) % p;
    out[2] = (a[2] + b[2] + a[0] * b[1]) % p;
  }
  void inverse_coords(std::span<std::uint32_t const> a,
                      std::span<std::uint32_t> out) const override {
    std::uint32_t const p = prime();
    out[0] = (p - a[0]) % p;
    out[1] = (p - a[1]) % p;
    // (-a,-b,-c+ab)
    out[2] = (p - a[2] + a[0] * a[1] % p) % p;
  }
};

class GnModel final : public FiniteGroupModel {
 public:
  GnModel(std::uint32_t p, std::uint32_t n, bool twist)
      : FiniteGroupModel(std::string(twist ? "Gn" : "GnUntwisted") + "(p=" + std::to_string(p) +
                             ",n=" + std::to_string(n) + ")",
                         p, std::vector<std::uint32_t>(2 + checked_power(p, n), p)),
        q_(static_cast<std::size_t>(checked_power(p, n))),
        pivot_(static_cast<std::size_t>(checked_power(p, n - 1))),
        twist_(twist) {
    if (n < 1) throw Error("Gn requires n >= 1");
    std::size_t const dim = 2 + q_;
    std::string const lo = idx("k", n - 1), hi = idx("k", n);
    add_generator(lo, unit(dim, 0));
    add_generator(hi, unit(dim, 1));
    for (std::size_t j = 0; j < q_; ++j) add_generator(idx("h", j), unit(dim, 2 + j));

    FinitePresentation pres(generator_names());
    for (std::size_t g = 0; g < dim; ++g) pres.add_relator(Word::generator(g, p));
    auto h = [&](std::size_t j) { return gen(pres, idx("h", j)); };
    Word klo = gen(pres, lo), khi = gen(pres, hi);
    for (std::size_t i = 0; i < q_; ++i) {
      for (std::size_t j = i + 1; j < q_; ++j) pres.add_relator(Word::commutator(h(i), h(j)));
    }
    for (std::size_t i = 0; i < q_; ++i) {
      if (i != pivot_) pres.add_relator(Word::commutator(klo, h(i)));
    }
    pres.add_relation(khi, Word::commutator(klo, h(pivot_)));
    pres.add_relator(Word::commutator(khi, klo));
    for (std::size_t i = 0; i < q_; ++i) pres.add_relator(Word::commutator(khi, h(i)));
    set_presentation(std::move(pres));
  }

 protected:
  void multiply_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
                       std::span<std::uint32_t> out) const override {
    std::uint32_t const p = prime();
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
    if (twist_) out[1] = (out[1] + a[0] * b[2 + pivot_]) % p;
  }
  void inverse_coords(std::span<std::uint32_t const> a,
                      std::span<std::uint32_t> out) const override {
    std::uint32_t const p = prime();
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (p - a[i]) % p;
    if (twist_) out[1] = (out[1] + a[0] * a[2 + pivot_]) % p;
  }

 private:
  std::size_t q_;
  std::size_t pivot_;
  bool twist_;
};

class FnModel final : public FiniteGroupModel {
 public:
  FnModel(std::uint32_t p, std::uint32_t n)
      : FiniteGroupModel("Fn(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")", p,
                         std::vector<std::uint32_t>(n + checked_power(p, n), p)),
        n_(n),
        q_(static_cast<std::size_t>(checked_power(p, n))) {
    if (n < 1) throw Error("Fn requires n >= 1");
    std::size_t const dim = n_ + q_;
    for (std::size_t i = 1; i <= n_; ++i) add_generator(idx("k", i), unit(dim, i - 1));
    for (std::size_t j = 0; j < q_; ++j) add_generator(idx("h", j), unit(dim, n_ + j));
    pivots_.resize(n_ + 1, 0);
    for (std::size_t i = 1; i <= n_; ++i) pivots_[i] = static_cast<std::size_t>(checked_power(p, i - 1));

    FinitePresentation pres(generator_names());
    for (std::size_t g = 0; g < dim; ++g) pres.add_relator(Word::generator(g, p));
    auto k = [&](std::size_t i) { return gen(pres, idx("k", i)); };
    auto h = [&](std::size_t j) { return gen(pres, idx("h", j)); };
    for (std::size_t i = 1; i <= n_; ++i) {
      for (std::size_t j = i + 1; j <= n_; ++j) pres.add_relator(Word::commutator(k(i), k(j)));
    }
    for (std::size_t i = 0; i < q_; ++i) {
      for (std::size_t j = i + 1; j < q_; ++j) pres.add_relator(Word::commutator(h(i), h(j)));
    }
    for (std::size_t i = 1; i <= n_; ++i) {
      std::uint64_t const pi = checked_power(p, static_cast<std::uint32_t>(i));
      for (std::size_t j = 0; j < q_; ++j) {
        if (j != pi) pres.add_relator(Word::commutator(k(i), h(j)));
      }
      if (i + 1 <= n_) pres.add_relation(k(i + 1), Word::commutator(k(i), h(pi)));
    }
    set_presentation(std::move(pres));
  }

 protected:
  void multiply_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
                       std::span<std::uint32_t> out) const override {
    std::uint32_t const p = prime();
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
    // coordinate of u_i is i-1; u_0 = 0
    for (std::size_t i = 2; i <= n_; ++i) {
      out[i - 1] = (out[i - 1] + a[i - 2] * b[n_ + pivots_[i]]) % p;
    }
  }

 private:
  std::size_t n_;
  std::size_t q_;
  std::vector<std::size_t> pivots_;
};

class LamplighterModel final : public FiniteGroupModel {
 public:
  LamplighterModel(std::uint32_t p, std::uint32_t n)
      : FiniteGroupModel("Lamplighter(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")",
                         p, moduli(p, n)),
        q_(static_cast<std::size_t>(checked_power(p, n))) {
    for (std::size_t j = 0; j < q_; ++j) add_generator(idx("h", j), unit(q_ + 1, j));
    add_generator("t", unit(q_ + 1, q_));

    FinitePresentation pres(generator_names());
    Word t = gen(pres, "t");
    auto h = [&](std::size_t j) { return gen(pres, idx("h", j % q_)); };
    for (std::size_t j = 0; j < q_; ++j) pres.add_relator(h(j).pow(p));
    for (std::size_t i = 0; i < q_; ++i) {
      for (std::size_t j = i + 1; j < q_; ++j) pres.add_relator(Word::commutator(h(i), h(j)));
    }
    pres.add_relator(t.pow(static_cast<std::int64_t>(q_)));
    for (std::size_t j = 0; j < q_; ++j) pres.add_relation(t.inverse() * h(j) * t, h(j + 1));
    set_presentation(std::move(pres));
  }

 protected:
  void multiply_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
                       std::span<std::uint32_t> out) const override {
    std::uint32_t const p = prime();
    std::size_t const s = a[q_];
    for (std::size_t i = 0; i < q_; ++i) out[i] = (a[i] + b[(i + s) % q_]) % p;
    out[q_] = static_cast<std::uint32_t>((a[q_] + b[q_]) % q_);
  }
  void inverse_coords(std::span<std::uint32_t const> a,
                      std::span<std::uint32_t> out) const override {
    // (x,s)^-1 = (-shift_{-s}(x), -s)
    std::uint32_t const p = prime();
    std::size_t const s = a[q_];
    for (std::size_t i = 0; i < q_; ++i) out[i] = (p - a[(i + q_ - s) % q_]) % p;
    out[q_] = static_cast<std::uint32_t>((q_ - s) % q_);
  }

 private:
  static std::vector<std::uint32_t> moduli(std::uint32_t p, std::uint32_t n) {
    auto q = static_cast<std::uint32_t>(checked_power(p, n));
    std::vector<std::uint32_t> m(q, p);
    m.push_back(q);
    return m;
  }
  std::size_t q_;
};

class EnWitnessModel final : public FiniteGroupModel {
 public:
  EnWitnessModel(std::uint32_t p, std::uint32_t n)
      : FiniteGroupModel("En(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")", p,
                         moduli(p, n)),
        n_(n),
        q_(static_cast<std::size_t>(checked_power(p, n))) {
    std::size_t const dim = n_ * q_ + q_ + 1;
    for (std::size_t i = 1; i <= n_; ++i) {
      for (std::size_t r = 0; r < q_; ++r) {
        add_generator("k" + std::to_string(i) + "_" + std::to_string(r), unit(dim, ucoord(i, r)));
      }
    }
    for (std::size_t j = 0; j < q_; ++j) add_generator(idx("h", j), unit(dim, xcoord(j)));
    add_generator("t", unit(dim, dim - 1));
    offsets_.resize(n_ + 1, 0);
    for (std::size_t i = 1; i <= n_; ++i) {
      offsets_[i] = static_cast<std::size_t>(checked_power(p, static_cast<std::uint32_t>(i - 1)));
    }
  }

 protected:
  void multiply_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
                       std::span<std::uint32_t> out) const override {
    std::uint32_t const p = prime();
    std::size_t const s = a[a.size() - 1];
    // c = A^s(b): reads u_{i,r+s} and y_{j+s}
    auto bu = [&](std::size_t i, std::size_t r) { return b[ucoord(i, (r + s) % q_)]; };
    auto by = [&](std::size_t j) { return b[xcoord((j + s) % q_)]; };
    for (std::size_t i = 1; i <= n_; ++i) {
      for (std::size_t r = 0; r < q_; ++r) {
        std::uint32_t v = a[ucoord(i, r)] + bu(i, r);
        if (i >= 2) v += a[ucoord(i - 1, r)] * by((offsets_[i] + r) % q_);
        out[ucoord(i, r)] = v % p;
      }
    }
    for (std::size_t j = 0; j < q_; ++j) out[xcoord(j)] = (a[xcoord(j)] + by(j)) % p;
    out[a.size() - 1] = static_cast<std::uint32_t>((s + b[b.size() - 1]) % q_);
  }

 private:
  static std::vector<std::uint32_t> moduli(std::uint32_t p, std::uint32_t n) {
    auto q = static_cast<std::uint32_t>(checked_power(p, n));
    std::vector<std::uint32_t> m(static_cast<std::size_t>(n) * q + q, p);
    m.push_back(q);
    return m;
  }
  std::size_t ucoord(std::size_t i, std::size_t r) const { return (i - 1) * q_ + r; }
  std::size_t xcoord(std::size_t j) const { return n_ * q_ + j; }

  std::size_t n_;
  std::size_t q_;
  std::vector<std::size_t> offsets_;
};

class DirectProductModel final : public FiniteGroupModel {
 public:
  DirectProductModel(ModelPtr a, ModelPtr b, std::string name)
      : FiniteGroupModel(name.empty() ? a->name() + " x " + b->name() : std::move(name),
                         check_prime(*a, *b), concat(a->moduli(), b->moduli())),
        a_(std::move(a)),
        b_(std::move(b)) {
    std::vector<std::string> names;
    auto const& an = a_->generator_names();
    auto const& bn = b_->generator_names();
    auto clash = [&](std::string const& s, std::vector<std::string> const& other) {
      return std::find(other.begin(), other.end(), s) != other.end();
    };
    for (auto const& s : an) names.push_back(clash(s, bn) ? s + "_1" : s);
    for (auto const& s : bn) names.push_back(clash(s, an) ? s + "_2" : s);
    std::size_t const da = a_->dimension();
    for (std::size_t g = 0; g < an.size(); ++g) {
      std::vector<std::int64_t> c(dimension(), 0);
      auto src = a_->generators()[g].coords();
      std::copy(src.begin(), src.end(), c.begin());
      add_generator(names[g], c);
    }
    for (std::size_t g = 0; g < bn.size(); ++g) {
      std::vector<std::int64_t> c(dimension(), 0);
      auto src = b_->generators()[g].coords();
      std::copy(src.begin(), src.end(), c.begin() + static_cast<std::ptrdiff_t>(da));
      add_generator(names[an.size() + g], c);
    }
    if (a_->presentation() && b_->presentation()) {
      FinitePresentation pres(names);
      for (Word const& r : a_->presentation()->relators()) pres.add_relator(r);
      std::size_t const off = an.size();
      for (Word const& r : b_->presentation()->relators()) {
        pres.add_relator(r.renumber([off](std::size_t g) { return g + off; }));
      }
      for (std::size_t i = 0; i < an.size(); ++i) {
        for (std::size_t j = 0; j < bn.size(); ++j) {
          pres.add_relator(Word::commutator(Word::generator(i), Word::generator(off + j)));
        }
      }
      set_presentation(std::move(pres));
    }
  }

 protected:
  void multiply_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
                       std::span<std::uint32_t> out) const override {
    std::size_t const da = a_->dimension();
    Element x = a_->multiply(Element(a_->id(), {a.begin(), a.begin() + da}),
                             Element(a_->id(), {b.begin(), b.begin() + da}));
    Element y = b_->multiply(Element(b_->id(), {a.begin() + da, a.end()}),
                             Element(b_->id(), {b.begin() + da, b.end()}));
    std::copy(x.coords().begin(), x.coords().end(), out.begin());
    std::copy(y.coords().begin(), y.coords().end(), out.begin() + static_cast<std::ptrdiff_t>(da));
  }
  void inverse_coords(std::span<std::uint32_t const> a,
                      std::span<std::uint32_t> out) const override {
    std::size_t const da = a_->dimension();
    Element x = a_->inverse(Element(a_->id(), {a.begin(), a.begin() + da}));
    Element y = b_->inverse(Element(b_->id(), {a.begin() + da, a.end()}));
    std::copy(x.coords().begin(), x.coords().end(), out.begin());
    std::copy(y.coords().begin(), y.coords().end(), out.begin() + static_cast<std::ptrdiff_t>(da));
  }

 private:
  static std::uint32_t check_prime(FiniteGroupModel const& a, FiniteGroupModel const& b) {
    if (a.prime() != b.prime()) throw Error("direct product of groups for different primes");
    return a.prime();
  }
  static std::vector<std::uint32_t> concat(std::vector<std::uint32_t> x,
                                           std::vector<std::uint32_t> const& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  }
  ModelPtr a_;
  ModelPtr b_;
};

class RenamedModel final : public FiniteGroupModel {
 public:
  RenamedModel(ModelPtr inner, std::vector<std::string> names)
      : FiniteGroupModel(inner->name(), inner->prime(), inner->moduli()), inner_(std::move(inner)) {
    if (names.size() != inner_->generators().size()) {
      throw Error(inner_->name() + ": expected " + std::to_string(inner_->generators().size()) +
                  " generator names, got " + std::to_string(names.size()));
    }
    for (std::size_t g = 0; g < names.size(); ++g) {
      auto src = inner_->generators()[g].coords();
      add_generator(names[g], std::vector<std::int64_t>(src.begin(), src.end()));
    }
    if (auto const* pr = inner_->presentation()) {
      FinitePresentation pres(names);
      for (Word const& r : pr->relators()) pres.add_relator(r);
      set_presentation(std::move(pres));
    }
  }

 protected:
  void multiply_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
                       std::span<std::uint32_t> out) const override {
    Element r = inner_->multiply(Element(inner_->id(), {a.begin(), a.end()}),
                                 Element(inner_->id(), {b.begin(), b.end()}));
    std::copy(r.coords().begin(), r.coords().end(), out.begin());
  }
  void inverse_coords(std::span<std::uint32_t const> a,
                      std::span<std::uint32_t> out) const override {
    Element r = inner_->inverse(Element(inner_->id(), {a.begin(), a.end()}));
    std::copy(r.coords().begin(), r.coords().end(), out.begin());
  }

 private:
  ModelPtr inner_;
};

}  // namespace

ModelPtr make_elementary_abelian(std::uint32_t p, std::vector<std::string> basis,
                                 std::string name) {
  if (name.empty()) {
    name = "Abelian(p=" + std::to_string(p) + ",rank=" + std::to_string(basis.size()) + ")";
  }
  return std::make_shared<ElementaryAbelianModel>(p, std::move(basis), std::move(name));
}

ModelPtr make_heisenberg(std::uint32_t p) { return std::make_shared<HeisenbergModel>(p); }

ModelPtr make_gn(std::uint32_t p, std::uint32_t n, bool twist) {
  PrimeLevel lvl(p, n);
  return std::make_shared<GnModel>(lvl.p(), lvl.n(), twist);
}

ModelPtr make_fn(std::uint32_t p, std::uint32_t n) {
  PrimeLevel lvl(p, n);
  return std::make_shared<FnModel>(lvl.p(), lvl.n());
}

ModelPtr make_lamplighter(std::uint32_t p, std::uint32_t n) {
  PrimeLevel lvl(p, n);
  return std::make_shared<LamplighterModel>(lvl.p(), lvl.n());
}

ModelPtr make_en_witness(std::uint32_t p, std::uint32_t n) {
  PrimeLevel lvl(p, n);
  return std::make_shared<EnWitnessModel>(lvl.p(), lvl.n());
}

ModelPtr make_direct_product(ModelPtr a, ModelPtr b, std::string name) {
  return std::make_shared<DirectProductModel>(std::move(a), std::move(b), std::move(name));
}

ModelPtr rename_generators(ModelPtr m, std::vector<std::string> names) {
  return std::make_shared<RenamedModel>(std::move(m), std::move(names));
}

std::optional<AssociativityViolation> find_associativity_violation(
    FiniteGroupModel const& m, std::span<Element const> elements) {
  for (Element const& a : elements) {
    for (Element const& b : elements) {
      Element ab = m.multiply(a, b);
      for (Element const& c : elements) {
        if (m.multiply(ab, c) != m.multiply(a, m.multiply(b, c))) {
          return AssociativityViolation{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace pgog

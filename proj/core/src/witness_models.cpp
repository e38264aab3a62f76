#include "pgog/witness_models.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pgog/error.hpp"
#include "pgog/prime_level.hpp"

namespace pgog {

namespace {

class ChainWitnessModel final : public FiniteGroupModel {
 public:
  ChainWitnessModel(std::uint32_t p, std::uint32_t level, bool cyclic)
      : FiniteGroupModel(std::string(cyclic ? "ChainWitnessCyclic" : "ChainWitness") +
                             "(p=" + std::to_string(p) + ",l=" + std::to_string(level) + ")",
                         p, moduli(p, level, cyclic)),
        level_(level),
        q_(static_cast<std::size_t>(checked_power(p, level))),
        copies_(cyclic ? q_ : 1),
        dim_(std::size_t{1} << (level - 1)),
        cyclic_(cyclic) {
    std::size_t const total = dimension();
    auto unit = [&](std::size_t i) {
      std::vector<std::int64_t> v(total, 0);
      v[i] = 1;
      return v;
    };
    for (std::size_t j = 0; j < q_; ++j) add_generator("h" + std::to_string(j), unit(j));
    for (std::size_t r = 0; r < copies_; ++r) {
      for (std::uint32_t i = 1; i <= level_; ++i) {
        std::string name = "k" + std::to_string(i);
        if (cyclic_) name += "_" + std::to_string(r);
        // monomial N_1..N_{i-1}
        std::size_t mask = (std::size_t{1} << (i - 1)) - 1;
        add_generator(name, unit(ucoord(r, mask)));
      }
    }
    add_generator("z", unit(zcoord()));
    if (cyclic_) add_generator("t", unit(total - 1));

    shifts_.resize(level_, 0);
    for (std::uint32_t L = 1; L < level_; ++L) {
      shifts_[L] = static_cast<std::size_t>(checked_power(p, L)) % q_;
    }
  }

 protected:
  void multiply_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
                       std::span<std::uint32_t> out) const override {
    std::uint32_t const p = prime();
    std::size_t const s = cyclic_ ? a[a.size() - 1] : 0;
    std::vector<std::uint32_t> y(q_);
    for (std::size_t j = 0; j < q_; ++j) y[j] = b[(j + s) % q_];
    for (std::size_t j = 0; j < q_; ++j) out[j] = (a[j] + y[j]) % p;
    for (std::size_t r = 0; r < copies_; ++r) {
      std::size_t const base = ucoord(r, 0);
      std::size_t const br = ucoord((r + s) % copies_, 0);
      std::vector<std::uint32_t> u(a.begin() + base, a.begin() + base + dim_);
      act(u, y, r);
      for (std::size_t m = 0; m < dim_; ++m) out[base + m] = (u[m] + b[br + m]) % p;
    }
    out[zcoord()] = (a[zcoord()] + b[zcoord()]) % p;
    if (cyclic_) out[out.size() - 1] = static_cast<std::uint32_t>((s + b[b.size() - 1]) % q_);
  }

  void inverse_coords(std::span<std::uint32_t const> a,
                      std::span<std::uint32_t> out) const override {
    // base inverse (x,u)^-1 = (-x, -Phi_{-x}(u)), then undo the shift
    std::uint32_t const p = prime();
    std::vector<std::uint32_t> base(a.size(), 0);
    std::vector<std::uint32_t> negx(q_);
    for (std::size_t j = 0; j < q_; ++j) negx[j] = (p - a[j]) % p;
    for (std::size_t j = 0; j < q_; ++j) base[j] = negx[j];
    for (std::size_t r = 0; r < copies_; ++r) {
      std::size_t const off = ucoord(r, 0);
      std::vector<std::uint32_t> u(a.begin() + off, a.begin() + off + dim_);
      act(u, negx, r);
      for (std::size_t m = 0; m < dim_; ++m) base[off + m] = (p - u[m]) % p;
    }
    base[zcoord()] = (p - a[zcoord()]) % p;
    if (!cyclic_) {
      std::copy(base.begin(), base.end(), out.begin());
      return;
    }
    std::size_t const s = a[a.size() - 1];
    std::size_t const back = (q_ - s) % q_;
    for (std::size_t j = 0; j < q_; ++j) out[j] = base[(j + back) % q_];
    for (std::size_t r = 0; r < copies_; ++r) {
      for (std::size_t m = 0; m < dim_; ++m) {
        out[ucoord(r, m)] = base[ucoord((r + back) % copies_, m)];
      }
    }
    out[zcoord()] = base[zcoord()];
    out[out.size() - 1] = static_cast<std::uint32_t>(back);
  }

 private:
  static std::vector<std::uint32_t> moduli(std::uint32_t p, std::uint32_t level, bool cyclic) {
    if (level < 1 || level > 16) throw Error("chain witness level must lie in 1..16");
    auto q = static_cast<std::uint32_t>(checked_power(p, level));
    std::size_t copies = cyclic ? q : 1;
    std::size_t len = q + copies * (std::size_t{1} << (level - 1)) + 1;
    std::vector<std::uint32_t> m(len, p);
    if (cyclic) m.push_back(q);
    return m;
  }

  // u <- Phi_y(u) on copy r: product over L of (1 + y_{r+p^L} N_L).
  void act(std::vector<std::uint32_t>& u, std::vector<std::uint32_t> const& y,
           std::size_t r) const {
    std::uint32_t const p = prime();
    for (std::uint32_t L = 1; L < level_; ++L) {
      std::uint32_t c = y[(r + shifts_[L]) % q_];
      if (!c) continue;
      std::size_t const bit = std::size_t{1} << (L - 1);
      for (std::size_t m = 0; m < dim_; ++m) {
        if (m & bit) continue;
        u[m | bit] = (u[m | bit] + c * u[m]) % p;
      }
    }
  }

  std::size_t ucoord(std::size_t r, std::size_t mask) const { return q_ + r * dim_ + mask; }
  std::size_t zcoord() const { return q_ + copies_ * dim_; }

  std::uint32_t level_;
  std::size_t q_;
  std::size_t copies_;
  std::size_t dim_;
  bool cyclic_;
  std::vector<std::size_t> shifts_;
};

}  // namespace

ModelPtr make_chain_witness(std::uint32_t p, std::uint32_t level, bool cyclic) {
  return std::make_shared<ChainWitnessModel>(p, level, cyclic);
}

}  // namespace pgog

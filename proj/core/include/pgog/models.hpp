#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgog/presentation.hpp"

namespace pgog {

/// A group element: a coordinate tuple tagged with the id of its model.
/// Elements of different models never compare equal.
class Element {
 public:
  Element() = default;
  Element(std::uint64_t model, std::vector<std::uint32_t> coords)
      : model_(model), coords_(std::move(coords)) {}

  std::uint64_t model() const noexcept { return model_; }
  std::span<std::uint32_t const> coords() const noexcept { return coords_; }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const noexcept { return coords_.size(); }

  friend bool operator==(Element const&, Element const&) = default;
  friend auto operator<=>(Element const&, Element const&) = default;

 private:
  std::uint64_t model_ = 0;
  std::vector<std::uint32_t> coords_;
};

struct ElementHash {
  std::size_t operator()(Element const& e) const noexcept;
};

std::string to_string(Element const& e);

/// A concrete finite p-group with closed-form arithmetic on coordinate
/// tuples. Models are immutable after construction and shared by pointer.
class FiniteGroupModel {
 public:
  virtual ~FiniteGroupModel() = default;
  FiniteGroupModel(FiniteGroupModel const&) = delete;
  FiniteGroupModel& operator=(FiniteGroupModel const&) = delete;

  std::string const& name() const noexcept { return name_; }
  std::uint64_t id() const noexcept { return id_; }
  std::uint32_t prime() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return moduli_.size(); }
  std::vector<std::uint32_t> const& moduli() const noexcept { return moduli_; }

  /// log_p of the group order implied by the coordinate moduli.
  std::size_t order_log() const noexcept { return order_log_; }

  std::vector<std::string> const& generator_names() const noexcept { return generator_names_; }
  std::vector<Element> const& generators() const noexcept { return generators_; }
  std::optional<std::size_t> find_generator(std::string_view name) const;
  Element const& generator(std::string_view name) const;

  Element identity() const;
  /// Builds an element from raw coordinates, reducing each modulo its range.
  Element element(std::vector<std::int64_t> const& coords) const;

  bool owns(Element const& e) const noexcept { return e.model() == id_; }
  Element multiply(Element const& a, Element const& b) const;
  Element inverse(Element const& a) const;
  Element power(Element const& a, std::int64_t e) const;

  /// A presentation on generator_names() (same order) known to define this
  /// group, or nullptr.
  FinitePresentation const* presentation() const noexcept {
    return presentation_ ? &*presentation_ : nullptr;
  }

 protected:
  FiniteGroupModel(std::string name, std::uint32_t p, std::vector<std::uint32_t> moduli);

  void add_generator(std::string name, std::vector<std::int64_t> const& coords);
  void set_presentation(FinitePresentation pres);

  virtual void multiply_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
                               std::span<std::uint32_t> out) const = 0;
  /// Default: a^(ord(a)-1) by repeated multiplication.
  virtual void inverse_coords(std::span<std::uint32_t const> a, std::span<std::uint32_t> out) const;

  Element wrap(std::vector<std::uint32_t> coords) const { return Element(id_, std::move(coords)); }
  void require_owned(Element const& e) const;

 private:
  std::string name_;
  std::uint64_t id_;
  std::uint32_t p_;
  std::vector<std::uint32_t> moduli_;
  std::size_t order_log_ = 0;
  std::vector<std::string> generator_names_;
  std::vector<Element> generators_;
  std::optional<FinitePresentation> presentation_;
};

using ModelPtr = std::shared_ptr<FiniteGroupModel const>;

/// [a,b] = a^-1 b^-1 a b.
Element commutator(FiniteGroupModel const& m, Element const& a, Element const& b);

/// Least k >= 1 with a^k = e.
std::uint64_t element_order(FiniteGroupModel const& m, Element const& a);

// --- constructors -----------------------------------------------------------

/// F_p-vector space with the given basis names.
ModelPtr make_elementary_abelian(std::uint32_t p, std::vector<std::string> basis,
                                 std::string name = {});

/// Mod-p Heisenberg group on generators x, y: unitriangular triples (a,b,c)
/// with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
ModelPtr make_heisenberg(std::uint32_t p);

/// The group on F_p^{2+p^n}, coordinates (u_{n-1}, u_n, x_0..x_{p^n-1}),
/// generators k{n-1}, k{n}, h0.., with the twist u_n += u_{n-1} y_{p^{n-1}}.
ModelPtr make_gn(std::uint32_t p, std::uint32_t n, bool twist = true);

/// F_p^n x F_p^{p^n}, coordinates (u_1..u_n, x), with
/// w_i = u_i + v_i + u_{i-1} y_{p^{i-1}} and u_0 = 0. Only associative for
/// n <= 2; see find_associativity_violation.
ModelPtr make_fn(std::uint32_t p, std::uint32_t n);

/// H_n x| Z/p^n: pairs (x, s) with (x,s)(y,s') = (x + shift_s(y), s+s') where
/// shift_s(y)_i = y_{i+s}, so that t^-1 h_j t = h_{j+1}. Generators h0.., t.
ModelPtr make_lamplighter(std::uint32_t p, std::uint32_t n);

/// Explicit model for the E_n witness: (u in F_p^{n x p^n}, x, s) with base
/// law u_{i,r} + v_{i,r} + u_{i-1,r} y_{(p^{i-1}+r) mod p^n} (u_{0,r} = 0)
/// and t shifting r and the x index. The top layer k_{n,r} is central in
/// the base. Generators k{i}_{r}, h{j}, t.
ModelPtr make_en_witness(std::uint32_t p, std::uint32_t n);

/// Componentwise product. Clashing generator names get suffixes _1 / _2.
ModelPtr make_direct_product(ModelPtr a, ModelPtr b, std::string name = {});

/// Returns the same group with its generators renamed positionally.
ModelPtr rename_generators(ModelPtr m, std::vector<std::string> names);

/// Looks for a triple of the given elements violating associativity.
struct AssociativityViolation {
  Element a, b, c;
};
std::optional<AssociativityViolation> find_associativity_violation(
    FiniteGroupModel const& m, std::span<Element const> elements);

}  // namespace pgog

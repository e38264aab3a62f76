#pragma once

#include <cstdint>

#include "pgog/models.hpp"

namespace pgog {

/// Witness for the chain graphs built from G_1..G_l.
///
/// Elements are h^x k^u z^c (t^s): x in F_p^{p^l}; u in C copies of the
/// module F_p[N_1..N_{l-1}]/(N_L^2), one copy per residue r (C = p^l when
/// `cyclic`, else 1); z an extra central F_p factor. h_j acts on copy r by
/// 1 + N_L when j - r = p^L (mod p^l), 1 <= L < l, and trivially otherwise.
/// With `cyclic`, t shifts both the copy index and the h index.
///
/// Generators: h0.., k{i} (i = 1..l) for the monomial N_1..N_{i-1} in copy 0,
/// or k{i}_{r} in copy r when cyclic, then z, then t.
/// Order p^(1 + p^l + C 2^(l-1)), times p^l when cyclic.
ModelPtr make_chain_witness(std::uint32_t p, std::uint32_t level, bool cyclic);

}  // namespace pgog

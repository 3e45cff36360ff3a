#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "latkit/lattice.hpp"

namespace latkit {

// Worked example lattices. Overlined elements are written "i*".

/// 12-element lattice of torsion classes of k(1 <- 2 <- 3)/<ab>.
Lattice gen_fig1();
/// 5-element lattice of torsion classes of type A2: {0, z, w, y, x}.
Lattice gen_a2();
/// 9-element congruence-uniform lattice where the kappa and core label orders differ.
Lattice gen_ex424();
/// 14-element lattice of torsion classes of the cyclic quiver with relations ab, bc, ca.
Lattice gen_ex426();

// Parametric families.
inline constexpr std::size_t kMaxChain = 5000;
inline constexpr std::size_t kMaxBoolean = 12;
inline constexpr std::size_t kMaxWeakSym = 6;
inline constexpr std::size_t kMaxWeakDihedral = 1000;

/// n-element chain named "0".."n-1".
Lattice gen_chain(std::size_t n);
/// Subsets of {1..n} under inclusion, named "{}", "{1}", "{1,2}", ...
Lattice gen_boolean(std::size_t n);
/// Right weak order on S_n, elements in one-line notation ("2314").
Lattice gen_weak_sym(std::size_t n);
/// Right weak order on I2(n): bottom "e", top "w0", and the alternating
/// words "s", "st", ... and "t", "ts", ... of length 1..n-1.
Lattice gen_weak_dihedral(std::size_t n);

enum class Family { Fig1, A2, Ex424, Ex426, Chain, Boolean, WeakSym, WeakDihedral };

struct FamilySpec {
  Family family = Family::Fig1;
  std::size_t n = 0;  // ignored by the fixed examples
};

/// Family names: fig1, a2, ex424, ex426, chain, boolean, weak_sym, weak_dihedral.
Family parse_family(std::string_view name);
std::string_view to_string(Family family) noexcept;
bool is_parametric(Family family) noexcept;

Lattice generate(const FamilySpec& spec);

}  // namespace latkit

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pil/lattice.hpp"
#include "pil/permutation.hpp"

namespace pil {

/// Traces of a group action on a lattice quotient outer / inner.
struct QuotientCharacter {
    /// Trace on (outer / inner) tensor Q.
    std::vector<Integer> rational;
    /// d when the torsion subgroup is (Z_d)^s with s > 0, otherwise 0.
    Integer torsion_modulus;
    /// Trace on the torsion subgroup, reduced into [0, d). Empty when torsion_modulus is 0.
    std::vector<Integer> modular;

    friend bool operator==(const QuotientCharacter&, const QuotientCharacter&) = default;
};

/// Image of an ambient vector under a permutation.
using LatticeAction = std::function<IntVector(const Permutation&, std::span<const Integer>)>;

/// Throws std::invalid_argument if inner is not contained in outer or the
/// action does not preserve both lattices.
QuotientCharacter quotient_character(const SubmoduleLattice& outer, const SubmoduleLattice& inner,
                                     std::span<const Permutation> reps, const LatticeAction& action);

}  // namespace pil

#include "pil/character.hpp"

#include <stdexcept>

#include "pil/abelian.hpp"

namespace pil {

QuotientCharacter quotient_character(const SubmoduleLattice& outer, const SubmoduleLattice& inner,
                                     std::span<const Permutation> reps, const LatticeAction& action) {
    const std::size_t k = outer.rank();
    const IntMatrix c = relative_coordinates(outer, inner);
    std::vector<Integer> d(k, Integer(0));
    IntMatrix v = IntMatrix::identity(k);
    IntMatrix v_inv = IntMatrix::identity(k);
    if (c.rows() > 0 && k > 0) {
        SmithTransform s = snf_with_transforms(c);
        for (std::size_t j = 0; j < s.diagonal.size(); ++j) d[j] = abs(s.diagonal[j]);
        v = std::move(s.v);
        v_inv = std::move(s.v_inv);
    }

    QuotientCharacter out;
    out.torsion_modulus = Integer(0);
    bool homogeneous = true;
    for (const auto& x : d) {
        if (x.is_zero() || x.is_one()) continue;
        if (out.torsion_modulus.is_zero()) {
            out.torsion_modulus = x;
        } else if (x != out.torsion_modulus) {
            homogeneous = false;
        }
    }
    if (!homogeneous) out.torsion_modulus = Integer(0);

    for (const auto& g : reps) {
        for (std::size_t i = 0; i < inner.rank(); ++i) {
            if (!inner.contains(action(g, inner.basis().row(i)))) {
                throw std::invalid_argument("action does not preserve the inner lattice");
            }
        }
        // x(i, :) = coordinates of g . outer_i
        IntMatrix x(k, k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto coords = outer.coordinates(action(g, outer.basis().row(i)));
            if (!coords) throw std::invalid_argument("action does not preserve the outer lattice");
            for (std::size_t j = 0; j < k; ++j) x(i, j) = (*coords)[j];
        }
        Integer rational(0);
        Integer modular(0);
        for (std::size_t j = 0; j < k; ++j) {
            if (d[j].is_one()) continue;
            if (!d[j].is_zero() && d[j] != out.torsion_modulus) continue;
            // (V^{-1} X V)_{jj}
            IntVector w(k);
            for (std::size_t a = 0; a < k; ++a) {
                if (v_inv(j, a).is_zero()) continue;
                for (std::size_t b = 0; b < k; ++b) {
                    if (!x(a, b).is_zero()) w[b].addmul(v_inv(j, a), x(a, b));
                }
            }
            Integer y(0);
            for (std::size_t b = 0; b < k; ++b) {
                if (!w[b].is_zero() && !v(b, j).is_zero()) y.addmul(w[b], v(b, j));
            }
            if (d[j].is_zero()) {
                rational += y;
            } else {
                modular += y;
            }
        }
        out.rational.push_back(rational);
        if (!out.torsion_modulus.is_zero()) out.modular.push_back(floor_mod(modular, out.torsion_modulus));
    }
    return out;
}

}  // namespace pil

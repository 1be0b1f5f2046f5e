#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pil/int_matrix.hpp"
#include "pil/lattice.hpp"

namespace pil {

/// Finitely generated abelian group Z^free_rank + Z_{d_1} + ... + Z_{d_s},
/// stored with d_1 | d_2 | ... | d_s and every d_i >= 2.
class AbelianInvariants {
public:
    AbelianInvariants() = default;
    /// Normalizes an arbitrary list of cyclic orders (0 = infinite, 1 dropped).
    static AbelianInvariants from_cyclic_orders(std::span<const Integer> orders);
    static AbelianInvariants free(std::size_t rank);
    /// (Z_m)^count, or Z^count when m = 0.
    static AbelianInvariants power(const Integer& m, std::size_t count);

    [[nodiscard]] const std::vector<Integer>& torsion() const noexcept { return torsion_; }
    [[nodiscard]] std::size_t free_rank() const noexcept { return free_rank_; }
    [[nodiscard]] bool trivial() const noexcept { return torsion_.empty() && free_rank_ == 0; }
    /// Number of cyclic summands in the invariant-factor form.
    [[nodiscard]] std::size_t cyclic_count() const noexcept { return torsion_.size() + free_rank_; }
    /// Order of the torsion subgroup.
    [[nodiscard]] Integer torsion_order() const;

    [[nodiscard]] AbelianInvariants operator+(const AbelianInvariants& other) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;

private:
    std::vector<Integer> torsion_;
    std::size_t free_rank_ = 0;
};

/// Prime-power factorization p^k of a positive integer, by trial division
/// with a primality check on the cofactor. Throws if a composite cofactor
/// survives the trial bound.
std::vector<std::pair<Integer, int>> factorize(const Integer& n);

/// Number of Z (q = 0) or Z_q (q = p^k) summands in the primary decomposition.
/// Throws std::invalid_argument unless q is 0 or a prime power.
std::size_t codim_from_invariants(const AbelianInvariants& inv, const Integer& q);

/// Every q with a nonzero count (0 first, then prime powers ascending).
std::map<Integer, std::size_t> codim_table(const AbelianInvariants& inv);

struct SmithForm {
    std::vector<Integer> diagonal;    // length min(rows, cols), chain order, zeros last
    AbelianInvariants invariants;     // of Z^cols / row lattice
};

SmithForm snf(const IntMatrix& m);

/// U * m * V = D with U, V unimodular.
struct SmithTransform {
    std::vector<Integer> diagonal;
    IntMatrix u;
    IntMatrix v;
    IntMatrix v_inv;
};

SmithTransform snf_with_transforms(const IntMatrix& m);

/// Invariants of Z^cols / K with K = {v : row_i . v = 0 mod moduli[i]}
/// (modulus 0 means an exact equation). This is the image of the map.
AbelianInvariants image_invariants(const IntMatrix& eval, std::span<const Integer> row_moduli);

/// Streaming form of image_invariants: rows arrive one at a time.
class ImageAccumulator {
public:
    explicit ImageAccumulator(std::size_t cols);

    void add(std::span<const Integer> row, const Integer& modulus);
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] AbelianInvariants invariants() const;
    /// The kernel lattice K inside Z^cols.
    [[nodiscard]] SubmoduleLattice kernel() const;

private:
    struct Reduced {
        IntMatrix free_kernel;        // rows span K_free (identity when no exact rows)
        IntMatrix torsion_hnf;        // HNF of the torsion functionals on K_free, mod n
        Integer n;                    // common torsion modulus, 0 if none
    };
    [[nodiscard]] Reduced reduce() const;

    std::size_t cols_;
    HnfAccumulator free_;
    std::map<Integer, HnfAccumulator> torsion_;
};

/// Invariants of outer / inner. Throws std::invalid_argument if inner is not contained in outer.
AbelianInvariants lattice_quotient_invariants(const SubmoduleLattice& outer, const SubmoduleLattice& inner);
/// Rows of inner written in the basis of outer.
IntMatrix relative_coordinates(const SubmoduleLattice& outer, const SubmoduleLattice& inner);

/// Rank over Q (p = 0) or over F_p.
std::size_t field_rank(const IntMatrix& m, const Integer& p);

}  // namespace pil

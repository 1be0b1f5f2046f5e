#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pil/int_matrix.hpp"

namespace pil {

/// Sublattice of Z^r stored by its canonical row Hermite normal form.
///
/// Pivot columns strictly increase, pivots are positive, and every entry
/// above a pivot lies in [0, pivot).
class SubmoduleLattice {
public:
    SubmoduleLattice() = default;
    /// The zero lattice in Z^ambient.
    explicit SubmoduleLattice(std::size_t ambient) : basis_(0, ambient) {}
    /// Throws std::invalid_argument unless `hnf` is in canonical form.
    static SubmoduleLattice from_hnf(IntMatrix hnf);
    static SubmoduleLattice span(const IntMatrix& generators);
    static SubmoduleLattice span(const std::vector<IntVector>& generators, std::size_t ambient);
    static SubmoduleLattice full(std::size_t ambient);

    [[nodiscard]] std::size_t ambient_rank() const noexcept { return basis_.cols(); }
    [[nodiscard]] std::size_t rank() const noexcept { return basis_.rows(); }
    [[nodiscard]] const IntMatrix& basis() const noexcept { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Canonical remainder of v modulo the lattice.
    [[nodiscard]] IntVector reduce(std::span<const Integer> v) const;
    [[nodiscard]] bool contains(std::span<const Integer> v) const;
    [[nodiscard]] bool contains(const SubmoduleLattice& other) const;
    /// Coordinates of v in the basis rows, if v is a member.
    [[nodiscard]] std::optional<IntVector> coordinates(std::span<const Integer> v) const;

    [[nodiscard]] SubmoduleLattice operator+(const SubmoduleLattice& other) const;
    [[nodiscard]] SubmoduleLattice scaled(const Integer& m) const;

    friend bool operator==(const SubmoduleLattice&, const SubmoduleLattice&) = default;

private:
    IntMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Streaming Hermite reduction.
///
/// Rows are folded one at a time into sparse pivot rows, so the generating
/// matrix never has to be materialized. With a nonzero modulus N the rows
/// N*e_j are implicitly part of the lattice and entries are kept in [0, N).
/// With tracking enabled every pivot remembers its expression in the input
/// rows and inputs that reduce to zero yield a basis of the left kernel.
class HnfAccumulator {
public:
    explicit HnfAccumulator(std::size_t dim, Integer modulus = Integer(0), bool track = false);

    /// Folds a row; returns true if the lattice grew.
    bool add(std::span<const Integer> row);
    bool add(const SparseVector& row);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const Integer& modulus() const noexcept { return modulus_; }
    /// Number of pivot rows (modular case: explicit pivots only).
    [[nodiscard]] std::size_t pivot_count() const noexcept { return pivot_count_; }
    [[nodiscard]] std::size_t rank() const;
    [[nodiscard]] std::size_t inputs() const noexcept { return inputs_; }
    [[nodiscard]] bool full_unimodular() const;

    [[nodiscard]] bool contains(std::span<const Integer> v) const;
    /// Integer combination of the inputs equal to v (tracking only).
    [[nodiscard]] std::optional<IntVector> solve(std::span<const Integer> v) const;
    /// Left-kernel basis as combinations of inputs (tracking only).
    [[nodiscard]] const std::vector<SparseVector>& kernel() const noexcept { return kernel_; }

    /// Canonical HNF of the accumulated lattice (including N*Z^dim when modular).
    [[nodiscard]] SubmoduleLattice lattice() const;

private:
    struct PivotRow {
        SparseVector entries;
        SparseVector tag;
    };

    void fold(IntVector& work, IntVector& tag, bool& grew);
    void fold_modular(IntVector work, bool& grew);
    void reduce_mod(IntVector& v) const;

    std::size_t dim_;
    Integer modulus_;
    bool track_;
    std::vector<std::optional<PivotRow>> pivots_;
    std::size_t pivot_count_ = 0;
    std::size_t inputs_ = 0;
    std::vector<SparseVector> kernel_;
};

/// Row Hermite normal form by min-absolute-value pivoting; zero rows dropped.
IntMatrix hnf(const IntMatrix& m);

/// Basis of {y : y * m = 0}.
IntMatrix left_kernel(const IntMatrix& m);
/// Basis of {v : m * v = 0}, as rows.
IntMatrix right_kernel(const IntMatrix& m);

}  // namespace pil

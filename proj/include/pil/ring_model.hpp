#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pil/int_matrix.hpp"
#include "pil/multilinear.hpp"

namespace pil {

/// Ring given by a Z-module presentation: basis e_0..e_{r-1} with e_k of
/// additive order moduli[k] (0 = infinite) and e_i e_j = sum_k c_ij^k e_k.
class RingModel {
public:
    /// `table` is dense with c_ij^k at (i * r + j) * r + k. Validates
    /// associativity, well-definedness modulo the moduli, that the generators
    /// span the additive group, and the unit. Throws std::invalid_argument.
    RingModel(std::string label, std::vector<Integer> moduli, std::vector<Integer> table,
              std::vector<IntVector> generators, std::optional<IntVector> unit);

    [[nodiscard]] const std::string& label() const noexcept { return label_; }
    [[nodiscard]] std::size_t rank() const noexcept { return moduli_.size(); }
    [[nodiscard]] const std::vector<Integer>& moduli() const noexcept { return moduli_; }
    [[nodiscard]] const std::vector<IntVector>& generators() const noexcept { return generators_; }
    [[nodiscard]] const std::optional<IntVector>& unit() const noexcept { return unit_; }
    [[nodiscard]] const Integer& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * rank() + j) * rank() + k];
    }
    /// Nonzero c_ij^k as (k, c) pairs.
    [[nodiscard]] const SparseVector& product_of_basis(std::size_t i, std::size_t j) const {
        return products_[i * rank() + j];
    }

    [[nodiscard]] IntVector reduce(IntVector v) const;
    [[nodiscard]] IntVector add(const IntVector& a, const IntVector& b) const;
    [[nodiscard]] IntVector multiply(const IntVector& a, const IntVector& b) const;
    [[nodiscard]] SparseVector multiply_sparse(const SparseVector& a, const SparseVector& b) const;

    /// Additive order of an element (0 if infinite).
    [[nodiscard]] Integer additive_order(const IntVector& v) const;
    /// Additive order of the unit; throws if there is none.
    [[nodiscard]] Integer characteristic() const;
    /// lcm of the additive orders of the generators (0 if any is infinite).
    [[nodiscard]] Integer exponent() const;

    [[nodiscard]] nlohmann::json to_json() const;
    static RingModel from_json(const nlohmann::json& j);

private:
    std::string label_;
    std::vector<Integer> moduli_;
    std::vector<Integer> table_;
    std::vector<SparseVector> products_;
    std::vector<IntVector> generators_;
    std::optional<IntVector> unit_;
};

/// Element of a model; coordinates are kept canonical.
class RingElement {
public:
    RingElement(const RingModel& model, IntVector coords);
    static RingElement zero(const RingModel& model);
    static RingElement basis(const RingModel& model, std::size_t k);

    [[nodiscard]] const RingModel& model() const noexcept { return *model_; }
    [[nodiscard]] const IntVector& coords() const noexcept { return coords_; }
    [[nodiscard]] bool is_zero() const { return pil::is_zero(coords_); }

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const Integer& c, const RingElement& a);
    friend bool operator==(const RingElement& a, const RingElement& b);

private:
    const RingModel* model_;
    IntVector coords_;
};

RingElement commutator(const RingElement& a, const RingElement& b);

RingModel cyclic_ring(const Integer& m);
/// Upper triangular [[Z_ell, Z_m], [0, Z_ell]] with basis e11, e22, e12.
RingModel ut2(const Integer& ell, const Integer& m);
/// Grassmann algebra on K generators over Z_ell (ell odd or 0), basis e_S indexed by bitmask S.
RingModel grassmann(const Integer& ell, int K);
RingModel direct_sum(const std::vector<RingModel>& models);

/// Sum over the monomials of f of coeff * a_{s(1)} ... a_{s(n)}.
RingElement evaluate(const MultilinearPoly& f, std::span<const RingElement> args);

/// Integers as JSON: native numbers up to 2^53, decimal strings beyond.
nlohmann::json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace pil

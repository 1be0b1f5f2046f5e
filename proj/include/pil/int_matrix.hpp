#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pil/integer.hpp"

namespace pil {

using IntVector = std::vector<Integer>;

/// Sorted (column, value) pairs with no zero values.
using SparseVector = std::vector<std::pair<std::uint32_t, Integer>>;

SparseVector to_sparse(std::span<const Integer> dense);
IntVector to_dense(const SparseVector& sparse, std::size_t dim);
bool is_zero(std::span<const Integer> v);

struct IntVectorHash {
    std::size_t operator()(const IntVector& v) const noexcept;
};

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] IntVector row_vector(std::size_t i) const;
    [[nodiscard]] std::vector<IntVector> row_vectors() const;

    void append_row(std::span<const Integer> r);
    [[nodiscard]] IntMatrix transpose() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Row vector times matrix.
IntVector operator*(std::span<const Integer> v, const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace pil

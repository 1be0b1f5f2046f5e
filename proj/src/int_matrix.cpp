#include "pil/int_matrix.hpp"

#include <stdexcept>

namespace pil {

SparseVector to_sparse(std::span<const Integer> dense) {
    SparseVector out;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (!dense[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
    }
    return out;
}

IntVector to_dense(const SparseVector& sparse, std::size_t dim) {
    IntVector out(dim);
    for (const auto& [i, v] : sparse) out.at(i) = v;
    return out;
}

bool is_zero(std::span<const Integer> v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::size_t IntVectorHash::operator()(const IntVector& v) const noexcept {
    std::size_t h = v.size();
    for (const auto& x : v) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Integer(1);
    return m;
}

IntVector IntMatrix::row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
}

std::vector<IntVector> IntMatrix::row_vectors() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
}

void IntMatrix::append_row(std::span<const Integer> r) {
    if (r.size() != cols_) throw std::invalid_argument("row length does not match matrix width");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j).addmul(x, b(k, j));
        }
    }
    return c;
}

IntVector operator*(std::span<const Integer> v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector/matrix dimension mismatch");
    IntVector out(m.cols());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j].addmul(v[k], m(k, j));
    }
    return out;
}

std::string to_string(const IntMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ", ";
        s += '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ',';
            s += m(i, j).to_string();
        }
        s += ']';
    }
    return s + "]";
}

}  // namespace pil

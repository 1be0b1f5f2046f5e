#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pil {

/// Element of S_n in one-line notation: sigma(i) = word()[i - 1], values 1..n.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `word` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    /// Transposition (a b) in S_n.
    static Permutation transposition(int n, int a, int b);
    /// The long cycle 1 -> 2 -> ... -> n -> 1.
    static Permutation long_cycle(int n);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(word_.size()); }
    [[nodiscard]] const std::vector<int>& word() const noexcept { return word_; }
    /// sigma(i), 1-based.
    [[nodiscard]] int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

    [[nodiscard]] Permutation inverse() const;
    /// +1 or -1.
    [[nodiscard]] int sign() const;
    /// Cycle lengths in weakly decreasing order (includes fixed points).
    [[nodiscard]] std::vector<int> cycle_type() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation operator*(const Permutation& a, const Permutation& b);

/// All permutations of S_n in lexicographic order of their words.
std::vector<Permutation> all_permutations(int n);
/// Lexicographic rank of a word (Lehmer code), 0 <= rank < n!.
std::size_t permutation_rank(std::span<const int> word);
Permutation permutation_unrank(int n, std::size_t rank);
std::size_t factorial(int n);

/// Representative of the conjugacy class with the given cycle type:
/// cycles filled with consecutive integers, longest first.
Permutation class_representative(std::span<const int> cycle_type);

/// Composition table of S_n in lexicographic indexing:
/// at(i, j) = rank(perm_i * perm_j). Cached per n; n <= 6.
class SymmetricGroupTable {
public:
    static const SymmetricGroupTable& get(int n);

    [[nodiscard]] int degree() const noexcept { return n_; }
    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] const std::vector<Permutation>& elements() const noexcept { return elements_; }
    [[nodiscard]] std::uint32_t product(std::size_t i, std::size_t j) const noexcept {
        return table_[i * order_ + j];
    }

private:
    explicit SymmetricGroupTable(int n);

    int n_;
    std::size_t order_;
    std::vector<Permutation> elements_;
    std::vector<std::uint32_t> table_;
};

}  // namespace pil

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pil/int_matrix.hpp"
#include "pil/lattice.hpp"
#include "pil/permutation.hpp"

namespace pil {

/// Element of P_n(Z). The monomial x_{s(1)} ... x_{s(n)} is keyed by s;
/// keys are ordered lexicographically, which matches permutation_rank.
/// Degree 0 is allowed and denotes integer scalars (key: the empty word).
class MultilinearPoly {
public:
    explicit MultilinearPoly(int degree = 0);
    static MultilinearPoly monomial(const Permutation& s, const Integer& coeff = Integer(1));
    static MultilinearPoly scalar(const Integer& c);
    /// Coefficients indexed by lexicographic rank, length n!.
    static MultilinearPoly from_vector(int degree, const IntVector& v);

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] const std::map<Permutation, Integer>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Integer coefficient(const Permutation& s) const;
    [[nodiscard]] IntVector to_vector() const;
    [[nodiscard]] std::string to_string() const;

    void add_term(const Permutation& s, const Integer& c);
    MultilinearPoly& operator+=(const MultilinearPoly& o);
    MultilinearPoly& operator-=(const MultilinearPoly& o);
    MultilinearPoly& operator*=(const Integer& c);

    friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
    friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
    friend MultilinearPoly operator*(const Integer& c, MultilinearPoly a) { return a *= c; }
    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

private:
    int degree_;
    std::map<Permutation, Integer> terms_;
};

MultilinearPoly monomial(const Permutation& s);

/// Renames x_i to x_{s(i)}.
MultilinearPoly act(const Permutation& s, const MultilinearPoly& f);
/// Same action on coefficient vectors indexed by lexicographic rank.
IntVector act_vector(const Permutation& s, const IntVector& v);

/// prefix * [factors[0]] * [factors[1]] * ..., brackets left-normed.
struct CommutatorWord {
    std::vector<int> prefix;
    std::vector<std::vector<int>> factors;

    [[nodiscard]] int degree() const;
    /// Throws std::invalid_argument unless the word uses each of 1..n exactly
    /// once, the prefix increases, and every bracket has length >= 2.
    void validate(int n) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const CommutatorWord&, const CommutatorWord&) = default;
};

MultilinearPoly expand(const CommutatorWord& w, int n);
/// Expansion of a single left-normed bracket on its own letters, as signed words.
std::vector<std::pair<int, std::vector<int>>> expand_bracket(const std::vector<int>& bracket);

/// Z-basis of Gamma_n(Z): products of left-normed brackets [x_a, ...] whose
/// first entry is the largest variable of the block, blocks ordered by their
/// smallest variable.
class ProperBasis {
public:
    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] const std::vector<CommutatorWord>& elements() const noexcept { return elements_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    /// Row i is elements()[i] expanded in the monomial basis (n! columns).
    [[nodiscard]] const IntMatrix& expansions() const noexcept { return expansions_; }
    [[nodiscard]] const SubmoduleLattice& lattice() const noexcept { return lattice_; }
    /// Coordinates of v in the basis, or nullopt if v is not proper.
    [[nodiscard]] std::optional<IntVector> coordinates(const IntVector& v) const;
    [[nodiscard]] MultilinearPoly combination(const IntVector& coords) const;

private:
    friend const ProperBasis& proper_basis(int n);
    int degree_ = 0;
    std::vector<CommutatorWord> elements_;
    IntMatrix expansions_;
    SubmoduleLattice lattice_;
    std::shared_ptr<HnfAccumulator> solver_;
};

/// Cached, thread-safe; 0 <= n <= 6. The basis is checked against the lattice
/// of all bracket products on construction (std::logic_error on mismatch).
const ProperBasis& proper_basis(int n);

/// Every product of left-normed brackets on {1..n} with first letter greater
/// than the second, in every factor order.
std::vector<CommutatorWord> bracket_product_candidates(int n);

struct ProperComponent {
    std::vector<int> prefix;       // increasing
    Permutation sigma;             // j -> j-th free variable, n-k+j -> prefix[j-1]
    IntVector coords;              // in proper_basis(n - k)
    MultilinearPoly proper_part;   // degree n - k, variables 1..n-k
};

/// f = sum over components of x_{prefix} * act(sigma, proper_part) on the free variables.
std::vector<ProperComponent> decompose(const MultilinearPoly& f);
/// Inverse of decompose.
MultilinearPoly recompose(const std::vector<ProperComponent>& components, int n);

}  // namespace pil

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pil/abelian.hpp"
#include "pil/character.hpp"
#include "pil/lattice.hpp"
#include "pil/permutation.hpp"

namespace pil {

inline constexpr int kMaxSpechtDegree = 8;

/// lambda_1 >= lambda_2 >= ... > 0. Trailing zeros are dropped on construction.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless the parts are non-negative and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    /// "3,2,1"; the empty string is the zero partition.
    static Partition parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// lambda_i, 1-based; 0 beyond the length.
    [[nodiscard]] int part(int i) const noexcept {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    [[nodiscard]] Partition conjugate() const;
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions(int n);
/// One permutation per cycle type, in the order of partitions(n).
std::vector<Permutation> class_representatives(int n);
/// Irreducible character value chi^lambda on the class of the given cycle type
/// (Murnaghan-Nakayama rule).
Integer character_value(const Partition& lambda, const Partition& cycle_type);

/// Composition of n. Parts are non-negative; zero parts can arise from the
/// raising operator and are kept, except trailing ones.
class GenPartition {
public:
    GenPartition() = default;
    explicit GenPartition(std::vector<int> parts);
    static GenPartition parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int part(int i) const noexcept {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const GenPartition&, const GenPartition&) = default;
    friend bool operator==(const GenPartition&, const GenPartition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Compositions of n with positive parts, in lexicographic order.
std::vector<GenPartition> compositions(int n);

/// Row-equivalence class of tableaux; each row is a sorted set.
struct Tabloid {
    GenPartition shape;
    std::vector<std::vector<int>> rows;

    friend bool operator==(const Tabloid&, const Tabloid&) = default;
};

/// A filling of a shape by 1..n, row by row.
using Tableau = std::vector<std::vector<int>>;

/// Basis of M(mu): all mu-tabloids, ordered lexicographically by row contents.
class TabloidModule {
public:
    /// Cached, thread-safe. Throws std::invalid_argument if n exceeds kMaxSpechtDegree.
    static std::shared_ptr<const TabloidModule> get(const GenPartition& mu);

    [[nodiscard]] const GenPartition& shape() const noexcept { return shape_; }
    [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
    [[nodiscard]] Tabloid tabloid(std::size_t index) const;
    /// Row (0-based) of each entry 1..n.
    [[nodiscard]] const std::vector<std::uint8_t>& word(std::size_t index) const { return words_[index]; }
    [[nodiscard]] std::size_t index_of(const std::vector<std::uint8_t>& word) const;
    [[nodiscard]] std::size_t index_of(const Tabloid& t) const;
    /// Index of sigma . tabloid.
    [[nodiscard]] std::size_t act(const Permutation& sigma, std::size_t index) const;
    [[nodiscard]] IntVector act(const Permutation& sigma, std::span<const Integer> v) const;

private:
    explicit TabloidModule(GenPartition mu);

    GenPartition shape_;
    std::vector<std::vector<std::uint8_t>> words_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

std::vector<Tabloid> tabloid_module_basis(const GenPartition& mu);

/// Element of M(mu) in the coordinates of tabloid_module_basis(mu).
struct TabloidVector {
    GenPartition shape;
    IntVector coeffs;

    friend bool operator==(const TabloidVector&, const TabloidVector&) = default;
};

/// Pair (lambda; mu) with lambda_i <= mu_i and lambda_1 = mu_1, or the zero pair (0; 0).
class PartitionPair {
public:
    /// Throws std::invalid_argument unless the pair is valid.
    PartitionPair(Partition lambda, GenPartition mu);
    static PartitionPair zero();

    [[nodiscard]] bool is_zero() const noexcept { return zero_; }
    [[nodiscard]] const Partition& lambda() const noexcept { return lambda_; }
    [[nodiscard]] const GenPartition& mu() const noexcept { return mu_; }
    /// lambda = mu as compositions.
    [[nodiscard]] bool is_specht() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;

private:
    PartitionPair() = default;
    Partition lambda_;
    GenPartition mu_;
    bool zero_ = true;
};

/// Every valid pair with mu a composition of n with positive parts.
std::vector<PartitionPair> valid_pairs(int n);

/// Tableau of shape mu filled with 1..n row by row.
Tableau standard_filling(const GenPartition& mu);
TabloidVector polytabloid(const PartitionPair& pair, const Tableau& t);

enum class SpechtGeneration {
    orbit_closure,   // S_n-orbit of one polytabloid, closed under (1 2) and (1 2 ... n)
    all_tableaux,    // polytabloids of all n! tableaux
};

/// Z-span of all polytabloids, in M(mu) coordinates. Not defined for the zero pair.
SubmoduleLattice specht_lattice(const PartitionPair& pair, SpechtGeneration mode = SpechtGeneration::orbit_closure);

/// psi_{i,v} with 1-based row index i.
TabloidVector psi(int i, int v, const TabloidVector& x);
/// Target shape of psi_{i,v} on M(mu).
GenPartition psi_target(const GenPartition& mu, int i, int v);

/// Columns c (>= 2) at which op_A / op_R apply.
std::vector<int> applicable_columns(const PartitionPair& pair);
/// Smallest c with lambda_i = mu_i for i < c and lambda_c < mu_c; 0 when lambda = mu.
int series_column(const PartitionPair& pair);
PartitionPair op_A(int c, const PartitionPair& pair);
PartitionPair op_R(int c, const PartitionPair& pair);

struct FiltrationFactor {
    Partition label;
    AbelianInvariants invariants;
    std::size_t rank = 0;
    std::optional<QuotientCharacter> character;
};

/// Chain M_0 > M_1 > ... > M_t inside M(mu), ending in 0 when the modulus is 0
/// and in m S(lambda; mu) otherwise (M_i is then the integral term plus m S).
/// Factor i is M_i / M_{i+1}; its rank is that of the integral factor.
struct FiltrationReport {
    PartitionPair pair = PartitionPair::zero();
    Integer modulus;
    std::vector<SubmoduleLattice> chain;
    std::vector<FiltrationFactor> factors;
};

/// Specht series of S(lambda; mu) by the psi / A_c / R_c recursion.
FiltrationReport specht_series(const PartitionPair& pair, bool characters = false);
/// The same chain with m S(lambda; mu) added to every term.
FiltrationReport specht_series(const PartitionPair& pair, const Integer& m, bool characters = false);
/// (S(lambda) / m S(lambda)) induced to S_n, realized as S(lambda; mu) with mu = (lambda, n - t).
FiltrationReport induce_mod(const Partition& lambda, int n, const Integer& m, bool characters = false);
/// All nu of n interlacing lambda.
std::vector<Partition> young_expected(const Partition& lambda, int n);

/// Traces of class representatives on factor i of a report.
QuotientCharacter factor_character(const FiltrationReport& report, std::size_t i);
/// Character of S(lambda) / m S(lambda) read from the lattice (rational when m = 0).
QuotientCharacter specht_character(const Partition& lambda, const Integer& m);

}  // namespace pil

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include "pil/abelian.hpp"
#include "pil/ring_model.hpp"

namespace pil {

/// Thrown when a computation would fold more rows than its budget allows.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultRowBudget = 5'000'000;
inline constexpr int kMaxCodimDegree = 6;

struct EvaluationOptions {
    /// Cap on distinct evaluation rows folded per computation.
    std::size_t row_budget = kDefaultRowBudget;
    bool proper = true;
};

/// Evaluation map P_n -> R^{tuples} restricted to generator tuples, folded
/// into image accumulators. Ordinary columns are monomials by lexicographic
/// rank; proper columns are the elements of proper_basis(n).
struct EvaluationSystem {
    int degree = 0;
    ImageAccumulator ordinary{0};
    ImageAccumulator proper{0};
    std::size_t multisets = 0;   // generator multisets with a nonzero evaluation
    std::size_t rows = 0;        // distinct ordinary rows folded
};

/// n = 0 evaluates scalars at the unit (throws for non-unital models).
EvaluationSystem evaluation_system(const RingModel& r, int n, const EvaluationOptions& options = {});

struct CodimReport {
    std::string ring;
    int n = 0;
    AbelianInvariants ordinary;
    AbelianInvariants proper;
    std::map<Integer, std::size_t> ordinary_per_q;
    std::map<Integer, std::size_t> proper_per_q;
    std::size_t rows = 0;
    double seconds = 0;
};

CodimReport ordinary_codim(const RingModel& r, int n, const EvaluationOptions& options = {});
AbelianInvariants proper_codim(const RingModel& r, int n, const EvaluationOptions& options = {});

/// P_n cap Id(R) as a lattice in Z^{n!}.
SubmoduleLattice identity_lattice(const RingModel& r, int n, const EvaluationOptions& options = {});
/// Gamma_n cap Id(R) in proper_basis(n) coordinates.
SubmoduleLattice proper_identity_lattice(const RingModel& r, int n, const EvaluationOptions& options = {});

/// Evaluation matrix over generator tuples (one row per tuple and coordinate)
/// with its row moduli; rows equal to zero are dropped. Small n only.
struct EvaluationMatrix {
    IntMatrix matrix;
    std::vector<Integer> moduli;
};
EvaluationMatrix evaluation_matrix(const RingModel& r, int n, const EvaluationOptions& options = {});

/// True if f vanishes on every tuple of generators.
bool vanishes_on_generators(const RingModel& r, const MultilinearPoly& f);

}  // namespace pil

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pil/abelian.hpp"
#include "pil/character.hpp"
#include "pil/codim.hpp"
#include "pil/multilinear.hpp"
#include "pil/ring_model.hpp"
#include "pil/specht.hpp"

namespace pil {

/// One exact comparison. `pass` is set iff expected == computed.
struct VerificationOutcome {
    std::string claim;
    std::string check;
    std::string subject;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string witness;
};

/// Known suite ids, in the order the CLI lists them.
const std::vector<std::string>& claim_ids();

/// n! / prod of hook lengths.
std::size_t hook_dimension(const Partition& lambda);

/// "{q: count, ...}" with q = 0 standing for Z.
std::string to_string(const std::map<Integer, std::size_t>& per_q);

/// Lattice in Z^{n!} generated by u * f(w_1, ..., w_k) * v over all
/// monomials u, w_i (nonempty), v on disjoint variables using each of 1..n once.
SubmoduleLattice consequence_lattice(const std::vector<MultilinearPoly>& identities, int n);

/// Identity bases used by the verification suites.
std::vector<MultilinearPoly> ut2_identities(const Integer& ell, const Integer& m);
std::vector<MultilinearPoly> grassmann_identities(const Integer& ell);
/// [x2, x1][x3, x4] + [x2, x3][x1, x4].
MultilinearPoly grassmann_lemma_polynomial();

std::vector<VerificationOutcome> verify_proper_ordinary(const RingModel& r, int n_max,
                                                        const EvaluationOptions& options = {});

struct DrenskyFactor {
    /// "M0/M2" or "M<t>/M<t+1>".
    std::string label;
    int t = 0;
    AbelianInvariants invariants;
    QuotientCharacter character;
    AbelianInvariants expected_invariants;
    QuotientCharacter expected_character;
};

/// M_0 > M_2 >= M_3 >= ... >= M_n >= M_{n+1} = P_n cap Id(R); there is no M_1.
struct DrenskyFiltration {
    std::string ring;
    int n = 0;
    Integer characteristic;
    std::vector<SubmoduleLattice> chain;   // M_0, M_2, ..., M_{n+1}
    std::vector<DrenskyFactor> factors;
    std::vector<VerificationOutcome> outcomes;
};

DrenskyFiltration drensky_filtration(const RingModel& r, int n, const EvaluationOptions& options = {});

/// Character of the proper quotient Gamma_n / (Gamma_n cap Id(R)) on class_representatives(n).
QuotientCharacter proper_quotient_character(const RingModel& r, int n, const EvaluationOptions& options = {});

std::vector<VerificationOutcome> verify_ut2(const Integer& ell, const Integer& m, int n_max,
                                            const EvaluationOptions& options = {});
/// K = 0 means K = n + 1 for every n.
std::vector<VerificationOutcome> verify_grassmann(const Integer& ell, int K, int n_max,
                                                  const EvaluationOptions& options = {});
/// Proper quotients of grassmann(ell, n + 1) for 2 <= n <= n_max.
std::vector<VerificationOutcome> verify_grassmann_proper(const Integer& ell, int n_max,
                                                         const EvaluationOptions& options = {});
std::vector<VerificationOutcome> verify_field_props(const RingModel& r, int n_max,
                                                    const EvaluationOptions& options = {});

std::vector<VerificationOutcome> verify_specht_torsion_free(int n_max);
/// psi_{c-1, lambda_c} maps S(lambda; mu) onto S(R_c) with kernel S(A_c), for every applicable c.
std::vector<VerificationOutcome> verify_psi_lemma(int n_max);
std::vector<VerificationOutcome> verify_young(int n_max, const std::vector<Integer>& moduli);
/// Randomized algebraic properties with a fixed seed.
std::vector<VerificationOutcome> verify_properties(std::uint64_t seed, int trials = 100);

bool all_pass(const std::vector<VerificationOutcome>& outcomes);

}  // namespace pil

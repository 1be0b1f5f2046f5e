#include "pil/theory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "pil/parallel.hpp"

namespace pil {

namespace {

VerificationOutcome make_outcome(std::string claim, std::string check, std::string subject, std::string expected,
                                 std::string computed, std::string witness = {}) {
    VerificationOutcome o;
    o.claim = std::move(claim);
    o.check = std::move(check);
    o.subject = std::move(subject);
    o.pass = expected == computed;
    o.expected = std::move(expected);
    o.computed = std::move(computed);
    if (!o.pass) o.witness = witness.empty() ? o.subject : std::move(witness);
    return o;
}

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return b;
}

std::string vector_string(const std::vector<Integer>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].to_string();
    }
    return s + "]";
}

std::string character_string(const QuotientCharacter& c) {
    std::string s = "rational " + vector_string(c.rational);
    if (!c.torsion_modulus.is_zero()) s += " mod " + c.torsion_modulus.to_string() + " " + vector_string(c.modular);
    return s;
}

std::string count_string(std::size_t good, std::size_t total, const std::string& what) {
    return std::to_string(good) + " of " + std::to_string(total) + " " + what;
}

std::string labels_string(std::vector<Partition> labels) {
    std::sort(labels.begin(), labels.end());
    std::string s;
    for (const auto& l : labels) {
        if (!s.empty()) s += " ";
        s += l.to_string();
    }
    return s;
}

IntVector to_int_vector(std::span<const Integer> v) { return IntVector(v.begin(), v.end()); }

const LatticeAction& monomial_action() {
    static const LatticeAction a = [](const Permutation& s, std::span<const Integer> v) {
        return act_vector(s, to_int_vector(v));
    };
    return a;
}

AbelianInvariants repeat(const AbelianInvariants& a, std::size_t times) {
    AbelianInvariants out;
    for (std::size_t i = 0; i < times; ++i) out = out + a;
    return out;
}

QuotientCharacter trivial_character(std::size_t classes) {
    QuotientCharacter c;
    c.rational.assign(classes, Integer(0));
    c.torsion_modulus = Integer(0);
    return c;
}

QuotientCharacter proper_character(int n, const SubmoduleLattice& inner) {
    const ProperBasis& b = proper_basis(n);
    const auto reps = class_representatives(n);
    const LatticeAction action = [&b](const Permutation& s, std::span<const Integer> coords) {
        auto c = b.coordinates(act_vector(s, coords * b.expansions()));
        if (!c) throw std::logic_error("proper polynomials are not closed under renaming");
        return *c;
    };
    return quotient_character(SubmoduleLattice::full(b.size()), inner, reps, action);
}

// Character of (Q restricted from S_t) induced to S_n with S_{n-t} acting trivially.
QuotientCharacter induced_character(const QuotientCharacter& q, int t, int n) {
    const auto small = partitions(t);
    const auto reps = class_representatives(n);
    QuotientCharacter out;
    out.torsion_modulus = q.torsion_modulus;
    for (const auto& g : reps) {
        const auto cycles = g.cycle_type();
        Integer rational(0);
        Integer modular(0);
        const std::size_t subsets = std::size_t{1} << cycles.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<int> type;
            int len = 0;
            for (std::size_t i = 0; i < cycles.size(); ++i) {
                if (mask >> i & 1U) {
                    type.push_back(cycles[i]);
                    len += cycles[i];
                }
            }
            if (len != t) continue;
            const Partition p(type);
            const auto idx = static_cast<std::size_t>(std::find(small.begin(), small.end(), p) - small.begin());
            rational += q.rational[idx];
            if (!q.torsion_modulus.is_zero()) modular += q.modular[idx];
        }
        out.rational.push_back(rational);
        if (!q.torsion_modulus.is_zero()) out.modular.push_back(floor_mod(modular, q.torsion_modulus));
    }
    return out;
}

QuotientCharacter cyclic_trivial_character(const Integer& ch, std::size_t classes) {
    QuotientCharacter c;
    c.torsion_modulus = Integer(0);
    if (ch.is_zero()) {
        c.rational.assign(classes, Integer(1));
    } else {
        c.rational.assign(classes, Integer(0));
        if (!ch.is_one()) {
            c.torsion_modulus = ch;
            c.modular.assign(classes, floor_mod(Integer(1), ch));
        }
    }
    return c;
}

// x_1 ... x_{n-s} g(x_{n-s+1}, ..., x_n) for g given in monomial coordinates of P_s.
IntVector shifted_product(std::span<const Integer> g, int s, int n) {
    IntVector out(factorial(n));
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n - s; ++i) word[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j].is_zero()) continue;
        const Permutation w = permutation_unrank(s, j);
        for (int i = 1; i <= s; ++i) word[static_cast<std::size_t>(n - s + i - 1)] = w(i) + n - s;
        out[permutation_rank(word)] += g[j];
    }
    return out;
}

MultilinearPoly bracket_product(const std::vector<std::vector<int>>& factors, int n) {
    CommutatorWord w;
    w.factors = factors;
    return expand(w, n);
}

// Partitions (l1, l2, l3) of n with l2 >= 1 and l3 <= 1, with multiplicity l1 - l2 + 1.
std::vector<Partition> ut2_table(int n) {
    std::vector<Partition> out;
    for (const auto& p : partitions(n)) {
        if (p.length() > 3 || p.part(2) < 1 || p.part(3) > 1) continue;
        for (int i = 0; i < p.part(1) - p.part(2) + 1; ++i) out.push_back(p);
    }
    return out;
}

struct Refinement {
    std::vector<Partition> labels;
    AbelianInvariants invariants;
};

// Young's rule refinement of (S(lambda) / m S(lambda)) induced to S_n.
Refinement refine(const Partition& lambda, int n, const Integer& m) {
    Refinement out;
    if (lambda.size() == n) {
        out.labels.push_back(lambda);
        out.invariants = AbelianInvariants::power(m, hook_dimension(lambda));
        return out;
    }
    const auto rep = induce_mod(lambda, n, m);
    for (const auto& f : rep.factors) {
        out.labels.push_back(f.label);
        out.invariants = out.invariants + f.invariants;
    }
    return out;
}

Partition hook(int a, int k) {
    std::vector<int> parts{a};
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    return Partition(parts);
}

std::string ring_subject(const RingModel& r, int n) { return r.label() + " n=" + std::to_string(n); }

bool is_prime(const Integer& p) {
    if (p.sign() <= 0 || p.is_one()) return false;
    const auto f = factorize(p);
    return f.size() == 1 && f.front().second == 1;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids{"ut2.codim",          "grassmann.codim", "proper-ordinary",
                                              "young",              "drensky",         "specht.torsionfree",
                                              "field-props",        "specht.psi",      "properties"};
    return ids;
}

std::size_t hook_dimension(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::size_t num = factorial(lambda.size());
    std::size_t den = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            den *= static_cast<std::size_t>(lambda.part(i) - j + conj.part(j) - i + 1);
        }
    }
    return num / den;
}

std::string to_string(const std::map<Integer, std::size_t>& per_q) {
    std::string s = "{";
    for (const auto& [q, c] : per_q) {
        if (s.size() > 1) s += ", ";
        s += q.to_string() + ": " + std::to_string(c);
    }
    return s + "}";
}

bool all_pass(const std::vector<VerificationOutcome>& outcomes) {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.pass; });
}

// ---------------------------------------------------------------------------
// Identities

SubmoduleLattice consequence_lattice(const std::vector<MultilinearPoly>& identities, int n) {
    const std::size_t dim = factorial(n);
    HnfAccumulator acc(dim);
    const auto words = all_permutations(n);
    for (const auto& f : identities) {
        const int k = f.degree();
        if (k < 1 || k > n || f.is_zero()) continue;
        // prefix [0, cut[0]), block j in [cut[j-1], cut[j]), suffix [cut[k], n)
        std::vector<int> cut(static_cast<std::size_t>(k) + 1);
        const std::vector<int>* w = nullptr;
        std::vector<int> out;
        auto emit = [&] {
            IntVector row(dim);
            for (const auto& [tau, c] : f.terms()) {
                out.assign(w->begin(), w->begin() + cut[0]);
                for (int j = 1; j <= k; ++j) {
                    const auto b = static_cast<std::size_t>(tau(j));
                    out.insert(out.end(), w->begin() + cut[b - 1], w->begin() + cut[b]);
                }
                out.insert(out.end(), w->begin() + cut[static_cast<std::size_t>(k)], w->end());
                row[permutation_rank(out)] += c;
            }
            acc.add(row);
        };
        std::function<void(int)> place = [&](int j) {
            if (j > k) {
                emit();
                return;
            }
            for (int e = cut[static_cast<std::size_t>(j) - 1] + 1; e <= n - (k - j); ++e) {
                cut[static_cast<std::size_t>(j)] = e;
                place(j + 1);
            }
        };
        for (const auto& p : words) {
            w = &p.word();
            for (int a = 0; a + k <= n; ++a) {
                cut[0] = a;
                place(1);
            }
        }
    }
    return acc.lattice();
}

std::vector<MultilinearPoly> ut2_identities(const Integer& ell, const Integer& m) {
    std::vector<MultilinearPoly> out{bracket_product({{1, 2}, {3, 4}}, 4)};
    if (!ell.is_zero()) out.push_back(MultilinearPoly::monomial(Permutation::identity(1), ell));
    if (!m.is_zero()) out.push_back(m * bracket_product({{1, 2}}, 2));
    return out;
}

std::vector<MultilinearPoly> grassmann_identities(const Integer& ell) {
    std::vector<MultilinearPoly> out{bracket_product({{1, 2, 3}}, 3)};
    if (!ell.is_zero()) out.push_back(MultilinearPoly::monomial(Permutation::identity(1), ell));
    return out;
}

MultilinearPoly grassmann_lemma_polynomial() {
    return bracket_product({{2, 1}, {3, 4}}, 4) + bracket_product({{2, 3}, {1, 4}}, 4);
}

// ---------------------------------------------------------------------------
// Proper and ordinary codimensions

std::vector<VerificationOutcome> verify_proper_ordinary(const RingModel& r, int n_max,
                                                        const EvaluationOptions& options) {
    if (!r.unit()) throw std::invalid_argument("the binomial identity needs a unital ring");
    const std::string claim = "proper-ordinary";
    std::vector<std::map<Integer, std::size_t>> gamma(static_cast<std::size_t>(std::max(n_max, 1)) + 1);
    gamma[0] = codim_table(AbelianInvariants::power(r.characteristic(), 1));
    std::vector<CodimReport> reports;
    for (int n = 0; n <= n_max; ++n) {
        reports.push_back(ordinary_codim(r, n, options));
        if (n >= 2) gamma[static_cast<std::size_t>(n)] = reports.back().proper_per_q;
    }
    std::vector<VerificationOutcome> out;
    for (int n = 0; n <= n_max; ++n) {
        std::map<Integer, std::size_t> expected;
        for (int j = 0; j <= n; ++j) {
            for (const auto& [q, c] : gamma[static_cast<std::size_t>(j)]) expected[q] += binomial(n, j) * c;
        }
        const auto& computed = reports[static_cast<std::size_t>(n)].ordinary_per_q;
        std::string witness;
        for (const auto& [q, c] : expected) {
            const auto it = computed.find(q);
            if ((it == computed.end() ? 0 : it->second) != c) {
                witness = "n=" + std::to_string(n) + " q=" + q.to_string();
                break;
            }
        }
        if (witness.empty()) witness = "n=" + std::to_string(n) + " extra q in computed counts";
        out.push_back(make_outcome(claim, "binomial-sum", ring_subject(r, n), to_string(expected),
                                   to_string(computed), witness));
    }
    return out;
}

QuotientCharacter proper_quotient_character(const RingModel& r, int n, const EvaluationOptions& options) {
    return proper_character(n, proper_identity_lattice(r, n, options));
}

DrenskyFiltration drensky_filtration(const RingModel& r, int n, const EvaluationOptions& options) {
    if (!r.unit()) throw std::invalid_argument("the filtration needs a unital ring");
    if (n < 2 || n > kMaxCodimDegree) throw std::invalid_argument("filtration degree out of range");
    DrenskyFiltration out;
    out.ring = r.label();
    out.n = n;
    out.characteristic = r.characteristic();

    const std::size_t dim = factorial(n);
    const SubmoduleLattice kernel = identity_lattice(r, n, options);
    const auto perms = all_permutations(n);
    std::vector<SubmoduleLattice> upper(static_cast<std::size_t>(n) + 1);
    HnfAccumulator acc(dim);
    for (int s = n; s >= 2; --s) {
        const ProperBasis& b = proper_basis(s);
        for (std::size_t i = 0; i < b.size(); ++i) {
            const IntVector g = shifted_product(b.expansions().row(i), s, n);
            for (const auto& sigma : perms) acc.add(act_vector(sigma, g));
        }
        upper[static_cast<std::size_t>(s)] = acc.lattice();
    }
    out.chain.push_back(SubmoduleLattice::full(dim));
    for (int t = 2; t <= n; ++t) out.chain.push_back(upper[static_cast<std::size_t>(t)] + kernel);
    out.chain.push_back(kernel);

    const auto reps = class_representatives(n);
    const std::string subject = ring_subject(r, n);
    for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
        DrenskyFactor f;
        f.t = i == 0 ? 0 : static_cast<int>(i) + 1;
        f.label = i == 0 ? "M0/M2" : "M" + std::to_string(f.t) + "/M" + std::to_string(f.t + 1);
        f.invariants = lattice_quotient_invariants(out.chain[i], out.chain[i + 1]);
        f.character = quotient_character(out.chain[i], out.chain[i + 1], reps, monomial_action());
        if (i == 0) {
            f.expected_invariants = AbelianInvariants::power(out.characteristic, 1);
            f.expected_character = cyclic_trivial_character(out.characteristic, reps.size());
        } else {
            const SubmoduleLattice inner = proper_identity_lattice(r, f.t, options);
            const AbelianInvariants q =
                lattice_quotient_invariants(SubmoduleLattice::full(proper_basis(f.t).size()), inner);
            f.expected_invariants = repeat(q, binomial(n, f.t));
            f.expected_character = induced_character(proper_character(f.t, inner), f.t, n);
        }
        out.outcomes.push_back(make_outcome("drensky", "factor-invariants", subject + " " + f.label,
                                            f.expected_invariants.to_string(), f.invariants.to_string()));
        out.outcomes.push_back(make_outcome("drensky", "factor-character", subject + " " + f.label,
                                            character_string(f.expected_character), character_string(f.character)));
        out.factors.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Model families

std::vector<VerificationOutcome> verify_ut2(const Integer& ell, const Integer& m, int n_max,
                                            const EvaluationOptions& options) {
    const RingModel r = ut2(ell, m);
    const std::string claim = "ut2.codim";
    std::vector<VerificationOutcome> out;

    const auto ids = ut2_identities(ell, m);
    for (const auto& f : ids) {
        out.push_back(make_outcome(claim, "identity-vanishes", r.label() + " " + f.to_string(), "true",
                                   vanishes_on_generators(r, f) ? "true" : "false"));
    }

    for (int n = 1; n <= n_max; ++n) {
        const std::string subject = ring_subject(r, n);
        const CodimReport rep = ordinary_codim(r, n, options);
        const std::size_t copies = static_cast<std::size_t>((n - 2) * (1 << (n - 1)) + 1);
        const AbelianInvariants expected = AbelianInvariants::power(ell, 1) + AbelianInvariants::power(m, copies);
        out.push_back(make_outcome(claim, "codim", subject, expected.to_string(), rep.ordinary.to_string()));

        const SubmoduleLattice kernel = identity_lattice(r, n, options);
        const SubmoduleLattice cons = consequence_lattice(ids, n);
        out.push_back(make_outcome(claim, "identity-membership", subject, "true",
                                   kernel.contains(cons) ? "true" : "false"));
        out.push_back(make_outcome(claim, "consequence-closure", subject, "equal",
                                   cons == kernel ? "equal" : "differs"));

        if (n >= 2) {
            const Partition lambda({n - 1, 1});
            const SubmoduleLattice s = specht_lattice(PartitionPair(lambda, GenPartition(lambda.parts())));
            out.push_back(make_outcome(claim, "proper-invariants", subject,
                                       AbelianInvariants::power(m, s.rank()).to_string(),
                                       proper_codim(r, n, options).to_string()));
            out.push_back(make_outcome(claim, "proper-character", subject,
                                       character_string(specht_character(lambda, m)),
                                       character_string(proper_quotient_character(r, n, options))));
        }

        if (n >= 2 && n <= 4) {
            const DrenskyFiltration d = drensky_filtration(r, n, options);
            std::vector<Partition> labels{Partition({n})};
            AbelianInvariants total = d.factors.front().invariants;
            for (std::size_t i = 1; i < d.factors.size(); ++i) {
                const int t = d.factors[i].t;
                const Refinement ref = refine(Partition({t - 1, 1}), n, m);
                out.push_back(make_outcome(claim, "young-refinement", subject + " " + d.factors[i].label,
                                           ref.invariants.to_string(), d.factors[i].invariants.to_string()));
                labels.insert(labels.end(), ref.labels.begin(), ref.labels.end());
                total = total + d.factors[i].invariants;
            }
            std::vector<Partition> table = ut2_table(n);
            AbelianInvariants table_total = AbelianInvariants::power(ell, 1);
            for (const auto& p : table) table_total = table_total + AbelianInvariants::power(m, hook_dimension(p));
            table.push_back(Partition({n}));
            out.push_back(make_outcome(claim, "factor-labels", subject, labels_string(table), labels_string(labels)));
            out.push_back(make_outcome(claim, "factor-total", subject, table_total.to_string(), total.to_string()));
        }
    }
    return out;
}

namespace {

std::vector<VerificationOutcome> grassmann_proper_outcomes(const RingModel& r, const Integer& ell, int n,
                                                           const EvaluationOptions& options) {
    const std::string claim = "grassmann.codim";
    const std::string subject = ring_subject(r, n);
    const SubmoduleLattice inner = proper_identity_lattice(r, n, options);
    const AbelianInvariants proper = lattice_quotient_invariants(SubmoduleLattice::full(inner.ambient_rank()), inner);
    const QuotientCharacter pc = proper_character(n, inner);
    AbelianInvariants expected;
    QuotientCharacter expected_character = trivial_character(partitions(n).size());
    if (n % 2 == 0) {
        expected = AbelianInvariants::power(ell, 1);
        expected_character = specht_character(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), ell);
    }
    return {make_outcome(claim, "proper-invariants", subject, expected.to_string(), proper.to_string()),
            make_outcome(claim, "proper-character", subject, character_string(expected_character),
                         character_string(pc))};
}

}  // namespace

std::vector<VerificationOutcome> verify_grassmann_proper(const Integer& ell, int n_max, const EvaluationOptions& options) {
    std::vector<VerificationOutcome> out;
    for (int n = 2; n <= n_max; ++n) {
        auto o = grassmann_proper_outcomes(grassmann(ell, n + 1), ell, n, options);
        out.insert(out.end(), o.begin(), o.end());
    }
    return out;
}

std::vector<VerificationOutcome> verify_grassmann(const Integer& ell, int K, int n_max,
                                                  const EvaluationOptions& options) {
    if (!ell.is_zero() && floor_mod(ell, Integer(2)).is_zero()) {
        throw std::invalid_argument("grassmann verification needs an odd or zero characteristic");
    }
    if (K != 0 && K < n_max + 1) throw std::invalid_argument("grassmann verification needs K >= n_max + 1");
    const std::string claim = "grassmann.codim";
    std::vector<VerificationOutcome> out;

    const RingModel big = grassmann(ell, K != 0 ? K : std::max(n_max + 1, 4));
    auto ids = grassmann_identities(ell);
    ids.push_back(grassmann_lemma_polynomial());
    for (const auto& f : ids) {
        out.push_back(make_outcome(claim, "identity-vanishes", big.label() + " " + f.to_string(), "true",
                                   vanishes_on_generators(big, f) ? "true" : "false"));
    }
    const auto basis_ids = grassmann_identities(ell);

    for (int n = 1; n <= n_max; ++n) {
        const int k = K != 0 ? K : n + 1;
        const RingModel r = grassmann(ell, k);
        const RingModel r_next = grassmann(ell, k + 1);
        const std::string subject = ring_subject(r, n);
        const AbelianInvariants expected = AbelianInvariants::power(ell, std::size_t{1} << (n - 1));
        const CodimReport rep = ordinary_codim(r, n, options);
        const CodimReport rep_next = ordinary_codim(r_next, n, options);
        out.push_back(make_outcome(claim, "codim", subject, expected.to_string(), rep.ordinary.to_string()));
        out.push_back(make_outcome(claim, "stabilization", subject + " vs " + r_next.label(),
                                   rep.ordinary.to_string(), rep_next.ordinary.to_string()));

        const SubmoduleLattice kernel = identity_lattice(r, n, options);
        const SubmoduleLattice cons = consequence_lattice(basis_ids, n);
        out.push_back(make_outcome(claim, "consequence-closure", subject, "equal",
                                   cons == kernel ? "equal" : "differs"));

        if (n >= 2) {
            auto proper = grassmann_proper_outcomes(r, ell, n, options);
            out.insert(out.end(), proper.begin(), proper.end());
        }

        std::size_t hook_sum = 0;
        for (int j = 0; j < n; ++j) {
            const Partition h = hook(n - j, j);
            hook_sum += specht_lattice(PartitionPair(h, GenPartition(h.parts()))).rank();
        }
        out.push_back(make_outcome(claim, "hook-ranks", subject, std::to_string(std::size_t{1} << (n - 1)),
                                   std::to_string(hook_sum)));

        if (n >= 2 && n <= 4) {
            const DrenskyFiltration d = drensky_filtration(r, n, options);
            std::vector<Partition> labels{Partition({n})};
            for (std::size_t i = 1; i < d.factors.size(); ++i) {
                const int t = d.factors[i].t;
                Refinement ref;
                if (t % 2 == 0) ref = refine(Partition(std::vector<int>(static_cast<std::size_t>(t), 1)), n, ell);
                out.push_back(make_outcome(claim, "young-refinement", subject + " " + d.factors[i].label,
                                           ref.invariants.to_string(), d.factors[i].invariants.to_string()));
                labels.insert(labels.end(), ref.labels.begin(), ref.labels.end());
            }
            std::vector<Partition> hooks;
            for (int j = 0; j < n; ++j) hooks.push_back(hook(n - j, j));
            out.push_back(make_outcome(claim, "factor-labels", subject, labels_string(hooks), labels_string(labels)));
        }
    }
    return out;
}

std::vector<VerificationOutcome> verify_field_props(const RingModel& r, int n_max, const EvaluationOptions& options) {
    const Integer p = r.moduli().empty() ? Integer(0) : r.moduli().front();
    for (const auto& m : r.moduli()) {
        if (m != p) throw std::invalid_argument("field surrogate needs equal moduli");
    }
    if (!p.is_zero() && !is_prime(p)) throw std::invalid_argument("field surrogate needs moduli 0 or a prime");
    const std::string claim = "field-props";
    std::vector<VerificationOutcome> out;
    for (int n = 1; n <= n_max; ++n) {
        const std::string subject = ring_subject(r, n);
        const CodimReport rep = ordinary_codim(r, n, options);
        const EvaluationMatrix e = evaluation_matrix(r, n, options);
        const std::size_t expected = p.is_zero() ? rep.ordinary.free_rank() : codim_from_invariants(rep.ordinary, p);
        out.push_back(make_outcome(claim, p.is_zero() ? "rank-over-Q" : "rank-over-Fp", subject,
                                   std::to_string(expected), std::to_string(field_rank(e.matrix, p))));
        std::map<Integer, std::size_t> off;
        for (const auto& [q, c] : rep.ordinary_per_q) {
            if (q != p) off[q] = c;
        }
        out.push_back(make_outcome(claim, "off-characteristic", subject, "{}", to_string(off)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Specht modules

std::vector<VerificationOutcome> verify_specht_torsion_free(int n_max) {
    std::vector<VerificationOutcome> out;
    for (int n = 1; n <= n_max; ++n) {
        const auto pairs = valid_pairs(n);
        std::vector<char> ok(pairs.size(), 0);
        parallel_for(pairs.size(), [&](std::size_t i) {
            const SubmoduleLattice s = specht_lattice(pairs[i]);
            const SmithForm f = snf(s.basis());
            ok[i] = std::all_of(f.diagonal.begin(), f.diagonal.end(), [](const Integer& d) { return abs(d).is_one(); });
        });
        std::string witness;
        std::size_t good = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (ok[i]) {
                ++good;
            } else if (witness.empty()) {
                witness = pairs[i].to_string();
            }
        }
        out.push_back(make_outcome("specht.torsionfree", "invariant-factors", "n=" + std::to_string(n),
                                   count_string(pairs.size(), pairs.size(), "pairs with unit invariant factors"),
                                   count_string(good, pairs.size(), "pairs with unit invariant factors"), witness));
    }
    return out;
}

std::vector<VerificationOutcome> verify_psi_lemma(int n_max) {
    std::vector<VerificationOutcome> out;
    for (int n = 2; n <= n_max; ++n) {
        struct Case {
            PartitionPair pair;
            int c;
        };
        std::vector<Case> cases;
        for (const auto& pair : valid_pairs(n)) {
            for (int c : applicable_columns(pair)) cases.push_back({pair, c});
        }
        std::vector<std::string> failures(cases.size());
        parallel_for(cases.size(), [&](std::size_t k) {
            const auto& [pair, c] = cases[k];
            const SubmoduleLattice s = specht_lattice(pair);
            const int v = pair.lambda().part(c);
            const GenPartition nu = psi_target(pair.mu(), c - 1, v);
            HnfAccumulator acc(TabloidModule::get(nu)->size(), Integer(0), true);
            for (std::size_t i = 0; i < s.rank(); ++i) {
                acc.add(psi(c - 1, v, TabloidVector{pair.mu(), to_int_vector(s.basis().row(i))}).coeffs);
            }
            std::vector<IntVector> kernel_rows;
            for (const auto& kv : acc.kernel()) {
                kernel_rows.push_back(std::span<const Integer>(to_dense(kv, s.rank())) * s.basis());
            }
            const SubmoduleLattice kernel = SubmoduleLattice::span(kernel_rows, s.ambient_rank());
            const PartitionPair a = op_A(c, pair);
            const SubmoduleLattice expected_kernel = a.is_zero() ? SubmoduleLattice(s.ambient_rank()) : specht_lattice(a);
            std::string f;
            if (acc.lattice() != specht_lattice(op_R(c, pair))) f += " image";
            if (kernel != expected_kernel) f += " kernel";
            if (!f.empty()) failures[k] = pair.to_string() + " c=" + std::to_string(c) + f;
        });
        std::size_t good = 0;
        std::string witness;
        for (const auto& f : failures) {
            if (f.empty()) {
                ++good;
            } else if (witness.empty()) {
                witness = f;
            }
        }
        out.push_back(make_outcome("specht.psi", "image-and-kernel", "n=" + std::to_string(n),
                                   count_string(cases.size(), cases.size(), "applicable cases"),
                                   count_string(good, cases.size(), "applicable cases"), witness));
    }
    return out;
}

std::vector<VerificationOutcome> verify_young(int n_max, const std::vector<Integer>& moduli) {
    std::vector<VerificationOutcome> out;
    for (int n = 2; n <= n_max; ++n) {
        std::vector<Partition> lambdas;
        for (int t = 1; t < n; ++t) {
            for (auto& l : partitions(t)) lambdas.push_back(std::move(l));
        }
        for (const auto& m : moduli) {
            std::vector<std::string> failures(lambdas.size());
            parallel_for(lambdas.size(), [&](std::size_t i) {
                const auto rep = induce_mod(lambdas[i], n, m);
                std::vector<Partition> labels;
                std::string f;
                for (const auto& fac : rep.factors) {
                    labels.push_back(fac.label);
                    const std::size_t h = hook_dimension(fac.label);
                    if (fac.rank != h) f += " rank" + fac.label.to_string();
                    if (fac.invariants != AbelianInvariants::power(m, h)) f += " invariants" + fac.label.to_string();
                }
                if (labels_string(labels) != labels_string(young_expected(lambdas[i], n))) f += " labels";
                std::sort(labels.begin(), labels.end());
                if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) f += " repeated";
                if (!f.empty()) failures[i] = lambdas[i].to_string() + f;
            });
            std::size_t good = 0;
            std::string witness;
            for (const auto& f : failures) {
                if (f.empty()) {
                    ++good;
                } else if (witness.empty()) {
                    witness = f;
                }
            }
            out.push_back(make_outcome("young", "interlacing-factors",
                                       "n=" + std::to_string(n) + " m=" + m.to_string(),
                                       count_string(lambdas.size(), lambdas.size(), "partitions"),
                                       count_string(good, lambdas.size(), "partitions"), witness));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Randomized properties

std::vector<VerificationOutcome> verify_properties(std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    auto random_perm = [&](int n) { return permutation_unrank(n, static_cast<std::size_t>(uniform(0, static_cast<long long>(factorial(n)) - 1))); };
    const auto count = static_cast<std::size_t>(trials);
    const std::string claim = "properties";
    std::vector<VerificationOutcome> out;

    {
        std::size_t good = 0;
        std::string witness;
        for (std::size_t k = 0; k < 2 * count; ++k) {
            const int n = static_cast<int>(uniform(1, 5));
            MultilinearPoly f(n);
            const auto terms = uniform(1, 8);
            for (long long j = 0; j < terms; ++j) {
                long long c = uniform(-5, 4);
                if (c >= 0) ++c;
                f.add_term(random_perm(n), Integer(c));
            }
            const auto parts = decompose(f);
            bool ok = recompose(parts, n) == f;
            for (const auto& p : parts) {
                const int s = p.proper_part.degree();
                if (s == 1 || (s >= 2 && proper_basis(s).coordinates(p.proper_part.to_vector()) != p.coords)) ok = false;
            }
            if (ok) {
                ++good;
            } else if (witness.empty()) {
                witness = f.to_string();
            }
        }
        out.push_back(make_outcome(claim, "decompose-round-trip", "n<=5", count_string(2 * count, 2 * count, "polynomials"),
                                   count_string(good, 2 * count, "polynomials"), witness));
    }

    {
        std::vector<std::size_t> derangements{1, 0};
        for (int n = 2; n <= 5; ++n) {
            derangements.push_back(static_cast<std::size_t>(n - 1) *
                                   (derangements[static_cast<std::size_t>(n) - 1] + derangements[static_cast<std::size_t>(n) - 2]));
        }
        std::string expected;
        std::string computed;
        for (int n = 1; n <= 5; ++n) {
            if (n > 1) {
                expected += ",";
                computed += ",";
            }
            const auto& b = proper_basis(n);
            expected += std::to_string(derangements[static_cast<std::size_t>(n)]);
            computed += std::to_string(b.size() == b.lattice().rank() ? b.size() : 0);
        }
        out.push_back(make_outcome(claim, "proper-ranks", "n=1..5", expected, computed));
    }

    {
        std::vector<PartitionPair> pairs;
        for (int n = 2; n <= 6; ++n) {
            for (auto& p : valid_pairs(n)) {
                if (p.mu().length() >= 2) pairs.push_back(std::move(p));
            }
        }
        std::size_t good = 0;
        std::string witness;
        for (std::size_t k = 0; k < count; ++k) {
            const auto& pair = pairs[static_cast<std::size_t>(uniform(0, static_cast<long long>(pairs.size()) - 1))];
            const GenPartition& mu = pair.mu();
            const int n = mu.size();
            const int i = static_cast<int>(uniform(1, mu.length() - 1));
            const int v = static_cast<int>(uniform(0, mu.part(i + 1)));
            const auto src = TabloidModule::get(mu);
            const auto dst = TabloidModule::get(psi_target(mu, i, v));
            TabloidVector x{mu, IntVector(src->size())};
            for (int j = 0; j < 4; ++j) {
                x.coeffs[static_cast<std::size_t>(uniform(0, static_cast<long long>(src->size()) - 1))] += Integer(uniform(-3, 3));
            }
            const Permutation sigma = random_perm(n);
            const TabloidVector moved{mu, src->act(sigma, x.coeffs)};
            if (psi(i, v, moved).coeffs == dst->act(sigma, psi(i, v, x).coeffs)) {
                ++good;
            } else if (witness.empty()) {
                witness = pair.to_string() + " i=" + std::to_string(i) + " v=" + std::to_string(v) + " sigma=" + sigma.to_string();
            }
        }
        out.push_back(make_outcome(claim, "psi-equivariance", "n<=6", count_string(count, count, "cases"),
                                   count_string(good, count, "cases"), witness));
    }

    {
        std::size_t good = 0;
        std::string witness;
        for (std::size_t k = 0; k < count; ++k) {
            const int n = static_cast<int>(uniform(2, 5));
            const auto& b = proper_basis(n);
            IntVector coords(b.size());
            for (auto& c : coords) c = Integer(uniform(-3, 3));
            const IntVector v = std::span<const Integer>(coords) * b.expansions();
            const Permutation sigma = random_perm(n);
            if (b.coordinates(act_vector(sigma, v))) {
                ++good;
            } else if (witness.empty()) {
                witness = "n=" + std::to_string(n) + " sigma=" + sigma.to_string();
            }
        }
        out.push_back(make_outcome(claim, "proper-equivariance", "n<=5", count_string(count, count, "cases"),
                                   count_string(good, count, "cases"), witness));
    }

    {
        std::size_t good = 0;
        std::string witness;
        for (std::size_t k = 0; k < count; ++k) {
            const auto rows = static_cast<std::size_t>(uniform(1, 6));
            const auto cols = static_cast<std::size_t>(uniform(1, 6));
            IntMatrix m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i) {
                const bool sparse = uniform(0, 3) == 0;
                for (std::size_t j = 0; j < cols; ++j) m(i, j) = Integer(sparse && uniform(0, 1) ? 0 : uniform(-9, 9));
            }
            std::string f;
            const IntMatrix h = hnf(m);
            try {
                const SubmoduleLattice l = SubmoduleLattice::from_hnf(h);
                for (std::size_t i = 0; i < rows; ++i) {
                    if (!l.contains(m.row(i))) f += " membership";
                }
            } catch (const std::invalid_argument&) {
                f += " canonical";
            }
            if (hnf(h) != h) f += " idempotent";
            const SmithForm s = snf(m);
            if (s.invariants != snf(h).invariants) f += " invariants";
            for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
                if (!divides(s.diagonal[i], s.diagonal[i + 1])) f += " chain";
            }
            std::size_t nonzero = 0;
            for (const auto& d : s.diagonal) nonzero += d.is_zero() ? 0 : 1;
            if (nonzero != h.rows() || field_rank(m, Integer(0)) != h.rows()) f += " rank";
            for (long long p : {2, 3, 5}) {
                std::size_t units = 0;
                for (const auto& d : s.diagonal) units += !d.is_zero() && !divides(Integer(p), d) ? 1 : 0;
                if (field_rank(m, Integer(p)) != units) f += " rank-mod-" + std::to_string(p);
            }
            if (h.rows() == cols) {
                Integer pivots(1);
                for (std::size_t i = 0; i < cols; ++i) pivots *= h(i, i);
                if (pivots != s.invariants.torsion_order()) f += " determinant";
            }
            const SmithTransform st = snf_with_transforms(m);
            const IntMatrix d = st.u * m * st.v;
            for (std::size_t i = 0; i < d.rows(); ++i) {
                for (std::size_t j = 0; j < d.cols(); ++j) {
                    const Integer want = i == j && i < st.diagonal.size() ? st.diagonal[i] : Integer(0);
                    if (d(i, j) != want) f += " transform";
                }
            }
            if (st.v * st.v_inv != IntMatrix::identity(cols)) f += " inverse";
            if (f.empty()) {
                ++good;
            } else if (witness.empty()) {
                witness = to_string(m) + ":" + f;
            }
        }
        out.push_back(make_outcome(claim, "hnf-snf", "random matrices", count_string(count, count, "matrices"),
                                   count_string(good, count, "matrices"), witness));
    }
    return out;
}

}  // namespace pil

#include "pil/codim.hpp"

#include <chrono>
#include <functional>
#include <unordered_set>

#include "pil/multilinear.hpp"
#include "pil/parallel.hpp"
#include "pil/permutation.hpp"

namespace pil {

namespace {

constexpr std::size_t kBatch = 4096;

using RowSink = std::function<bool(const IntVector& row, const Integer& modulus)>;

Integer reduce_entry(const Integer& v, const Integer& m) { return m.is_zero() ? v : floor_mod(v, m); }

// v and -v span the same lattice; keep the lexicographically smaller one.
void normalize_sign(IntVector& v, const Integer& m) {
    IntVector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = reduce_entry(-v[i], m);
    if (std::lexicographical_compare(neg.begin(), neg.end(), v.begin(), v.end())) v = std::move(neg);
}

struct BaseRows {
    // coordinate k -> values indexed by lexicographic rank of the monomial
    std::vector<std::pair<std::uint32_t, IntVector>> rows;
};

// Products a_{m[s(1)]} ... a_{m[s(n)]} for every s, by depth-first search over
// prefixes with zero pruning.
BaseRows base_rows(const RingModel& r, const std::vector<SparseVector>& gens, const std::vector<std::size_t>& multiset,
                   const std::vector<std::size_t>& fact) {
    const int n = static_cast<int>(multiset.size());
    const std::size_t order = fact[static_cast<std::size_t>(n)];
    std::vector<SparseVector> prefix(static_cast<std::size_t>(n) + 1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::map<std::uint32_t, IntVector> by_coord;

    std::function<void(int, std::size_t)> dfs = [&](int depth, std::size_t rank) {
        if (depth == n) {
            for (const auto& [k, c] : prefix[static_cast<std::size_t>(n)]) {
                auto it = by_coord.find(k);
                if (it == by_coord.end()) it = by_coord.emplace(k, IntVector(order)).first;
                it->second[rank] = c;
            }
            return;
        }
        int smaller = 0;
        for (int p = 0; p < n; ++p) {
            if (used[static_cast<std::size_t>(p)]) continue;
            const auto& g = gens[multiset[static_cast<std::size_t>(p)]];
            SparseVector next = depth == 0 ? g : r.multiply_sparse(prefix[static_cast<std::size_t>(depth)], g);
            if (!next.empty()) {
                prefix[static_cast<std::size_t>(depth) + 1] = std::move(next);
                used[static_cast<std::size_t>(p)] = 1;
                dfs(depth + 1, rank + static_cast<std::size_t>(smaller) * fact[static_cast<std::size_t>(n - depth - 1)]);
                used[static_cast<std::size_t>(p)] = 0;
            }
            ++smaller;
        }
    };
    dfs(0, 0);
    BaseRows out;
    for (auto& [k, v] : by_coord) out.rows.emplace_back(k, std::move(v));
    return out;
}

// Streams every distinct (normalized) evaluation row to sink. The sink may
// return false to stop early. Returns the number of nonzero multisets.
std::size_t stream_rows(const RingModel& r, int n, std::size_t budget, const RowSink& sink, std::size_t& row_count) {
    if (n < 0 || n > kMaxCodimDegree) throw std::invalid_argument("degree out of range (0..6)");
    row_count = 0;
    const auto& moduli = r.moduli();
    std::map<Integer, std::unordered_set<IntVector, IntVectorHash>> seen;
    bool stop = false;
    auto emit = [&](IntVector row, const Integer& m) {
        if (m.is_one() || stop) return;
        for (auto& x : row) x = reduce_entry(x, m);
        if (is_zero(row)) return;
        normalize_sign(row, m);
        auto& set = seen[m];
        if (set.contains(row)) return;
        if (row_count >= budget) {
            throw ResourceLimitExceeded("row budget of " + std::to_string(budget) + " exceeded for " + r.label() +
                                        " at n = " + std::to_string(n));
        }
        ++row_count;
        if (!sink(row, m)) stop = true;
        set.insert(std::move(row));
    };

    if (n == 0) {
        if (!r.unit()) throw std::invalid_argument("degree 0 needs a unital model");
        for (std::size_t k = 0; k < r.rank(); ++k) emit(IntVector{(*r.unit())[k]}, moduli[k]);
        return 1;
    }

    std::vector<SparseVector> gens;
    for (const auto& g : r.generators()) {
        if (!is_zero(g)) gens.push_back(to_sparse(g));
    }
    std::vector<std::size_t> fact(static_cast<std::size_t>(n) + 1, 1);
    for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * i;
    const std::size_t order = fact[static_cast<std::size_t>(n)];
    const auto& table = SymmetricGroupTable::get(n);
    if (gens.empty()) return 0;

    std::size_t nonzero = 0;
    std::vector<std::size_t> ms(static_cast<std::size_t>(n), 0);
    bool more = true;
    auto advance = [&] {
        int i = n - 1;
        while (i >= 0 && ms[static_cast<std::size_t>(i)] == gens.size() - 1) --i;
        if (i < 0) return false;
        const std::size_t v = ms[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < n; ++j) ms[static_cast<std::size_t>(j)] = v;
        return true;
    };
    while (more && !stop) {
        std::vector<std::vector<std::size_t>> batch;
        while (more && batch.size() < kBatch) {
            batch.push_back(ms);
            more = advance();
        }
        std::vector<BaseRows> results(batch.size());
        parallel_for(batch.size(), [&](std::size_t i) { results[i] = base_rows(r, gens, batch[i], fact); });
        for (auto& res : results) {
            if (res.rows.empty()) continue;
            ++nonzero;
            for (const auto& [k, base] : res.rows) {
                for (std::size_t p = 0; p < order && !stop; ++p) {
                    IntVector row(order);
                    for (std::size_t i = 0; i < order; ++i) row[i] = base[table.product(p, i)];
                    emit(std::move(row), moduli[k]);
                }
            }
            if (stop) break;
        }
    }
    return nonzero;
}

// Column j of the proper basis expansions as (basis index, coefficient) pairs.
std::vector<SparseVector> proper_columns(int n) {
    const auto& b = proper_basis(n).expansions();
    std::vector<SparseVector> cols(b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (!b(i, j).is_zero()) cols[j].emplace_back(static_cast<std::uint32_t>(i), b(i, j));
        }
    }
    return cols;
}

}  // namespace

EvaluationSystem evaluation_system(const RingModel& r, int n, const EvaluationOptions& options) {
    EvaluationSystem sys;
    sys.degree = n;
    if (n < 0 || n > kMaxCodimDegree) throw std::invalid_argument("degree out of range (0..6)");
    const std::size_t order = factorial(n);
    sys.ordinary = ImageAccumulator(order);
    const std::size_t dp = options.proper ? proper_basis(n).size() : 0;
    sys.proper = ImageAccumulator(dp);
    std::vector<SparseVector> cols;
    if (options.proper) cols = proper_columns(n);
    std::unordered_set<IntVector, IntVectorHash> seen_proper;
    sys.multisets = stream_rows(
        r, n, options.row_budget,
        [&](const IntVector& row, const Integer& m) {
            sys.ordinary.add(row, m);
            if (!options.proper || dp == 0) return true;
            IntVector pr(dp);
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j].is_zero()) continue;
                for (const auto& [i, c] : cols[j]) pr[i].addmul(row[j], c);
            }
            for (auto& x : pr) x = reduce_entry(x, m);
            if (is_zero(pr)) return true;
            normalize_sign(pr, m);
            pr.push_back(m);
            if (seen_proper.insert(pr).second) {
                pr.pop_back();
                sys.proper.add(pr, m);
            }
            return true;
        },
        sys.rows);
    return sys;
}

CodimReport ordinary_codim(const RingModel& r, int n, const EvaluationOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const EvaluationSystem sys = evaluation_system(r, n, options);
    CodimReport rep;
    rep.ring = r.label();
    rep.n = n;
    rep.ordinary = sys.ordinary.invariants();
    rep.ordinary_per_q = codim_table(rep.ordinary);
    if (options.proper) {
        rep.proper = sys.proper.invariants();
        rep.proper_per_q = codim_table(rep.proper);
    }
    rep.rows = sys.rows;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

AbelianInvariants proper_codim(const RingModel& r, int n, const EvaluationOptions& options) {
    EvaluationOptions o = options;
    o.proper = true;
    return evaluation_system(r, n, o).proper.invariants();
}

SubmoduleLattice identity_lattice(const RingModel& r, int n, const EvaluationOptions& options) {
    EvaluationOptions o = options;
    o.proper = false;
    return evaluation_system(r, n, o).ordinary.kernel();
}

SubmoduleLattice proper_identity_lattice(const RingModel& r, int n, const EvaluationOptions& options) {
    EvaluationOptions o = options;
    o.proper = true;
    return evaluation_system(r, n, o).proper.kernel();
}

EvaluationMatrix evaluation_matrix(const RingModel& r, int n, const EvaluationOptions& options) {
    EvaluationMatrix out;
    out.matrix = IntMatrix(0, factorial(n));
    std::size_t rows = 0;
    stream_rows(
        r, n, options.row_budget,
        [&](const IntVector& row, const Integer& m) {
            out.matrix.append_row(row);
            out.moduli.push_back(m);
            return true;
        },
        rows);
    return out;
}

bool vanishes_on_generators(const RingModel& r, const MultilinearPoly& f) {
    const IntVector coeffs = f.to_vector();
    bool ok = true;
    std::size_t rows = 0;
    stream_rows(
        r, f.degree(), kDefaultRowBudget,
        [&](const IntVector& row, const Integer& m) {
            Integer acc(0);
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (!row[i].is_zero() && !coeffs[i].is_zero()) acc.addmul(row[i], coeffs[i]);
            }
            if (!divides(m, acc)) ok = false;
            return ok;
        },
        rows);
    return ok;
}

}  // namespace pil

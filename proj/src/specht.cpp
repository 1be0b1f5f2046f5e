#include "pil/specht.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace pil {

namespace {

std::vector<int> parse_parts(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == ' ' || ch == '(' || ch == ')'; }), s.end());
    std::vector<int> parts;
    if (s.empty()) return parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty part in '" + std::string(text) + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse part '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("cannot parse part '" + item + "'");
        parts.push_back(v);
    }
    return parts;
}

std::string parts_to_string(const std::vector<int>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
    return out + ")";
}

void trim(std::vector<int>& parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

std::uint64_t encode(const std::vector<std::uint8_t>& word) {
    std::uint64_t code = 0;
    for (auto r : word) code = (code << 4) | r;
    return code;
}

}  // namespace

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    trim(parts_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(c));
}

std::string Partition::to_string() const { return parts_to_string(parts_); }

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative number");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Permutation> class_representatives(int n) {
    std::vector<Permutation> out;
    for (const auto& p : partitions(n)) {
        if (n == 0) {
            out.push_back(Permutation::identity(0));
            continue;
        }
        out.push_back(class_representative(p.parts()));
    }
    return out;
}

Integer character_value(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size()) throw std::invalid_argument("character arguments have different sizes");
    // beta numbers: removing an r-rim hook replaces b by b - r
    const int len = lambda.length();
    std::vector<int> beta;
    for (int i = 1; i <= len; ++i) beta.push_back(lambda.part(i) + len - i);
    std::function<long long(std::vector<int>&, std::size_t)> rec = [&](std::vector<int>& b, std::size_t k) -> long long {
        if (k == cycle_type.parts().size()) return 1;
        const int r = cycle_type.parts()[k];
        long long total = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const int target = b[i] - r;
            if (target < 0 || std::find(b.begin(), b.end(), target) != b.end()) continue;
            int between = 0;
            for (int x : b) {
                if (x > target && x < b[i]) ++between;
            }
            const int saved = b[i];
            b[i] = target;
            const long long sub = rec(b, k + 1);
            b[i] = saved;
            total += (between % 2 ? -sub : sub);
        }
        return total;
    };
    return Integer(rec(beta, 0));
}

GenPartition::GenPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    trim(parts_);
    for (int p : parts_) {
        if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
        size_ += p;
    }
}

GenPartition GenPartition::parse(std::string_view text) { return GenPartition(parse_parts(text)); }

std::string GenPartition::to_string() const { return parts_to_string(parts_); }

std::vector<GenPartition> compositions(int n) {
    std::vector<GenPartition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    if (n > 0) rec(n);
    return out;
}

// ---------------------------------------------------------------------------
// Tabloids

TabloidModule::TabloidModule(GenPartition mu) : shape_(std::move(mu)) {
    const int n = shape_.size();
    if (n > kMaxSpechtDegree) throw std::invalid_argument("degree exceeds the tabloid bound");
    if (shape_.length() > 15) throw std::invalid_argument("too many rows");
    std::vector<std::uint8_t> word(static_cast<std::size_t>(n), 0);
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    std::function<void(int)> row_rec;
    std::function<void(int, int, int)> choose = [&](int row, int start, int left) {
        if (left == 0) {
            row_rec(row + 1);
            return;
        }
        for (int e = start; e < n; ++e) {
            if (taken[static_cast<std::size_t>(e)]) continue;
            taken[static_cast<std::size_t>(e)] = 1;
            word[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(row);
            choose(row, e + 1, left - 1);
            taken[static_cast<std::size_t>(e)] = 0;
        }
    };
    row_rec = [&](int row) {
        if (row == shape_.length()) {
            index_.emplace(encode(word), static_cast<std::uint32_t>(words_.size()));
            words_.push_back(word);
            return;
        }
        choose(row, 0, shape_.parts()[static_cast<std::size_t>(row)]);
    };
    row_rec(0);
}

std::shared_ptr<const TabloidModule> TabloidModule::get(const GenPartition& mu) {
    static std::mutex mutex;
    static std::map<GenPartition, std::shared_ptr<const TabloidModule>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    auto m = std::shared_ptr<const TabloidModule>(new TabloidModule(mu));
    cache.emplace(mu, m);
    return m;
}

Tabloid TabloidModule::tabloid(std::size_t index) const {
    Tabloid t{shape_, std::vector<std::vector<int>>(static_cast<std::size_t>(shape_.length()))};
    const auto& w = words_.at(index);
    for (std::size_t e = 0; e < w.size(); ++e) t.rows[w[e]].push_back(static_cast<int>(e) + 1);
    return t;
}

std::size_t TabloidModule::index_of(const std::vector<std::uint8_t>& word) const {
    auto it = index_.find(encode(word));
    if (it == index_.end() || word.size() != static_cast<std::size_t>(shape_.size())) {
        throw std::invalid_argument("word is not a tabloid of this shape");
    }
    return it->second;
}

std::size_t TabloidModule::index_of(const Tabloid& t) const {
    if (t.shape != shape_ || t.rows.size() != static_cast<std::size_t>(shape_.length())) {
        throw std::invalid_argument("tabloid has the wrong shape");
    }
    std::vector<std::uint8_t> word(static_cast<std::size_t>(shape_.size()), 0xff);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (t.rows[r].size() != static_cast<std::size_t>(shape_.parts()[r])) throw std::invalid_argument("tabloid row has the wrong size");
        for (int e : t.rows[r]) {
            if (e < 1 || e > shape_.size() || word[static_cast<std::size_t>(e - 1)] != 0xff) {
                throw std::invalid_argument("tabloid entries must be a bijection with 1..n");
            }
            word[static_cast<std::size_t>(e - 1)] = static_cast<std::uint8_t>(r);
        }
    }
    return index_of(word);
}

std::size_t TabloidModule::act(const Permutation& sigma, std::size_t index) const {
    const auto& w = words_.at(index);
    std::vector<std::uint8_t> out(w.size());
    for (std::size_t e = 0; e < w.size(); ++e) out[static_cast<std::size_t>(sigma(static_cast<int>(e) + 1) - 1)] = w[e];
    return index_of(out);
}

IntVector TabloidModule::act(const Permutation& sigma, std::span<const Integer> v) const {
    if (v.size() != size()) throw std::invalid_argument("vector does not live in this tabloid module");
    if (sigma.size() != shape_.size()) throw std::invalid_argument("permutation has the wrong degree");
    IntVector out(size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) out[act(sigma, i)] = v[i];
    }
    return out;
}

std::vector<Tabloid> tabloid_module_basis(const GenPartition& mu) {
    const auto m = TabloidModule::get(mu);
    std::vector<Tabloid> out;
    for (std::size_t i = 0; i < m->size(); ++i) out.push_back(m->tabloid(i));
    return out;
}

// ---------------------------------------------------------------------------
// Pairs

PartitionPair::PartitionPair(Partition lambda, GenPartition mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), zero_(false) {
    if (mu_.length() == 0) throw std::invalid_argument("pair needs a nonzero mu (use the zero pair)");
    if (lambda_.length() > mu_.length()) throw std::invalid_argument("lambda is longer than mu");
    for (int i = 1; i <= mu_.length(); ++i) {
        if (lambda_.part(i) > mu_.part(i)) throw std::invalid_argument("pair needs lambda_i <= mu_i");
    }
    if (lambda_.part(1) != mu_.part(1)) throw std::invalid_argument("pair needs lambda_1 = mu_1");
}

PartitionPair PartitionPair::zero() { return PartitionPair(); }

bool PartitionPair::is_specht() const { return !zero_ && lambda_.parts() == mu_.parts(); }

std::string PartitionPair::to_string() const {
    if (zero_) return "(0;0)";
    return "(" + lambda_.to_string() + ";" + mu_.to_string() + ")";
}

std::vector<PartitionPair> valid_pairs(int n) {
    std::vector<PartitionPair> out;
    for (const auto& mu : compositions(n)) {
        std::vector<int> lam(static_cast<std::size_t>(mu.length()), 0);
        lam[0] = mu.part(1);
        std::function<void(int)> rec = [&](int i) {
            if (i > mu.length()) {
                out.emplace_back(Partition(lam), mu);
                return;
            }
            const int hi = std::min(mu.part(i), lam[static_cast<std::size_t>(i - 2)]);
            for (int v = hi; v >= 0; --v) {
                lam[static_cast<std::size_t>(i - 1)] = v;
                rec(i + 1);
            }
            lam[static_cast<std::size_t>(i - 1)] = 0;
        };
        rec(2);
    }
    return out;
}

Tableau standard_filling(const GenPartition& mu) {
    Tableau t;
    int next = 1;
    for (int p : mu.parts()) {
        std::vector<int> row;
        for (int j = 0; j < p; ++j) row.push_back(next++);
        t.push_back(std::move(row));
    }
    return t;
}

TabloidVector polytabloid(const PartitionPair& pair, const Tableau& t) {
    if (pair.is_zero()) throw std::invalid_argument("the zero pair has no polytabloids");
    const GenPartition& mu = pair.mu();
    const auto module = TabloidModule::get(mu);
    const int n = mu.size();
    if (t.size() != static_cast<std::size_t>(mu.length())) throw std::invalid_argument("tableau has the wrong number of rows");
    std::vector<std::uint8_t> word(static_cast<std::size_t>(n), 0xff);
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (t[r].size() != static_cast<std::size_t>(mu.parts()[r])) throw std::invalid_argument("tableau row has the wrong length");
        for (int e : t[r]) {
            if (e < 1 || e > n || word[static_cast<std::size_t>(e - 1)] != 0xff) {
                throw std::invalid_argument("tableau entries must be a bijection with 1..n");
            }
            word[static_cast<std::size_t>(e - 1)] = static_cast<std::uint8_t>(r);
        }
    }

    std::vector<std::pair<std::vector<std::uint8_t>, int>> terms{{word, 1}};
    const Partition conj = pair.lambda().conjugate();
    for (int j = 0; j < pair.lambda().part(1); ++j) {
        const int h = conj.part(j + 1);
        if (h < 2) continue;
        std::vector<int> column;
        for (int r = 0; r < h; ++r) column.push_back(t[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
        const auto perms = all_permutations(h);
        std::vector<std::pair<std::vector<std::uint8_t>, int>> next;
        next.reserve(terms.size() * perms.size());
        for (const auto& [w, s] : terms) {
            for (const auto& p : perms) {
                auto nw = w;
                for (int a = 0; a < h; ++a) nw[static_cast<std::size_t>(column[static_cast<std::size_t>(a)] - 1)] = static_cast<std::uint8_t>(p(a + 1) - 1);
                next.emplace_back(std::move(nw), s * p.sign());
            }
        }
        terms = std::move(next);
    }
    TabloidVector out{mu, IntVector(module->size())};
    for (const auto& [w, s] : terms) out.coeffs[module->index_of(w)] += Integer(s);
    return out;
}

SubmoduleLattice specht_lattice(const PartitionPair& pair, SpechtGeneration mode) {
    if (pair.is_zero()) throw std::invalid_argument("the zero pair has no ambient module");
    const auto module = TabloidModule::get(pair.mu());
    const int n = pair.mu().size();
    HnfAccumulator acc(module->size());
    if (mode == SpechtGeneration::all_tableaux) {
        for (const auto& p : all_permutations(n)) {
            Tableau t;
            int pos = 0;
            for (int len : pair.mu().parts()) {
                std::vector<int> row;
                for (int j = 0; j < len; ++j) row.push_back(p(++pos));
                t.push_back(std::move(row));
            }
            acc.add(polytabloid(pair, t).coeffs);
        }
        return acc.lattice();
    }
    std::vector<Permutation> gens;
    if (n >= 2) {
        gens.push_back(Permutation::transposition(n, 1, 2));
        gens.push_back(Permutation::long_cycle(n));
    }
    std::deque<IntVector> queue;
    IntVector start = polytabloid(pair, standard_filling(pair.mu())).coeffs;
    if (acc.add(start)) queue.push_back(std::move(start));
    while (!queue.empty()) {
        const IntVector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            IntVector w = module->act(g, v);
            if (acc.add(w)) queue.push_back(std::move(w));
        }
    }
    return acc.lattice();
}

GenPartition psi_target(const GenPartition& mu, int i, int v) {
    if (i < 1) throw std::invalid_argument("psi row index must be >= 1");
    if (v < 0 || v > mu.part(i + 1)) throw std::invalid_argument("psi size v out of range");
    std::vector<int> parts = mu.parts();
    parts.resize(std::max<std::size_t>(parts.size(), static_cast<std::size_t>(i) + 1), 0);
    parts[static_cast<std::size_t>(i - 1)] = mu.part(i) + mu.part(i + 1) - v;
    parts[static_cast<std::size_t>(i)] = v;
    return GenPartition(std::move(parts));
}

TabloidVector psi(int i, int v, const TabloidVector& x) {
    const GenPartition nu = psi_target(x.shape, i, v);
    const auto src = TabloidModule::get(x.shape);
    const auto dst = TabloidModule::get(nu);
    if (x.coeffs.size() != src->size()) throw std::invalid_argument("vector does not live in M(mu)");
    TabloidVector out{nu, IntVector(dst->size())};
    const auto upper = static_cast<std::uint8_t>(i - 1);
    const auto lower = static_cast<std::uint8_t>(i);
    for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
        if (x.coeffs[k].is_zero()) continue;
        const auto& w = src->word(k);
        std::vector<std::size_t> row;
        for (std::size_t e = 0; e < w.size(); ++e) {
            if (w[e] == lower) row.push_back(e);
        }
        // every subset of the lower row of size v stays; the rest moves up
        std::vector<char> keep(row.size(), 0);
        std::fill(keep.end() - v, keep.end(), 1);
        do {
            auto nw = w;
            for (std::size_t a = 0; a < row.size(); ++a) nw[row[a]] = keep[a] ? lower : upper;
            out.coeffs[dst->index_of(nw)] += x.coeffs[k];
        } while (std::next_permutation(keep.begin(), keep.end()));
    }
    return out;
}

std::vector<int> applicable_columns(const PartitionPair& pair) {
    std::vector<int> out;
    if (pair.is_zero()) return out;
    for (int c = 2; c <= pair.mu().length(); ++c) {
        if (pair.lambda().part(c - 1) == pair.mu().part(c - 1) && pair.mu().part(c) > pair.lambda().part(c)) {
            out.push_back(c);
        }
    }
    return out;
}

int series_column(const PartitionPair& pair) {
    if (pair.is_zero()) return 0;
    for (int c = 1; c <= pair.mu().length(); ++c) {
        if (pair.lambda().part(c) != pair.mu().part(c)) return c;
    }
    return 0;
}

namespace {

void require_applicable(int c, const PartitionPair& pair) {
    const auto cols = applicable_columns(pair);
    if (std::find(cols.begin(), cols.end(), c) == cols.end()) {
        throw std::invalid_argument("operator needs c >= 2 with lambda_{c-1} = mu_{c-1} and mu_c > lambda_c");
    }
}

}  // namespace

PartitionPair op_A(int c, const PartitionPair& pair) {
    require_applicable(c, pair);
    if (pair.lambda().part(c) == pair.lambda().part(c - 1)) return PartitionPair::zero();
    std::vector<int> lam = pair.lambda().parts();
    lam.resize(std::max<std::size_t>(lam.size(), static_cast<std::size_t>(c)), 0);
    ++lam[static_cast<std::size_t>(c - 1)];
    return PartitionPair(Partition(std::move(lam)), pair.mu());
}

PartitionPair op_R(int c, const PartitionPair& pair) {
    require_applicable(c, pair);
    std::vector<int> mu = pair.mu().parts();
    mu[static_cast<std::size_t>(c - 2)] += pair.mu().part(c) - pair.lambda().part(c);
    mu[static_cast<std::size_t>(c - 1)] = pair.lambda().part(c);
    std::vector<int> lam = pair.lambda().parts();
    lam[0] = mu[0];
    return PartitionPair(Partition(std::move(lam)), GenPartition(std::move(mu)));
}

// ---------------------------------------------------------------------------
// Series

namespace {

struct Chain {
    std::vector<SubmoduleLattice> terms;   // strictly decreasing, zero lattice not included
    std::vector<Partition> labels;
};

SubmoduleLattice combine_rows(const std::vector<IntVector>& coords, const IntMatrix& basis) {
    std::vector<IntVector> rows;
    for (const auto& x : coords) rows.push_back(std::span<const Integer>(x) * basis);
    return SubmoduleLattice::span(rows, basis.cols());
}

Chain series_chain(const PartitionPair& pair) {
    const SubmoduleLattice s = specht_lattice(pair);
    if (pair.is_specht()) return {{s}, {pair.lambda()}};
    const int c = series_column(pair);
    const int v = pair.lambda().part(c);
    const Chain image = series_chain(op_R(c, pair));
    const GenPartition nu = psi_target(pair.mu(), c - 1, v);
    const std::size_t nu_dim = TabloidModule::get(nu)->size();

    HnfAccumulator acc(nu_dim, Integer(0), true);
    for (std::size_t i = 0; i < s.rank(); ++i) {
        const auto row = s.basis().row(i);
        acc.add(psi(c - 1, v, TabloidVector{pair.mu(), IntVector(row.begin(), row.end())}).coeffs);
    }
    std::vector<IntVector> kernel_coords;
    for (const auto& k : acc.kernel()) kernel_coords.push_back(to_dense(k, s.rank()));
    const SubmoduleLattice kernel = combine_rows(kernel_coords, s.basis());

    Chain out;
    for (std::size_t t = 0; t < image.terms.size(); ++t) {
        std::vector<IntVector> lifts;
        const auto& term = image.terms[t];
        for (std::size_t i = 0; i < term.rank(); ++i) {
            auto x = acc.solve(term.basis().row(i));
            if (!x) throw std::logic_error("psi image does not contain the raised Specht lattice");
            lifts.push_back(std::move(*x));
        }
        out.terms.push_back(combine_rows(lifts, s.basis()) + kernel);
        out.labels.push_back(image.labels[t]);
    }
    const PartitionPair a = op_A(c, pair);
    if (!a.is_zero()) {
        Chain k = series_chain(a);
        for (std::size_t t = 0; t < k.terms.size(); ++t) {
            out.terms.push_back(std::move(k.terms[t]));
            out.labels.push_back(std::move(k.labels[t]));
        }
    }
    return out;
}

FiltrationReport build_report(const PartitionPair& pair, const Integer& m, bool characters) {
    if (m.sign() < 0) throw std::invalid_argument("modulus must be non-negative");
    Chain ch = series_chain(pair);
    const std::size_t dim = TabloidModule::get(pair.mu())->size();
    FiltrationReport rep;
    rep.pair = pair;
    rep.modulus = m;
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < ch.terms.size(); ++i) {
        ranks.push_back(ch.terms[i].rank() - (i + 1 < ch.terms.size() ? ch.terms[i + 1].rank() : 0));
    }
    const SubmoduleLattice bottom = m.is_zero() ? SubmoduleLattice(dim) : ch.terms.front().scaled(m);
    for (auto& t : ch.terms) rep.chain.push_back(m.is_zero() ? std::move(t) : t + bottom);
    rep.chain.push_back(bottom);
    for (std::size_t i = 0; i < ch.labels.size(); ++i) {
        FiltrationFactor f;
        f.label = ch.labels[i];
        f.invariants = lattice_quotient_invariants(rep.chain[i], rep.chain[i + 1]);
        f.rank = ranks[i];
        rep.factors.push_back(std::move(f));
    }
    if (characters) {
        for (std::size_t i = 0; i < rep.factors.size(); ++i) rep.factors[i].character = factor_character(rep, i);
    }
    return rep;
}

}  // namespace

FiltrationReport specht_series(const PartitionPair& pair, bool characters) {
    return build_report(pair, Integer(0), characters);
}

FiltrationReport specht_series(const PartitionPair& pair, const Integer& m, bool characters) {
    return build_report(pair, m, characters);
}

FiltrationReport induce_mod(const Partition& lambda, int n, const Integer& m, bool characters) {
    const int t = lambda.size();
    if (t >= n) throw std::invalid_argument("induction needs |lambda| < n");
    if (t == 0) throw std::invalid_argument("induction needs a nonzero lambda");
    std::vector<int> mu = lambda.parts();
    mu.push_back(n - t);
    return build_report(PartitionPair(lambda, GenPartition(std::move(mu))), m, characters);
}

std::vector<Partition> young_expected(const Partition& lambda, int n) {
    const int t = lambda.size();
    if (t >= n) throw std::invalid_argument("young_expected needs |lambda| < n");
    std::vector<Partition> out;
    const int len = lambda.length();
    std::vector<int> nu(static_cast<std::size_t>(len) + 1, 0);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i > len + 1) {
            if (rest == 0) out.emplace_back(nu);
            return;
        }
        const int lo = lambda.part(i);
        const int hi = i == 1 ? lambda.part(1) + rest : std::min(lambda.part(i - 1), lo + rest);
        for (int v = hi; v >= lo; --v) {
            if (v - lo > rest) continue;
            nu[static_cast<std::size_t>(i - 1)] = v;
            rec(i + 1, rest - (v - lo));
        }
    };
    rec(1, n - t);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
    return out;
}

QuotientCharacter factor_character(const FiltrationReport& report, std::size_t i) {
    const auto module = TabloidModule::get(report.pair.mu());
    const auto reps = class_representatives(report.pair.mu().size());
    return quotient_character(report.chain.at(i), report.chain.at(i + 1), reps,
                              [&](const Permutation& g, std::span<const Integer> v) { return module->act(g, v); });
}

QuotientCharacter specht_character(const Partition& lambda, const Integer& m) {
    const PartitionPair pair(lambda, GenPartition(lambda.parts()));
    const auto module = TabloidModule::get(pair.mu());
    const SubmoduleLattice s = specht_lattice(pair);
    const SubmoduleLattice inner = m.is_zero() ? SubmoduleLattice(s.ambient_rank()) : s.scaled(m);
    return quotient_character(s, inner, class_representatives(lambda.size()),
                              [&](const Permutation& g, std::span<const Integer> v) { return module->act(g, v); });
}

}  // namespace pil

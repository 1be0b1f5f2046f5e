#include "pil/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace pil {

namespace {

SparseVector sparse_from(const IntVector& v, std::size_t start) {
    SparseVector out;
    for (std::size_t i = start; i < v.size(); ++i) {
        if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    }
    return out;
}

void negate_all(IntVector& v) {
    for (auto& x : v) x.negate();
}

// dst -= q * src over the support of src.
void submul_sparse(IntVector& dst, const Integer& q, const SparseVector& src) {
    for (const auto& [c, val] : src) dst[c].submul(q, val);
}

// (p, v) -> (s p + t v, a v - b p) over columns >= start.
void combine(IntVector& v, IntVector& pd, const Integer& s, const Integer& t, const Integer& a, const Integer& b,
             std::size_t start) {
    for (std::size_t k = start; k < v.size(); ++k) {
        if (pd[k].is_zero() && v[k].is_zero()) continue;
        Integer nk = s * pd[k];
        nk.addmul(t, v[k]);
        Integer wk = a * v[k];
        wk.submul(b, pd[k]);
        pd[k] = std::move(nk);
        v[k] = std::move(wk);
    }
}

void canonicalize(std::vector<IntVector>& rows, const std::vector<std::size_t>& piv) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t k = i + 1; k < rows.size(); ++k) {
            const std::size_t c = piv[k];
            if (rows[i][c].is_zero()) continue;
            const Integer q = floor_div(rows[i][c], rows[k][c]);
            if (q.is_zero()) continue;
            for (std::size_t j = c; j < rows[i].size(); ++j) {
                if (!rows[k][j].is_zero()) rows[i][j].submul(q, rows[k][j]);
            }
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// SubmoduleLattice

SubmoduleLattice SubmoduleLattice::from_hnf(IntMatrix hnf) {
    SubmoduleLattice l;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < hnf.rows(); ++i) {
        std::size_t j = 0;
        while (j < hnf.cols() && hnf(i, j).is_zero()) ++j;
        if (j == hnf.cols()) throw std::invalid_argument("HNF basis has a zero row");
        if (i > 0 && j <= prev) throw std::invalid_argument("HNF pivots must strictly increase");
        if (hnf(i, j).sign() <= 0) throw std::invalid_argument("HNF pivots must be positive");
        for (std::size_t k = 0; k < i; ++k) {
            if (hnf(k, j).sign() < 0 || hnf(k, j) >= hnf(i, j)) {
                throw std::invalid_argument("HNF entries above a pivot must be reduced");
            }
        }
        l.pivots_.push_back(j);
        prev = j;
    }
    l.basis_ = std::move(hnf);
    return l;
}

SubmoduleLattice SubmoduleLattice::span(const IntMatrix& generators) {
    HnfAccumulator acc(generators.cols());
    for (std::size_t i = 0; i < generators.rows(); ++i) acc.add(generators.row(i));
    return acc.lattice();
}

SubmoduleLattice SubmoduleLattice::span(const std::vector<IntVector>& generators, std::size_t ambient) {
    HnfAccumulator acc(ambient);
    for (const auto& g : generators) acc.add(g);
    return acc.lattice();
}

SubmoduleLattice SubmoduleLattice::full(std::size_t ambient) {
    return from_hnf(IntMatrix::identity(ambient));
}

IntVector SubmoduleLattice::reduce(std::span<const Integer> v) const {
    if (v.size() != ambient_rank()) throw std::invalid_argument("vector length does not match lattice ambient rank");
    IntVector w(v.begin(), v.end());
    for (std::size_t i = 0; i < rank(); ++i) {
        const std::size_t c = pivots_[i];
        if (w[c].is_zero()) continue;
        const Integer q = floor_div(w[c], basis_(i, c));
        if (q.is_zero()) continue;
        auto row = basis_.row(i);
        for (std::size_t j = c; j < w.size(); ++j) {
            if (!row[j].is_zero()) w[j].submul(q, row[j]);
        }
    }
    return w;
}

std::optional<IntVector> SubmoduleLattice::coordinates(std::span<const Integer> v) const {
    if (v.size() != ambient_rank()) throw std::invalid_argument("vector length does not match lattice ambient rank");
    IntVector w(v.begin(), v.end());
    IntVector coords(rank());
    std::size_t next = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (next < rank() && pivots_[next] == j) {
            if (!w[j].is_zero()) {
                if (!divides(basis_(next, j), w[j])) return std::nullopt;
                const Integer q = div_exact(w[j], basis_(next, j));
                auto row = basis_.row(next);
                for (std::size_t k = j; k < w.size(); ++k) {
                    if (!row[k].is_zero()) w[k].submul(q, row[k]);
                }
                coords[next] = q;
            }
            ++next;
        } else if (!w[j].is_zero()) {
            return std::nullopt;
        }
    }
    return coords;
}

bool SubmoduleLattice::contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }

bool SubmoduleLattice::contains(const SubmoduleLattice& other) const {
    if (other.ambient_rank() != ambient_rank()) throw std::invalid_argument("lattices live in different ambient spaces");
    if (other.rank() > rank()) return false;
    for (std::size_t i = 0; i < other.rank(); ++i) {
        if (!contains(other.basis().row(i))) return false;
    }
    return true;
}

SubmoduleLattice SubmoduleLattice::operator+(const SubmoduleLattice& other) const {
    if (other.ambient_rank() != ambient_rank()) throw std::invalid_argument("lattices live in different ambient spaces");
    HnfAccumulator acc(ambient_rank());
    for (std::size_t i = 0; i < rank(); ++i) acc.add(basis_.row(i));
    for (std::size_t i = 0; i < other.rank(); ++i) acc.add(other.basis().row(i));
    return acc.lattice();
}

SubmoduleLattice SubmoduleLattice::scaled(const Integer& m) const {
    if (m.is_zero()) return SubmoduleLattice(ambient_rank());
    const Integer f = abs(m);
    SubmoduleLattice out = *this;
    for (std::size_t i = 0; i < rank(); ++i) {
        for (auto& x : out.basis_.row(i)) x *= f;
    }
    return out;
}

// ---------------------------------------------------------------------------
// HnfAccumulator

HnfAccumulator::HnfAccumulator(std::size_t dim, Integer modulus, bool track)
    : dim_(dim), modulus_(std::move(modulus)), track_(track), pivots_(dim) {
    if (modulus_.sign() < 0) throw std::invalid_argument("modulus must be non-negative");
    if (track_ && !modulus_.is_zero()) throw std::invalid_argument("tracking is only supported without a modulus");
}

void HnfAccumulator::reduce_mod(IntVector& v) const {
    for (auto& x : v) {
        if (x.sign() < 0 || x >= modulus_) x = floor_mod(x, modulus_);
    }
}

bool HnfAccumulator::add(const SparseVector& row) {
    IntVector dense(dim_);
    for (const auto& [c, val] : row) dense.at(c) = val;
    return add(dense);
}

bool HnfAccumulator::add(std::span<const Integer> row) {
    if (row.size() != dim_) throw std::invalid_argument("row length does not match accumulator dimension");
    ++inputs_;
    bool grew = false;
    IntVector work(row.begin(), row.end());
    if (!modulus_.is_zero()) {
        reduce_mod(work);
        fold_modular(std::move(work), grew);
        return grew;
    }
    IntVector tag;
    if (track_) {
        tag.assign(inputs_, Integer(0));
        tag.back() = Integer(1);
    }
    fold(work, tag, grew);
    return grew;
}

void HnfAccumulator::fold(IntVector& work, IntVector& tag, bool& grew) {
    std::size_t j = 0;
    for (;;) {
        while (j < dim_ && work[j].is_zero()) ++j;
        if (j == dim_) {
            if (track_) kernel_.push_back(sparse_from(tag, 0));
            return;
        }
        auto& slot = pivots_[j];
        if (!slot) {
            if (work[j].sign() < 0) {
                negate_all(work);
                negate_all(tag);
            }
            slot = PivotRow{sparse_from(work, j), track_ ? sparse_from(tag, 0) : SparseVector{}};
            ++pivot_count_;
            grew = true;
            return;
        }
        PivotRow& p = *slot;
        const Integer pj = p.entries.front().second;
        if (divides(pj, work[j])) {
            const Integer q = div_exact(work[j], pj);
            submul_sparse(work, q, p.entries);
            if (track_) submul_sparse(tag, q, p.tag);
            continue;
        }
        const ExtendedGcd e = xgcd(pj, work[j]);
        const Integer a = div_exact(pj, e.g);
        const Integer b = div_exact(work[j], e.g);
        IntVector pd = to_dense(p.entries, dim_);
        combine(work, pd, e.s, e.t, a, b, j);
        p.entries = sparse_from(pd, j);
        if (track_) {
            IntVector td = to_dense(p.tag, tag.size());
            combine(tag, td, e.s, e.t, a, b, 0);
            p.tag = sparse_from(td, 0);
        }
        grew = true;
    }
}

void HnfAccumulator::fold_modular(IntVector first, bool& grew) {
    const Integer& n = modulus_;
    std::vector<IntVector> pending;
    pending.push_back(std::move(first));
    auto push_multiple = [&](const IntVector& v, const Integer& f) {
        IntVector w(v.size());
        bool nonzero = false;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            w[k] = floor_mod(v[k] * f, n);
            nonzero = nonzero || !w[k].is_zero();
        }
        if (nonzero) pending.push_back(std::move(w));
    };
    while (!pending.empty()) {
        IntVector v = std::move(pending.back());
        pending.pop_back();
        std::size_t j = 0;
        for (;;) {
            while (j < dim_ && v[j].is_zero()) ++j;
            if (j == dim_) break;
            auto& slot = pivots_[j];
            if (!slot) {
                const ExtendedGcd e = xgcd(v[j], n);
                IntVector nv(dim_);
                for (std::size_t k = j; k < dim_; ++k) {
                    if (!v[k].is_zero()) nv[k] = floor_mod(e.s * v[k], n);
                }
                push_multiple(v, div_exact(n, e.g));
                slot = PivotRow{sparse_from(nv, j), {}};
                ++pivot_count_;
                grew = true;
                break;
            }
            PivotRow& p = *slot;
            const Integer pj = p.entries.front().second;
            if (divides(pj, v[j])) {
                const Integer q = div_exact(v[j], pj);
                for (const auto& [c, val] : p.entries) {
                    v[c].submul(q, val);
                    v[c] = floor_mod(v[c], n);
                }
                continue;
            }
            const ExtendedGcd e = xgcd(pj, v[j]);
            const Integer a = div_exact(pj, e.g);
            const Integer b = div_exact(v[j], e.g);
            IntVector pd = to_dense(p.entries, dim_);
            combine(v, pd, e.s, e.t, a, b, j);
            reduce_mod(v);
            reduce_mod(pd);
            p.entries = sparse_from(pd, j);
            push_multiple(pd, div_exact(n, e.g));
            grew = true;
        }
    }
}

std::size_t HnfAccumulator::rank() const { return modulus_.is_zero() ? pivot_count_ : dim_; }

bool HnfAccumulator::full_unimodular() const {
    if (modulus_.is_one()) return true;
    if (pivot_count_ != dim_) return false;
    for (const auto& p : pivots_) {
        if (!p->entries.front().second.is_one()) return false;
    }
    return true;
}

bool HnfAccumulator::contains(std::span<const Integer> v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length does not match accumulator dimension");
    IntVector w(v.begin(), v.end());
    const bool modular = !modulus_.is_zero();
    if (modular) reduce_mod(w);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (w[j].is_zero()) continue;
        if (!pivots_[j]) return false;
        const auto& p = *pivots_[j];
        const Integer& pj = p.entries.front().second;
        if (!divides(pj, w[j])) return false;
        const Integer q = div_exact(w[j], pj);
        for (const auto& [c, val] : p.entries) {
            w[c].submul(q, val);
            if (modular) w[c] = floor_mod(w[c], modulus_);
        }
    }
    return true;
}

std::optional<IntVector> HnfAccumulator::solve(std::span<const Integer> v) const {
    if (!track_) throw std::logic_error("solve requires a tracking accumulator");
    if (v.size() != dim_) throw std::invalid_argument("vector length does not match accumulator dimension");
    IntVector w(v.begin(), v.end());
    IntVector coords(inputs_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (w[j].is_zero()) continue;
        if (!pivots_[j]) return std::nullopt;
        const auto& p = *pivots_[j];
        const Integer& pj = p.entries.front().second;
        if (!divides(pj, w[j])) return std::nullopt;
        const Integer q = div_exact(w[j], pj);
        submul_sparse(w, q, p.entries);
        for (const auto& [c, val] : p.tag) coords[c].addmul(q, val);
    }
    return coords;
}

SubmoduleLattice HnfAccumulator::lattice() const {
    std::vector<IntVector> rows;
    std::vector<std::size_t> piv;
    for (std::size_t j = 0; j < dim_; ++j) {
        if (pivots_[j]) {
            rows.push_back(to_dense(pivots_[j]->entries, dim_));
        } else if (!modulus_.is_zero()) {
            IntVector r(dim_);
            r[j] = modulus_;
            rows.push_back(std::move(r));
        } else {
            continue;
        }
        piv.push_back(j);
    }
    canonicalize(rows, piv);
    IntMatrix m(0, dim_);
    for (const auto& r : rows) m.append_row(r);
    return SubmoduleLattice::from_hnf(std::move(m));
}

// ---------------------------------------------------------------------------
// Batch routines

IntMatrix hnf(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(x, j), a(y, j));
    };
    auto row_submul = [&](std::size_t dst, const Integer& q, std::size_t src, std::size_t from) {
        for (std::size_t j = from; j < cols; ++j) {
            if (!a(src, j).is_zero()) a(dst, j).submul(q, a(src, j));
        }
    };
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        bool found = false;
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (a(i, j).is_zero()) continue;
                if (best == rows || abs(a(i, j)) < abs(a(best, j))) best = i;
            }
            if (best == rows) break;
            found = true;
            swap_rows(r, best);
            bool remainder = false;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, j).is_zero()) continue;
                row_submul(i, floor_div(a(i, j), a(r, j)), r, j);
                if (!a(i, j).is_zero()) remainder = true;
            }
            if (!remainder) break;
        }
        if (!found) continue;
        if (a(r, j).sign() < 0) {
            for (std::size_t k = j; k < cols; ++k) a(r, k).negate();
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Integer q = floor_div(a(i, j), a(r, j));
            if (!q.is_zero()) row_submul(i, q, r, j);
        }
        ++r;
    }
    IntMatrix out(0, cols);
    for (std::size_t i = 0; i < r; ++i) out.append_row(a.row(i));
    return out;
}

IntMatrix left_kernel(const IntMatrix& m) {
    HnfAccumulator acc(m.cols(), Integer(0), true);
    for (std::size_t i = 0; i < m.rows(); ++i) acc.add(m.row(i));
    std::vector<IntVector> gens;
    for (const auto& k : acc.kernel()) gens.push_back(to_dense(k, m.rows()));
    return SubmoduleLattice::span(gens, m.rows()).basis();
}

IntMatrix right_kernel(const IntMatrix& m) { return left_kernel(m.transpose()); }

}  // namespace pil

#include "pil/abelian.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pil {

// ---------------------------------------------------------------------------
// AbelianInvariants

AbelianInvariants AbelianInvariants::from_cyclic_orders(std::span<const Integer> orders) {
    AbelianInvariants inv;
    std::vector<Integer> a;
    for (const auto& o : orders) {
        if (o.is_zero()) {
            ++inv.free_rank_;
        } else {
            Integer v = abs(o);
            if (!v.is_one()) a.push_back(std::move(v));
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (divides(a[i], a[j])) continue;
            Integer g = gcd(a[i], a[j]);
            Integer l = lcm(a[i], a[j]);
            a[i] = std::move(g);
            a[j] = std::move(l);
        }
    }
    for (auto& v : a) {
        if (!v.is_one()) inv.torsion_.push_back(std::move(v));
    }
    return inv;
}

AbelianInvariants AbelianInvariants::free(std::size_t rank) {
    AbelianInvariants inv;
    inv.free_rank_ = rank;
    return inv;
}

AbelianInvariants AbelianInvariants::power(const Integer& m, std::size_t count) {
    std::vector<Integer> orders(count, m);
    return from_cyclic_orders(orders);
}

Integer AbelianInvariants::torsion_order() const {
    Integer p(1);
    for (const auto& d : torsion_) p *= d;
    return p;
}

AbelianInvariants AbelianInvariants::operator+(const AbelianInvariants& other) const {
    std::vector<Integer> orders = torsion_;
    orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
    orders.insert(orders.end(), free_rank_ + other.free_rank_, Integer(0));
    return from_cyclic_orders(orders);
}

std::string AbelianInvariants::to_string() const {
    if (trivial()) return "0";
    std::string s;
    auto term = [&](const std::string& base, std::size_t mult) {
        if (!s.empty()) s += " + ";
        s += base;
        if (mult > 1) s += "^" + std::to_string(mult);
    };
    if (free_rank_ > 0) term("Z", free_rank_);
    for (std::size_t i = 0; i < torsion_.size();) {
        std::size_t j = i;
        while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
        term("Z_" + torsion_[i].to_string(), j - i);
        i = j;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Prime-power bookkeeping

std::vector<std::pair<Integer, int>> factorize(const Integer& n) {
    if (n.sign() <= 0) throw std::invalid_argument("factorize expects a positive integer");
    std::vector<std::pair<Integer, int>> out;
    Integer rest = n;
    auto strip = [&](const Integer& p) {
        int k = 0;
        while (divides(p, rest)) {
            rest = div_exact(rest, p);
            ++k;
        }
        if (k > 0) out.emplace_back(p, k);
    };
    strip(Integer(2));
    constexpr long long kTrialBound = 1000000;
    long long d = 3;
    for (; d <= kTrialBound; d += 2) {
        const Integer di(d);
        if (di * di > rest) break;
        strip(di);
    }
    if (!rest.is_one()) {
        const Integer di(d);
        if (di * di > rest || is_probable_prime(rest)) {
            out.emplace_back(rest, 1);
        } else {
            throw std::runtime_error("cannot factor " + n.to_string() + " within the trial bound");
        }
    }
    return out;
}

std::size_t codim_from_invariants(const AbelianInvariants& inv, const Integer& q) {
    if (q.is_zero()) return inv.free_rank();
    if (q.sign() < 0 || q.is_one()) throw std::invalid_argument("q must be 0 or a prime power");
    const auto f = factorize(q);
    if (f.size() != 1) throw std::invalid_argument("q must be 0 or a prime power: " + q.to_string());
    const auto& [p, k] = f.front();
    std::size_t count = 0;
    for (const auto& d : inv.torsion()) {
        if (divides(p, d) && valuation(d, p) == k) ++count;
    }
    return count;
}

std::map<Integer, std::size_t> codim_table(const AbelianInvariants& inv) {
    std::map<Integer, std::size_t> out;
    if (inv.free_rank() > 0) out[Integer(0)] = inv.free_rank();
    for (const auto& d : inv.torsion()) {
        for (const auto& [p, k] : factorize(d)) {
            Integer q(1);
            for (int i = 0; i < k; ++i) q *= p;
            ++out[q];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SmithTracker {
    IntMatrix* u = nullptr;
    IntMatrix* v = nullptr;
    IntMatrix* v_inv = nullptr;
};

void swap_rows(IntMatrix& a, std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(x, j), a(y, j));
}

void swap_cols(IntMatrix& a, std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, x), a(i, y));
}

// row dst -= q * row src
void row_submul(IntMatrix& a, std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!a(src, j).is_zero()) a(dst, j).submul(q, a(src, j));
    }
}

// col dst -= q * col src
void col_submul(IntMatrix& a, std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!a(i, src).is_zero()) a(i, dst).submul(q, a(i, src));
    }
}

void smith_in_place(IntMatrix& a, const SmithTracker& tr) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    auto do_swap_rows = [&](std::size_t x, std::size_t y) {
        swap_rows(a, x, y);
        if (tr.u) swap_rows(*tr.u, x, y);
    };
    auto do_swap_cols = [&](std::size_t x, std::size_t y) {
        swap_cols(a, x, y);
        if (tr.v) swap_cols(*tr.v, x, y);
        if (tr.v_inv) swap_rows(*tr.v_inv, x, y);
    };
    auto do_row_submul = [&](std::size_t dst, const Integer& q, std::size_t src) {
        row_submul(a, dst, q, src);
        if (tr.u) row_submul(*tr.u, dst, q, src);
    };
    auto do_col_submul = [&](std::size_t dst, const Integer& q, std::size_t src) {
        col_submul(a, dst, q, src);
        if (tr.v) col_submul(*tr.v, dst, q, src);
        if (tr.v_inv) row_submul(*tr.v_inv, src, -q, dst);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j).is_zero()) continue;
                if (bi == rows || abs(a(i, j)) < abs(a(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi == rows) break;
        do_swap_rows(t, bi);
        do_swap_cols(t, bj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t).is_zero()) continue;
                do_row_submul(i, floor_div(a(i, t), a(t, t)), t);
                if (!a(i, t).is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j).is_zero()) continue;
                do_col_submul(j, floor_div(a(t, j), a(t, t)), t);
                if (!a(t, j).is_zero()) clean = false;
            }
            if (!clean) {
                std::size_t best_r = t, best_c = t;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (!a(i, t).is_zero() && abs(a(i, t)) < abs(a(best_r, best_c))) {
                        best_r = i;
                        best_c = t;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!a(t, j).is_zero() && abs(a(t, j)) < abs(a(best_r, best_c))) {
                        best_r = t;
                        best_c = j;
                    }
                }
                do_swap_rows(t, best_r);
                do_swap_cols(t, best_c);
                continue;
            }
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!divides(a(t, t), a(i, j))) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == rows) break;
            do_row_submul(t, Integer(-1), bad);
        }
        if (a(t, t).sign() < 0) {
            for (std::size_t j = 0; j < cols; ++j) a(t, j).negate();
            if (tr.u) {
                for (std::size_t j = 0; j < tr.u->cols(); ++j) (*tr.u)(t, j).negate();
            }
        }
    }
}

}  // namespace

SmithForm snf(const IntMatrix& m) {
    const std::size_t diag_len = std::min(m.rows(), m.cols());
    HnfAccumulator acc(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) acc.add(m.row(i));
    SmithForm out;
    const std::size_t k = acc.pivot_count();
    std::vector<Integer> orders;
    if (acc.full_unimodular() || k == 0) {
        out.diagonal.assign(k, Integer(1));
    } else {
        IntMatrix h = acc.lattice().basis();
        bool units = true;
        for (std::size_t i = 0; i < h.rows() && units; ++i) {
            for (std::size_t j = 0; j < h.cols(); ++j) {
                if (!h(i, j).is_zero()) {
                    units = h(i, j).is_one();
                    break;
                }
            }
        }
        if (units) {
            out.diagonal.assign(k, Integer(1));
        } else {
            smith_in_place(h, {});
            for (std::size_t i = 0; i < k; ++i) out.diagonal.push_back(h(i, i));
        }
    }
    orders = out.diagonal;
    orders.insert(orders.end(), m.cols() - k, Integer(0));
    out.invariants = AbelianInvariants::from_cyclic_orders(orders);
    out.diagonal.resize(diag_len, Integer(0));
    return out;
}

SmithTransform snf_with_transforms(const IntMatrix& m) {
    SmithTransform out;
    IntMatrix a = m;
    out.u = IntMatrix::identity(m.rows());
    out.v = IntMatrix::identity(m.cols());
    out.v_inv = IntMatrix::identity(m.cols());
    smith_in_place(a, {&out.u, &out.v, &out.v_inv});
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out.diagonal.push_back(a(i, i));
    return out;
}

// ---------------------------------------------------------------------------
// Images of evaluation maps

ImageAccumulator::ImageAccumulator(std::size_t cols) : cols_(cols), free_(cols) {}

void ImageAccumulator::add(std::span<const Integer> row, const Integer& modulus) {
    if (row.size() != cols_) throw std::invalid_argument("evaluation row has the wrong length");
    if (modulus.sign() < 0) throw std::invalid_argument("row modulus must be non-negative");
    if (modulus.is_one()) return;
    if (modulus.is_zero()) {
        free_.add(row);
        return;
    }
    auto it = torsion_.find(modulus);
    if (it == torsion_.end()) it = torsion_.emplace(modulus, HnfAccumulator(cols_, modulus)).first;
    it->second.add(row);
}

ImageAccumulator::Reduced ImageAccumulator::reduce() const {
    Reduced r;
    if (free_.pivot_count() == 0) {
        r.free_kernel = IntMatrix::identity(cols_);
    } else {
        r.free_kernel = right_kernel(free_.lattice().basis());
    }
    const std::size_t k = r.free_kernel.rows();
    r.n = Integer(0);
    if (torsion_.empty()) return r;
    r.n = Integer(1);
    for (const auto& [m, acc] : torsion_) r.n = lcm(r.n, m);
    const bool restrict = free_.pivot_count() != 0;
    HnfAccumulator t(k, r.n);
    for (const auto& [m, acc] : torsion_) {
        const Integer f = div_exact(r.n, m);
        const SubmoduleLattice l = acc.lattice();
        for (std::size_t i = 0; i < l.rank(); ++i) {
            auto row = l.basis().row(i);
            IntVector scaled(row.begin(), row.end());
            for (auto& x : scaled) x *= f;
            if (!restrict) {
                t.add(scaled);
                continue;
            }
            IntVector rr(k);
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t j = 0; j < cols_; ++j) {
                    if (!scaled[j].is_zero() && !r.free_kernel(a, j).is_zero()) rr[a].addmul(scaled[j], r.free_kernel(a, j));
                }
            }
            t.add(rr);
        }
    }
    r.torsion_hnf = t.lattice().basis();
    return r;
}

AbelianInvariants ImageAccumulator::invariants() const {
    const Reduced r = reduce();
    const std::size_t k = r.free_kernel.rows();
    std::vector<Integer> orders(cols_ - k, Integer(0));
    if (!r.n.is_zero()) {
        const SmithForm s = snf(r.torsion_hnf);
        for (const auto& d : s.diagonal) orders.push_back(div_exact(r.n, d));
    }
    return AbelianInvariants::from_cyclic_orders(orders);
}

SubmoduleLattice ImageAccumulator::kernel() const {
    const Reduced r = reduce();
    if (r.n.is_zero()) return SubmoduleLattice::span(r.free_kernel);
    const IntMatrix& b = r.torsion_hnf;
    const std::size_t k = b.rows();
    // Columns of n * B^{-1} span {y : B y = 0 mod n}.
    IntMatrix x(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t ii = k; ii-- > 0;) {
            Integer acc = (ii == j) ? r.n : Integer(0);
            for (std::size_t l = ii + 1; l < k; ++l) {
                if (!b(ii, l).is_zero()) acc.submul(b(ii, l), x(l, j));
            }
            if (!divides(b(ii, ii), acc)) throw std::logic_error("torsion kernel is not integral");
            x(ii, j) = div_exact(acc, b(ii, ii));
        }
    }
    // n Z^k lies in the kernel, so the columns may be reduced mod n.
    HnfAccumulator coords(k, r.n);
    IntVector col(k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t ii = 0; ii < k; ++ii) col[ii] = floor_mod(x(ii, j), r.n);
        coords.add(col);
    }
    const SubmoduleLattice kernel_coords = coords.lattice();
    if (free_.pivot_count() == 0) return kernel_coords;
    return SubmoduleLattice::span(kernel_coords.basis() * r.free_kernel);
}

AbelianInvariants image_invariants(const IntMatrix& eval, std::span<const Integer> row_moduli) {
    if (row_moduli.size() != eval.rows()) throw std::invalid_argument("one modulus per evaluation row is required");
    ImageAccumulator acc(eval.cols());
    for (std::size_t i = 0; i < eval.rows(); ++i) acc.add(eval.row(i), row_moduli[i]);
    return acc.invariants();
}

IntMatrix relative_coordinates(const SubmoduleLattice& outer, const SubmoduleLattice& inner) {
    if (outer.ambient_rank() != inner.ambient_rank()) throw std::invalid_argument("lattices live in different ambient spaces");
    IntMatrix c(0, outer.rank());
    for (std::size_t i = 0; i < inner.rank(); ++i) {
        auto coords = outer.coordinates(inner.basis().row(i));
        if (!coords) throw std::invalid_argument("inner lattice is not contained in outer lattice");
        c.append_row(*coords);
    }
    return c;
}

AbelianInvariants lattice_quotient_invariants(const SubmoduleLattice& outer, const SubmoduleLattice& inner) {
    return snf(relative_coordinates(outer, inner)).invariants;
}

// ---------------------------------------------------------------------------
// Ranks over fields

namespace {

std::size_t rational_rank(IntMatrix a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    Integer prev(1);
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!a(i, j).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        swap_rows(a, r, piv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t k = j + 1; k < cols; ++k) {
                Integer v = a(r, j) * a(i, k);
                v.submul(a(i, j), a(r, k));
                a(i, k) = div_exact(v, prev);
            }
            a(i, j) = Integer(0);
        }
        prev = a(r, j);
        ++r;
    }
    return r;
}

std::size_t modular_rank(const IntMatrix& m, const Integer& p) {
    IntMatrix a = m;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (auto& x : a.row(i)) x = floor_mod(x, p);
    }
    std::size_t r = 0;
    for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
        std::size_t piv = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i) {
            if (!a(i, j).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == a.rows()) continue;
        swap_rows(a, r, piv);
        const Integer inv = floor_mod(xgcd(a(r, j), p).s, p);
        for (std::size_t k = j; k < a.cols(); ++k) a(r, k) = floor_mod(a(r, k) * inv, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, j).is_zero()) continue;
            const Integer f = a(i, j);
            for (std::size_t k = j; k < a.cols(); ++k) {
                if (a(r, k).is_zero()) continue;
                a(i, k).submul(f, a(r, k));
                a(i, k) = floor_mod(a(i, k), p);
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t field_rank(const IntMatrix& m, const Integer& p) {
    if (p.is_zero()) return rational_rank(m);
    if (!is_probable_prime(p)) throw std::invalid_argument("field_rank expects p = 0 or a prime");
    return modular_rank(m, p);
}

}  // namespace pil

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "genstat/group.hpp"

namespace genstat {

using Int = boost::multiprecision::cpp_int;

// Sorted-by-column sparse row; no stored zeros.
using SparseRow = std::vector<std::pair<std::int32_t, Int>>;

struct SparseIntMatrix {
    int cols = 0;
    std::vector<SparseRow> rows;
};

inline Int row_l1(const SparseRow& r) {
    Int s = 0;
    for (const auto& [c, v] : r) s += abs(v);
    return s;
}

// Expression of a row as a Z-combination of other rows, by index.
using Combination = std::map<std::int32_t, Int>;

namespace detail {

// Raised by the fixed-width fast path; callers fall back to big integers.
struct OverflowAbort {};

template <class T> struct Scalar;

template <> struct Scalar<std::int64_t> {
    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowAbort{};
        return r;
    }
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowAbort{};
        return r;
    }
    static std::int64_t neg(std::int64_t a) {
        if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowAbort{};
        return -a;
    }
    static std::int64_t from(const Int& v) {
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            throw OverflowAbort{};
        return static_cast<std::int64_t>(v);
    }
    static Int to_int(std::int64_t v) { return Int(v); }
};

template <> struct Scalar<Int> {
    static Int add(const Int& a, const Int& b) { return a + b; }
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int neg(const Int& a) { return -a; }
    static const Int& from(const Int& v) { return v; }
    static const Int& to_int(const Int& v) { return v; }
};

template <class T>
T t_abs(const T& v) {
    return v < T(0) ? Scalar<T>::neg(v) : v;
}

template <class T>
T floor_div(const T& a, const T& b) {
    T q = a / b, r = a % b;
    if (!(r == T(0)) && ((r < T(0)) != (b < T(0)))) q = Scalar<T>::add(q, T(-1));
    return q;
}

template <class T>
void ext_gcd(const T& a, const T& b, T& g, T& x, T& y) {
    using S = Scalar<T>;
    T old_r = a, r = b, old_s = T(1), s = T(0), old_t = T(0), t = T(1);
    while (!(r == T(0))) {
        T q = old_r / r;
        T tmp = S::add(old_r, S::neg(S::mul(q, r))); old_r = r; r = tmp;
        tmp = S::add(old_s, S::neg(S::mul(q, s))); old_s = s; s = tmp;
        tmp = S::add(old_t, S::neg(S::mul(q, t))); old_t = t; t = tmp;
    }
    if (old_r < T(0)) { old_r = S::neg(old_r); old_s = S::neg(old_s); old_t = S::neg(old_t); }
    g = old_r; x = old_s; y = old_t;
}

}  // namespace detail

// Incremental row-style Hermite normal form over Z.
//
// Rows are streamed in; a row is kept (counted as a "basis row") exactly
// when it changes the accumulated Z-row-span.  Pivots are positive and,
// after canonicalize(), entries above each pivot are reduced into
// [0, pivot).  Optionally tracks, for every HNF row, its expression over
// the basis rows.  The scalar type T is the working precision; the int64
// instantiation throws detail::OverflowAbort on overflow so callers can
// retry with Int.
template <class T>
class BasicHnfBuilder {
  public:
    using Row = std::vector<std::pair<std::int32_t, T>>;
    using Comb = std::map<std::int32_t, T>;

    explicit BasicHnfBuilder(int cols, bool track_provenance = false)
        : cols_(cols), track_(track_provenance) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    std::int64_t basis_count() const { return basis_count_; }

    bool insert(const SparseRow& row) { return insert_row(convert(row)); }

    // Returns true when the row span grew (row counted as a basis row).
    bool insert_row(Row row) {
        // Trial reduction without provenance bookkeeping: almost all streamed
        // rows are already in the span and this drops them at row-op cost.
        if (track_ && !would_change(row)) return false;
        Comb prov;
        if (track_) prov[static_cast<std::int32_t>(basis_count_)] = T(1);
        bool changed = false;
        while (!row.empty()) {
            std::int32_t col = row.front().first;
            auto it = pivot_row_.find(col);
            if (it == pivot_row_.end()) {
                if (row.front().second < T(0)) {
                    row_negate(row);
                    comb_negate(prov);
                }
                int idx = static_cast<int>(rows_.size());
                rows_.push_back(std::move(row));
                provs_.push_back(std::move(prov));
                pivot_row_[col] = idx;
                changed = true;
                canonical_ = false;
                break;
            }
            int idx = it->second;
            const T p = rows_[idx].front().second;
            const T v = row.front().second;
            if (v % p == T(0)) {
                T q = detail::Scalar<T>::neg(v / p);
                row_axpy(row, q, rows_[idx]);
                if (track_) comb_axpy(prov, q, provs_[idx]);
            } else {
                // Replace the pivot row by the gcd combination; the span grows.
                T x, y, g;
                detail::ext_gcd(p, v, g, x, y);
                Row combined = rows_[idx];
                row_scale(combined, x);
                row_axpy(combined, y, row);
                Comb cprov;
                if (track_) {
                    cprov = provs_[idx];
                    comb_scale(cprov, x);
                    comb_axpy(cprov, y, prov);
                }
                T q_old = p / g, q_new = v / g;
                // row <- (p/g)*row - (v/g)*old_pivot: leading entry vanishes.
                row_scale(row, q_old);
                row_axpy(row, detail::Scalar<T>::neg(q_new), rows_[idx]);
                if (track_) {
                    comb_scale(prov, q_old);
                    comb_axpy(prov, detail::Scalar<T>::neg(q_new), provs_[idx]);
                }
                rows_[idx] = std::move(combined);
                provs_[idx] = std::move(cprov);
                changed = true;
                canonical_ = false;
            }
        }
        if (changed) {
            ++basis_count_;
            if (rank() - last_canonical_rank_ >= 64) canonicalize();
        }
        return changed;
    }

    // Reduces v by the current rows; returns the residual.  When coeffs is
    // given, stores the multiple of each HNF row that was subtracted.
    SparseRow reduce(const SparseRow& vin,
                     std::vector<Int>* coeffs = nullptr) const {
        Row v = convert(vin);
        std::vector<T> c;
        if (coeffs) c.assign(rows_.size(), T(0));
        Row rest;
        while (!v.empty()) {
            std::int32_t col = v.front().first;
            auto it = pivot_row_.find(col);
            if (it == pivot_row_.end()) {
                rest.push_back(v.front());
                v.erase(v.begin());
                continue;
            }
            int idx = it->second;
            const T& p = rows_[idx].front().second;
            const T& w = v.front().second;
            T q = detail::floor_div(w, p);
            if (coeffs && !(q == T(0)))
                c[idx] = detail::Scalar<T>::add(c[idx], q);
            row_axpy(v, detail::Scalar<T>::neg(q), rows_[idx]);
            if (!v.empty() && v.front().first == col) {
                // Leading entry not divisible by the pivot; keep remainder.
                rest.push_back(v.front());
                v.erase(v.begin());
            }
        }
        if (coeffs) {
            coeffs->clear();
            for (const T& x : c) coeffs->push_back(detail::Scalar<T>::to_int(x));
        }
        SparseRow out;
        out.reserve(rest.size());
        for (auto& [cc, vv] : rest)
            out.emplace_back(cc, detail::Scalar<T>::to_int(vv));
        return out;
    }

    bool in_span(const SparseRow& v, std::vector<Int>* coeffs = nullptr) const {
        return reduce(v, coeffs).empty();
    }

    // Full HNF form: rows sorted by pivot, above-pivot entries in [0, pivot).
    void canonicalize() {
        if (canonical_) return;
        std::vector<int> order;
        order.reserve(rows_.size());
        for (const auto& [col, idx] : pivot_row_) order.push_back(idx);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int idx = *it;
            std::int32_t pc = rows_[idx].front().first;
            const T p = rows_[idx].front().second;
            for (int other : order) {
                if (other == idx) continue;
                const T* e = entry(rows_[other], pc);
                if (!e) continue;
                T q = detail::floor_div(*e, p);
                if (q == T(0)) continue;
                row_axpy(rows_[other], detail::Scalar<T>::neg(q), rows_[idx]);
                if (track_)
                    comb_axpy(provs_[other], detail::Scalar<T>::neg(q),
                              provs_[idx]);
            }
        }
        std::vector<Row> new_rows;
        std::vector<Comb> new_provs;
        pivot_row_.clear();
        for (int idx : order) {
            pivot_row_[rows_[idx].front().first] =
                static_cast<int>(new_rows.size());
            new_rows.push_back(std::move(rows_[idx]));
            new_provs.push_back(std::move(provs_[idx]));
        }
        rows_ = std::move(new_rows);
        provs_ = std::move(new_provs);
        canonical_ = true;
        last_canonical_rank_ = rank();
    }

    SparseRow row_int(int i) const {
        SparseRow out;
        out.reserve(rows_[i].size());
        for (const auto& [c, v] : rows_[i])
            out.emplace_back(c, detail::Scalar<T>::to_int(v));
        return out;
    }

    Combination provenance(int i) const {
        Combination out;
        for (const auto& [k, v] : provs_[i])
            out[k] = detail::Scalar<T>::to_int(v);
        return out;
    }

    // Canonical HNF of everything inserted so far.
    SparseIntMatrix matrix() {
        canonicalize();
        SparseIntMatrix m;
        m.cols = cols_;
        for (int i = 0; i < rank(); ++i) m.rows.push_back(row_int(i));
        return m;
    }

  private:
    static Row convert(const SparseRow& r) {
        Row out;
        out.reserve(r.size());
        for (const auto& [c, v] : r)
            out.emplace_back(c, detail::Scalar<T>::from(v));
        return out;
    }

    // r += m * s, keeping sorted zero-free form.
    static void row_axpy(Row& r, const T& m, const Row& s) {
        if (m == T(0) || s.empty()) return;
        Row out;
        out.reserve(r.size() + s.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < s.size()) {
            if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
                out.push_back(std::move(r[i++]));
            } else if (i == r.size() || s[j].first < r[i].first) {
                out.emplace_back(s[j].first,
                                 detail::Scalar<T>::mul(m, s[j].second));
                ++j;
            } else {
                T v = detail::Scalar<T>::add(
                    r[i].second, detail::Scalar<T>::mul(m, s[j].second));
                if (!(v == T(0))) out.emplace_back(r[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        r = std::move(out);
    }

    // Pure membership probe: true when inserting row would change the span.
    bool would_change(Row row) const {
        while (!row.empty()) {
            auto it = pivot_row_.find(row.front().first);
            if (it == pivot_row_.end()) return true;
            const Row& pivot = rows_[it->second];
            const T& p = pivot.front().second;
            const T v = row.front().second;
            if (!(v % p == T(0))) return true;
            row_axpy(row, detail::Scalar<T>::neg(v / p), pivot);
        }
        return false;
    }

    static void row_scale(Row& r, const T& m) {
        if (m == T(1)) return;
        if (m == T(0)) {
            r.clear();
            return;
        }
        for (auto& [c, v] : r) v = detail::Scalar<T>::mul(v, m);
    }
    static void row_negate(Row& r) {
        for (auto& [c, v] : r) v = detail::Scalar<T>::neg(v);
    }

    static const T* entry(const Row& r, std::int32_t col) {
        auto it = std::lower_bound(
            r.begin(), r.end(), col,
            [](const auto& e, std::int32_t c) { return e.first < c; });
        if (it == r.end() || it->first != col) return nullptr;
        return &it->second;
    }

    static void comb_axpy(Comb& a, const T& m, const Comb& b) {
        if (m == T(0)) return;
        for (const auto& [k, v] : b) {
            auto it = a.find(k);
            if (it == a.end()) {
                a.emplace(k, detail::Scalar<T>::mul(m, v));
            } else {
                it->second = detail::Scalar<T>::add(
                    it->second, detail::Scalar<T>::mul(m, v));
                if (it->second == T(0)) a.erase(it);
            }
        }
    }
    static void comb_scale(Comb& c, const T& m) {
        if (m == T(0)) {
            c.clear();
            return;
        }
        for (auto& [k, v] : c) v = detail::Scalar<T>::mul(v, m);
    }
    static void comb_negate(Comb& c) {
        for (auto& [k, v] : c) v = detail::Scalar<T>::neg(v);
    }

    int cols_;
    bool track_;
    bool canonical_ = true;
    int last_canonical_rank_ = 0;
    std::int64_t basis_count_ = 0;
    std::vector<Row> rows_;
    std::vector<Comb> provs_;
    std::map<std::int32_t, int> pivot_row_;
};

using HnfBuilder = BasicHnfBuilder<Int>;
using FastHnfBuilder = BasicHnfBuilder<std::int64_t>;

// hnf(): row-style Hermite normal form with a row transform such that each
// HNF row is the recorded combination of original matrix rows.
struct HnfResult {
    SparseIntMatrix h;
    std::vector<Combination> row_transform;  // one combination per HNF row
};

inline HnfResult hnf(const SparseIntMatrix& m) {
    HnfBuilder b(m.cols, /*track_provenance=*/true);
    std::vector<std::int32_t> kept;  // basis id -> original row id
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        if (b.insert(m.rows[i])) kept.push_back(static_cast<std::int32_t>(i));
    b.canonicalize();
    HnfResult out;
    out.h = b.matrix();
    for (int i = 0; i < b.rank(); ++i) {
        Combination c;
        for (const auto& [basis_id, v] : b.provenance(i)) c[kept[basis_id]] = v;
        out.row_transform.push_back(std::move(c));
    }
    return out;
}

inline bool in_row_span(const HnfResult& h, const SparseRow& v) {
    HnfBuilder b(h.h.cols);
    for (const auto& r : h.h.rows) b.insert(r);
    return b.in_span(v);
}

// ---------------------------------------------------------------------------
// Smith normal form with tracked unimodular transforms.
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
class DenseMat {
  public:
    DenseMat(int r, int c)
        : r_(r), c_(c), a_(static_cast<std::size_t>(r) * c, T(0)) {}
    T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const T& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * c_ + j];
    }
    int rows() const { return r_; }
    int cols() const { return c_; }

    static DenseMat identity(int n) {
        DenseMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

  private:
    int r_, c_;
    std::vector<T> a_;
};

template <class T>
void row_add(DenseMat<T>& m, int dst, int src, const T& k) {
    using S = Scalar<T>;
    for (int j = 0; j < m.cols(); ++j)
        if (!(m.at(src, j) == T(0)))
            m.at(dst, j) = S::add(m.at(dst, j), S::mul(k, m.at(src, j)));
}

template <class T>
void col_add(DenseMat<T>& m, int dst, int src, const T& k) {
    using S = Scalar<T>;
    for (int i = 0; i < m.rows(); ++i)
        if (!(m.at(i, src) == T(0)))
            m.at(i, dst) = S::add(m.at(i, dst), S::mul(k, m.at(i, src)));
}

template <class T>
void row_swap(DenseMat<T>& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

template <class T>
void col_swap(DenseMat<T>& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

template <class T>
void row_negate(DenseMat<T>& m, int a) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) = Scalar<T>::neg(m.at(a, j));
}

template <class T>
void col_negate(DenseMat<T>& m, int a) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) = Scalar<T>::neg(m.at(i, a));
}

}  // namespace detail

struct SmithDecomposition {
    int rows = 0;
    int cols = 0;
    std::vector<Int> diag;                // length min(rows, cols)
    std::vector<std::vector<Int>> r;      // cols x cols, unimodular
    std::vector<std::vector<Int>> r_inv;  // cols x cols
    std::vector<std::vector<Int>> l;      // rows x rows (optional)
    std::vector<std::vector<Int>> l_inv;  // rows x rows (optional)
    bool has_l = false;

    Int diag_at(int i) const {
        return i < static_cast<int>(diag.size()) ? diag[i] : Int(0);
    }
};

namespace detail {

// Working state: W = P * M * Q with P, Q unimodular.  L = P^-1, R = Q^-1.
template <class T>
struct SnfWork {
    DenseMat<T> w, r, r_inv, l, l_inv;
    bool track_l;

    SnfWork(const SparseIntMatrix& m, bool with_l)
        : w(static_cast<int>(m.rows.size()), m.cols),
          r(DenseMat<T>::identity(m.cols)),
          r_inv(DenseMat<T>::identity(m.cols)),
          l(with_l ? DenseMat<T>::identity(static_cast<int>(m.rows.size()))
                   : DenseMat<T>(0, 0)),
          l_inv(with_l ? DenseMat<T>::identity(static_cast<int>(m.rows.size()))
                       : DenseMat<T>(0, 0)),
          track_l(with_l) {
        for (int i = 0; i < w.rows(); ++i)
            for (const auto& [c, v] : m.rows[i]) w.at(i, c) = Scalar<T>::from(v);
    }

    // W: col dst += k * col src.  Mirrors: Rinv same col op; R row op.
    void cadd(int dst, int src, const T& k) {
        col_add(w, dst, src, k);
        col_add(r_inv, dst, src, k);
        row_add(r, src, dst, Scalar<T>::neg(k));
    }
    void cswap(int a, int b) {
        col_swap(w, a, b);
        col_swap(r_inv, a, b);
        row_swap(r, a, b);
    }
    void cneg(int a) {
        col_negate(w, a);
        col_negate(r_inv, a);
        row_negate(r, a);
    }
    // W: row dst += k * row src.  Mirrors: Linv same row op; L col op.
    void radd(int dst, int src, const T& k) {
        row_add(w, dst, src, k);
        if (track_l) {
            row_add(l_inv, dst, src, k);
            col_add(l, src, dst, Scalar<T>::neg(k));
        }
    }
    void rswap(int a, int b) {
        row_swap(w, a, b);
        if (track_l) {
            row_swap(l_inv, a, b);
            col_swap(l, a, b);
        }
    }
    void rneg(int a) {
        row_negate(w, a);
        if (track_l) {
            row_negate(l_inv, a);
            col_negate(l, a);
        }
    }
};

// Clears row t and column t of the submatrix at (t, t), leaving a pivot.
template <class T>
void snf_clear_position(SnfWork<T>& s, int t) {
    auto& w = s.w;
    int nr = w.rows(), nc = w.cols();
    while (true) {
        // Move the smallest-magnitude nonzero of the submatrix to (t, t).
        int bi = -1, bj = -1;
        for (int i = t; i < nr; ++i)
            for (int j = t; j < nc; ++j) {
                const T& v = w.at(i, j);
                if (v == T(0)) continue;
                if (bi < 0 || t_abs(v) < t_abs(w.at(bi, bj))) { bi = i; bj = j; }
            }
        if (bi < 0) return;  // submatrix is zero
        s.rswap(t, bi);
        s.cswap(t, bj);
        bool dirty = false;
        for (int i = t + 1; i < nr; ++i) {
            if (w.at(i, t) == T(0)) continue;
            T q = w.at(i, t) / w.at(t, t);
            if (!(q == T(0))) s.radd(i, t, Scalar<T>::neg(q));
            if (!(w.at(i, t) == T(0))) dirty = true;
        }
        for (int j = t + 1; j < nc; ++j) {
            if (w.at(t, j) == T(0)) continue;
            T q = w.at(t, j) / w.at(t, t);
            if (!(q == T(0))) s.cadd(j, t, Scalar<T>::neg(q));
            if (!(w.at(t, j) == T(0))) dirty = true;
        }
        if (!dirty) {
            if (w.at(t, t) < T(0)) s.cneg(t);
            return;
        }
    }
}

template <class T>
SmithDecomposition snf_impl(const SparseIntMatrix& m, bool with_l) {
    SnfWork<T> s(m, with_l);
    int nr = s.w.rows(), nc = s.w.cols();
    int n = std::min(nr, nc);
    for (int t = 0; t < n; ++t) snf_clear_position(s, t);
    // Enforce the divisibility chain among the diagonal entries.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t + 1 < n; ++t) {
            T a = s.w.at(t, t);
            T b = s.w.at(t + 1, t + 1);
            if (a == T(0) && !(b == T(0))) {
                s.rswap(t, t + 1);  // push zeros to the end of the chain
                s.cswap(t, t + 1);
                changed = true;
                continue;
            }
            if (a == T(0) || b == T(0)) continue;
            if (b % a == T(0)) continue;
            s.cadd(t, t + 1, T(1));  // brings b into column t at row t+1
            snf_clear_position(s, t);
            for (int u = t + 1; u < n; ++u) snf_clear_position(s, u);
            changed = true;
        }
    }
    SmithDecomposition out;
    out.rows = nr;
    out.cols = nc;
    out.diag.resize(n);
    for (int t = 0; t < n; ++t) out.diag[t] = Scalar<T>::to_int(s.w.at(t, t));
    auto densify = [](const DenseMat<T>& d) {
        std::vector<std::vector<Int>> v(d.rows(), std::vector<Int>(d.cols()));
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j)
                v[i][j] = Scalar<T>::to_int(d.at(i, j));
        return v;
    };
    out.r = densify(s.r);
    out.r_inv = densify(s.r_inv);
    if (with_l) {
        out.l = densify(s.l);
        out.l_inv = densify(s.l_inv);
        out.has_l = true;
    }
    return out;
}

}  // namespace detail

// Smith normal form M = L * A * R with unimodular L, R and a divisibility
// chain on the diagonal of A.  int64 fast path, exact big-integer fallback.
inline SmithDecomposition snf(const SparseIntMatrix& m, bool with_l = false) {
    try {
        return detail::snf_impl<std::int64_t>(m, with_l);
    } catch (const detail::OverflowAbort&) {
        return detail::snf_impl<Int>(m, with_l);
    }
}

// Class coordinates of v in the transformed basis: c = v * R^-1.
inline std::vector<Int> classify_coords(const SmithDecomposition& d,
                                        const SparseRow& v) {
    std::vector<Int> c(d.cols, 0);
    for (int j = 0; j < d.cols; ++j) {
        Int s = 0;
        for (const auto& [k, val] : v) s += val * d.r_inv[k][j];
        c[j] = std::move(s);
    }
    return c;
}

struct ClassCoordinate {
    int index;  // diagonal index
    Int order;  // a_ii (0 for free indices)
    Int value;  // c_i mod a_ii for torsion, raw c_i for free
};

// Torsion coordinates (c_i mod a_ii) plus free-index diagnostics.
inline std::vector<ClassCoordinate> classify(const SmithDecomposition& d,
                                             const SparseRow& v) {
    std::vector<Int> c = classify_coords(d, v);
    std::vector<ClassCoordinate> out;
    for (int i = 0; i < d.cols; ++i) {
        Int a = d.diag_at(i);
        if (a == 1) continue;
        if (a == 0) {
            if (c[i] != 0) out.push_back({i, 0, c[i]});
        } else {
            Int r = c[i] % a;
            if (r < 0) r += a;
            out.push_back({i, a, std::move(r)});
        }
    }
    return out;
}

// Text dump/load: header "rows cols", then "r c value" triples.
inline void dump_matrix(std::ostream& os, const SparseIntMatrix& m) {
    os << m.rows.size() << " " << m.cols << "\n";
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (const auto& [c, v] : m.rows[i])
            os << i << " " << c << " " << v << "\n";
}

inline SparseIntMatrix load_matrix(std::istream& is) {
    SparseIntMatrix m;
    std::size_t nrows = 0;
    if (!(is >> nrows >> m.cols)) throw InvalidInputError("bad matrix header");
    m.rows.resize(nrows);
    std::size_t r = 0;
    std::int32_t c = 0;
    Int v;
    while (is >> r >> c >> v) {
        if (r >= nrows || c < 0 || c >= m.cols)
            throw InvalidInputError("matrix entry out of range");
        m.rows[r].emplace_back(c, v);
    }
    for (auto& row : m.rows) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i].first == row[i - 1].first)
                throw InvalidInputError("duplicate matrix entry");
    }
    return m;
}

}  // namespace genstat

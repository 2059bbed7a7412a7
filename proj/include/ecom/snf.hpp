#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ecom/budget.hpp"
#include "ecom/errors.hpp"

namespace ecom {

/// Sparse integer matrix over arbitrary-precision integers; no explicit
/// zeros are stored.  Rows hold sorted (col, value) maps so iteration is
/// deterministic.
class IntegerMatrix {
public:
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, mpz_class v) {
        auto& row = data_[static_cast<std::size_t>(r)];
        if (v == 0)
            row.erase(c);
        else
            row[c] = std::move(v);
    }

    void add(int r, int c, const mpz_class& v) {
        auto& row = data_[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        if (it == row.end()) {
            if (v != 0) row.emplace(c, v);
        } else {
            it->second += v;
            if (it->second == 0) row.erase(it);
        }
    }

    mpz_class get(int r, int c) const {
        const auto& row = data_[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        return it == row.end() ? mpz_class(0) : it->second;
    }

    long long nnz() const {
        long long n = 0;
        for (const auto& row : data_) n += static_cast<long long>(row.size());
        return n;
    }

    const std::map<int, mpz_class>& row(int r) const {
        return data_[static_cast<std::size_t>(r)];
    }

private:
    int rows_, cols_;
    std::vector<std::map<int, mpz_class>> data_;
};

/// Invariant factors d1 | d2 | ... | dr of an integer matrix.
struct SmithNormalFormResult {
    std::vector<mpz_class> invariant_factors;
    int rank = 0;

    /// Factors > 1, i.e. the torsion part of the cokernel restricted to
    /// the pivot block.
    std::vector<mpz_class> nontrivial_factors() const {
        std::vector<mpz_class> out;
        for (const auto& d : invariant_factors)
            if (d > 1) out.push_back(d);
        return out;
    }
};

namespace snf_detail {

struct Int64Overflow {};

/// Scalar traits: exact signed arithmetic with overflow detection for the
/// int64 fast path; GMP integers never overflow.
struct I64 {
    using value = std::int64_t;
    static value add(value a, value b) {
        value r;
        if (__builtin_add_overflow(a, b, &r)) throw Int64Overflow{};
        return r;
    }
    static value mul(value a, value b) {
        value r;
        if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
        return r;
    }
    static value neg(value a) {
        if (a == INT64_MIN) throw Int64Overflow{};
        return -a;
    }
    static value abs(value a) { return a < 0 ? neg(a) : a; }
    static bool is_one_abs(value a) { return a == 1 || a == -1; }
    static value quot(value a, value b) { return a / b; }  // exact uses only
    /// Quotient minimizing |a - q b|.
    static value round_quot(value a, value b) {
        value q = a / b, r = a - q * b;
        if (r != 0) {
            value hb = abs(b);
            if (2 * abs(r) > hb) q += ((r > 0) == (b > 0)) ? 1 : -1;
        }
        return q;
    }
};

struct MPZ {
    using value = mpz_class;
    static value add(const value& a, const value& b) { return a + b; }
    static value mul(const value& a, const value& b) { return a * b; }
    static value neg(const value& a) { return -a; }
    static value abs(const value& a) { return ::abs(a); }
    static bool is_one_abs(const value& a) { return a == 1 || a == -1; }
    static value quot(const value& a, const value& b) { return a / b; }
    static value round_quot(const value& a, const value& b) {
        value q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (r != 0) {
            value hb = ::abs(b);
            if (2 * ::abs(r) > hb) q += ((r > 0) == (b > 0)) ? 1 : -1;
        }
        return q;
    }
};

/// Sparse elimination to diagonal form by unimodular row/column operations.
/// Pivot rule: nonzero entry of minimal absolute value, ties broken by
/// lowest row then lowest column.
template <class S>
class Reducer {
    using V = typename S::value;
    using Entry = std::pair<int, V>;

public:
    Reducer(const IntegerMatrix& m, const Budget& budget)
        : nrows_(m.rows()), ncols_(m.cols()), budget_(budget) {
        rows_.resize(static_cast<std::size_t>(nrows_));
        col_rows_.assign(static_cast<std::size_t>(ncols_), {});
        row_active_.assign(static_cast<std::size_t>(nrows_), 1);
        min_abs_.assign(static_cast<std::size_t>(nrows_), V(0));
        min_col_.assign(static_cast<std::size_t>(nrows_), -1);
        for (int r = 0; r < nrows_; ++r) {
            auto& dst = rows_[static_cast<std::size_t>(r)];
            dst.reserve(m.row(r).size());
            for (const auto& [c, v] : m.row(r)) {
                dst.emplace_back(c, convert(v));
                col_rows_[static_cast<std::size_t>(c)].insert(r);
            }
            nnz_ += static_cast<long long>(dst.size());
            refresh_cache(r);
        }
        check_budget();
    }

    std::vector<mpz_class> diagonalize() {
        std::vector<mpz_class> diagonal;
        while (true) {
            auto [r, c] = select_pivot();
            if (r < 0) break;
            if (!clear_pivot_column(r, c)) continue;  // created a smaller entry
            if (!clear_pivot_row(r, c)) continue;
            V d = value_at(r, c);
            diagonal.push_back(to_mpz(S::abs(d)));
            deactivate(r, c);
        }
        return diagonal;
    }

private:
    static V convert(const mpz_class& v) {
        if constexpr (std::is_same_v<V, mpz_class>) {
            return v;
        } else {
            if (!v.fits_slong_p()) throw Int64Overflow{};
            return static_cast<std::int64_t>(v.get_si());
        }
    }

    static mpz_class to_mpz(const V& v) {
        if constexpr (std::is_same_v<V, mpz_class>)
            return v;
        else
            return mpz_class(static_cast<long>(v));
    }

    V value_at(int r, int c) const {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, int col) { return e.first < col; });
        return (it != row.end() && it->first == c) ? it->second : V(0);
    }

    void refresh_cache(int r) {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        at_one_.erase(r);
        if (!row_active_[static_cast<std::size_t>(r)] || row.empty()) {
            min_abs_[static_cast<std::size_t>(r)] = V(0);
            min_col_[static_cast<std::size_t>(r)] = -1;
            return;
        }
        V best = S::abs(row.front().second);
        int best_col = row.front().first;
        for (const auto& [c, v] : row) {
            V a = S::abs(v);
            if (a < best) {
                best = a;
                best_col = c;
            }
        }
        min_abs_[static_cast<std::size_t>(r)] = best;
        min_col_[static_cast<std::size_t>(r)] = best_col;
        if (S::is_one_abs(best)) at_one_.insert(r);
    }

    std::pair<int, int> select_pivot() const {
        if (!at_one_.empty()) {
            int r = *at_one_.begin();
            return {r, min_col_[static_cast<std::size_t>(r)]};
        }
        int best_row = -1;
        for (int r = 0; r < nrows_; ++r) {
            if (!row_active_[static_cast<std::size_t>(r)]) continue;
            if (min_col_[static_cast<std::size_t>(r)] < 0) continue;
            if (best_row < 0 || min_abs_[static_cast<std::size_t>(r)] <
                                    min_abs_[static_cast<std::size_t>(best_row)])
                best_row = r;
        }
        if (best_row < 0) return {-1, -1};
        return {best_row, min_col_[static_cast<std::size_t>(best_row)]};
    }

    /// row_i += q * row_r (q nonzero).
    void axpy(int i, int r, const V& q) {
        const auto& src = rows_[static_cast<std::size_t>(r)];
        auto& dst = rows_[static_cast<std::size_t>(i)];
        std::vector<Entry> out;
        out.reserve(dst.size() + src.size());
        auto a = dst.begin();
        auto b = src.begin();
        while (a != dst.end() || b != src.end()) {
            if (b == src.end() || (a != dst.end() && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == dst.end() || b->first < a->first) {
                out.emplace_back(b->first, S::mul(q, b->second));
                col_rows_[static_cast<std::size_t>(b->first)].insert(i);
                ++b;
            } else {
                V v = S::add(a->second, S::mul(q, b->second));
                if (v == V(0))
                    col_rows_[static_cast<std::size_t>(a->first)].erase(i);
                else
                    out.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        nnz_ += static_cast<long long>(out.size()) - static_cast<long long>(dst.size());
        dst = std::move(out);
        refresh_cache(i);
        if (++ops_since_check_ >= 64) {
            ops_since_check_ = 0;
            check_budget();
        }
    }

    /// Returns false if a smaller entry was produced (pivot must be
    /// reselected), true once the column is clear apart from the pivot.
    bool clear_pivot_column(int r, int c) {
        V d = value_at(r, c);
        auto& members = col_rows_[static_cast<std::size_t>(c)];
        std::vector<int> rows(members.begin(), members.end());
        std::sort(rows.begin(), rows.end());
        for (int i : rows) {
            if (i == r) continue;
            V a = value_at(i, c);
            if (a == V(0)) continue;
            V q = S::round_quot(a, d);
            V rem = S::add(a, S::neg(S::mul(q, d)));
            axpy(i, r, S::neg(q));
            if (rem != V(0)) return false;  // |rem| < |d|: smaller pivot exists
        }
        return true;
    }

    /// Column operations here touch only row r because column c is already
    /// clear; returns false if a non-divisible entry was reduced in place.
    bool clear_pivot_row(int r, int c) {
        V d = value_at(r, c);
        auto& row = rows_[static_cast<std::size_t>(r)];
        bool clean = true;
        std::vector<Entry> kept;
        kept.reserve(1);
        for (auto& [j, v] : row) {
            if (j == c) {
                kept.emplace_back(j, std::move(v));
                continue;
            }
            V q = S::round_quot(v, d);
            V rem = S::add(v, S::neg(S::mul(q, d)));
            if (rem == V(0)) {
                col_rows_[static_cast<std::size_t>(j)].erase(r);
            } else {
                kept.emplace_back(j, std::move(rem));
                clean = false;
            }
        }
        nnz_ += static_cast<long long>(kept.size()) - static_cast<long long>(row.size());
        row = std::move(kept);
        refresh_cache(r);
        return clean;
    }

    void check_budget() const {
        if (nnz_ * 24 > budget_.mem_mb * 1024 * 1024)
            throw BudgetExceeded("smith normal form working set (MB)",
                                 nnz_ * 24 / (1024 * 1024) + 1);
    }

    void deactivate(int r, int c) {
        row_active_[static_cast<std::size_t>(r)] = 0;
        at_one_.erase(r);
        col_rows_[static_cast<std::size_t>(c)].erase(r);
        nnz_ -= 1;
        rows_[static_cast<std::size_t>(r)].clear();
        min_abs_[static_cast<std::size_t>(r)] = V(0);
        min_col_[static_cast<std::size_t>(r)] = -1;
    }

    int nrows_, ncols_;
    Budget budget_;
    std::vector<std::vector<Entry>> rows_;
    std::vector<std::unordered_set<int>> col_rows_;
    std::vector<char> row_active_;
    std::vector<V> min_abs_;
    std::vector<int> min_col_;
    std::set<int> at_one_;
    long long nnz_ = 0;
    int ops_since_check_ = 0;
};

/// Normalize a diagonal multiset into the invariant-factor chain.  Entries
/// equal to 1 are already in normal position; the (few) larger entries are
/// fixed up by pairwise gcd/lcm exchanges until the chain divides.
inline std::vector<mpz_class> invariant_chain(std::vector<mpz_class> diag) {
    std::size_t ones = 0;
    std::vector<mpz_class> rest;
    for (auto& d : diag) {
        if (d == 1)
            ++ones;
        else
            rest.push_back(std::move(d));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j) {
                if (rest[j] % rest[i] == 0) continue;
                mpz_class g, l;
                mpz_gcd(g.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
                l = rest[i] / g * rest[j];
                rest[i] = g;
                rest[j] = l;
                changed = true;
            }
        std::sort(rest.begin(), rest.end());
    }
    std::vector<mpz_class> out(ones, mpz_class(1));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace snf_detail

/// Exact Smith normal form.  Runs an int64 fast path first and retries with
/// GMP integers if any intermediate value overflows, so results are always
/// exact.
inline SmithNormalFormResult smith_normal_form(const IntegerMatrix& m,
                                               const Budget& budget = {}) {
    std::vector<mpz_class> diag;
    try {
        snf_detail::Reducer<snf_detail::I64> red(m, budget);
        diag = red.diagonalize();
    } catch (const snf_detail::Int64Overflow&) {
        snf_detail::Reducer<snf_detail::MPZ> red(m, budget);
        diag = red.diagonalize();
    }
    SmithNormalFormResult res;
    res.invariant_factors = snf_detail::invariant_chain(std::move(diag));
    res.rank = static_cast<int>(res.invariant_factors.size());
    return res;
}

/// Rank of the matrix over GF(p).  Pivot selection favours sparse columns,
/// deterministically.  Used as the fast path for Betti-only queries; torsion
/// always goes through the exact SNF.
inline int rank_mod_p(const IntegerMatrix& m, std::uint64_t p, const Budget& budget = {}) {
    int nrows = m.rows(), ncols = m.cols();
    std::vector<std::vector<std::pair<int, std::uint64_t>>> rows(
        static_cast<std::size_t>(nrows));
    std::vector<std::set<int>> col_rows(static_cast<std::size_t>(ncols));
    long long nnz = 0;
    for (int r = 0; r < nrows; ++r) {
        for (const auto& [c, v] : m.row(r)) {
            mpz_class red = v % static_cast<long>(p);
            if (red < 0) red += static_cast<long>(p);
            std::uint64_t u = red.get_ui();
            if (u) {
                rows[static_cast<std::size_t>(r)].emplace_back(c, u);
                col_rows[static_cast<std::size_t>(c)].insert(r);
                ++nnz;
            }
        }
    }
    auto pow_mod = [&](std::uint64_t b, std::uint64_t e) {
        unsigned __int128 acc = 1, base = b;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint64_t>(acc);
    };
    auto inv_mod = [&](std::uint64_t a) { return pow_mod(a, p - 2); };

    std::vector<char> row_done(static_cast<std::size_t>(nrows), 0);
    int rank = 0;
    while (true) {
        // pivot column: fewest live entries; ties to the lowest index
        int pc = -1;
        std::size_t best = 0;
        for (int c = 0; c < ncols; ++c) {
            std::size_t sz = col_rows[static_cast<std::size_t>(c)].size();
            if (sz == 0) continue;
            if (pc < 0 || sz < best) {
                pc = c;
                best = sz;
            }
        }
        if (pc < 0) break;
        int pr = *col_rows[static_cast<std::size_t>(pc)].begin();
        ++rank;
        row_done[static_cast<std::size_t>(pr)] = 1;
        auto pivot_row = rows[static_cast<std::size_t>(pr)];
        std::uint64_t pval = 0;
        for (auto& [c, v] : pivot_row)
            if (c == pc) pval = v;
        std::uint64_t pinv = inv_mod(pval);
        std::vector<int> members(col_rows[static_cast<std::size_t>(pc)].begin(),
                                 col_rows[static_cast<std::size_t>(pc)].end());
        // remove the pivot row everywhere
        for (auto& [c, v] : pivot_row) col_rows[static_cast<std::size_t>(c)].erase(pr);
        rows[static_cast<std::size_t>(pr)].clear();
        for (int i : members) {
            if (i == pr || row_done[static_cast<std::size_t>(i)]) continue;
            auto& dst = rows[static_cast<std::size_t>(i)];
            std::uint64_t a = 0;
            for (auto& [c, v] : dst)
                if (c == pc) a = v;
            std::uint64_t factor = static_cast<std::uint64_t>(
                (unsigned __int128)(p - a) * pinv % p);
            // dst += factor * pivot_row
            std::vector<std::pair<int, std::uint64_t>> out;
            out.reserve(dst.size() + pivot_row.size());
            auto x = dst.begin();
            auto y = pivot_row.begin();
            while (x != dst.end() || y != pivot_row.end()) {
                if (y == pivot_row.end() || (x != dst.end() && x->first < y->first)) {
                    out.push_back(*x++);
                } else if (x == dst.end() || y->first < x->first) {
                    std::uint64_t v = static_cast<std::uint64_t>(
                        (unsigned __int128)factor * y->second % p);
                    if (v) {
                        out.emplace_back(y->first, v);
                        col_rows[static_cast<std::size_t>(y->first)].insert(i);
                    }
                    ++y;
                } else {
                    std::uint64_t v = static_cast<std::uint64_t>(
                        ((unsigned __int128)x->second +
                         (unsigned __int128)factor * y->second) % p);
                    if (v)
                        out.emplace_back(x->first, v);
                    else
                        col_rows[static_cast<std::size_t>(x->first)].erase(i);
                    ++x;
                    ++y;
                }
            }
            nnz += static_cast<long long>(out.size()) - static_cast<long long>(dst.size());
            dst = std::move(out);
            if (nnz * 16 / (1024 * 1024) > budget.mem_mb)
                throw BudgetExceeded("mod-p rank working set (MB)", nnz * 16 / (1024 * 1024));
        }
    }
    return rank;
}

}  // namespace ecom

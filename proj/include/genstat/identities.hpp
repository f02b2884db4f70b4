#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "genstat/linalg.hpp"
#include "genstat/model.hpp"

namespace genstat {

// Smallest commutator arity that can have empty common support on the
// minimal sphere (supports are (p+1)-simplices among d+2 vertices), and the
// default depth used by the pipeline.
inline int min_identity_arity(int d, int p) {
    return 1 + (p + 2 + (d - p) - 1) / (d - p);
}

inline int default_identity_depth(int d, int p) {
    return std::max(d + 1, min_identity_arity(d, p));
}

namespace detail {

// Index-level word: (generator index, exponent).
using IndexWord = std::vector<std::pair<int, int>>;

inline IndexWord index_inverse(const IndexWord& w) {
    IndexWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.emplace_back(it->first, -it->second);
    return out;
}

// Left-fold commutator over single letters s_i^{e_i}.
inline IndexWord index_commutator(const std::vector<int>& s,
                                  const std::vector<int>& e) {
    IndexWord acc{{s[0], e[0]}};
    for (std::size_t i = 1; i < s.size(); ++i) {
        IndexWord b{{s[i], e[i]}};
        IndexWord acc_inv = index_inverse(acc);
        IndexWord b_inv = index_inverse(b);
        IndexWord next;
        next.reserve(acc.size() * 2 + 2);
        next.insert(next.end(), acc_inv.begin(), acc_inv.end());
        next.insert(next.end(), b_inv.begin(), b_inv.end());
        next.insert(next.end(), acc.begin(), acc.end());
        next.insert(next.end(), b.begin(), b.end());
        acc = std::move(next);
    }
    return acc;
}

// Walks an index word from a0 using the transition tables, returning the
// accumulated coefficient row (sorted, zero-free).
inline SparseRow walk_row(const ExcitationModel& m, const IndexWord& w,
                          std::int64_t a0,
                          std::vector<std::pair<std::int32_t, int>>& buf) {
    buf.clear();
    std::int64_t a = a0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->second == 1) {
            buf.emplace_back(m.theta_column(it->first, a), +1);
            a = m.step(it->first, a);
        } else {
            a = m.unstep(it->first, a);
            buf.emplace_back(m.theta_column(it->first, a), -1);
        }
    }
    std::sort(buf.begin(), buf.end());
    SparseRow row;
    for (std::size_t i = 0; i < buf.size();) {
        std::size_t j = i;
        int c = 0;
        while (j < buf.size() && buf[j].first == buf[i].first) c += buf[j++].second;
        if (c != 0) row.emplace_back(buf[i].first, Int(c));
        i = j;
    }
    return row;
}

}  // namespace detail

// Streams every locality-identity row in deterministic order: arity n
// ascending; generator tuples in lexicographic index order (repeats allowed,
// only tuples whose supports share no vertex); exponent patterns by bit mask
// (bit i set = argument i inverted); initial configurations ascending.
// Zero rows are skipped.  Returns true when the budget cut emission short.
inline bool for_each_identity_row(
    const ExcitationModel& m, int max_args, std::int64_t budget,
    const std::function<void(SparseRow&&)>& emit) {
    if (max_args < 2) throw InvalidInputError("identity depth must be >= 2");
    int ns = m.num_generators();
    std::vector<std::uint64_t> masks(ns);
    for (int s = 0; s < ns; ++s) {
        std::uint64_t mask = 0;
        for (int v : m.generator_label(s).simplex.vertices) {
            if (v >= 64)
                throw InvalidInputError("vertex ids above 63 are unsupported");
            mask |= std::uint64_t(1) << v;
        }
        masks[s] = mask;
    }
    std::int64_t emitted = 0;
    bool exhausted = false;
    std::vector<int> tuple;
    std::vector<std::pair<std::int32_t, int>> buf;
    std::vector<int> exps;

    auto emit_tuple = [&](int n) {
        for (std::uint32_t pattern = 0; pattern < (std::uint32_t(1) << n);
             ++pattern) {
            exps.assign(n, 1);
            for (int i = 0; i < n; ++i)
                if (pattern & (std::uint32_t(1) << i)) exps[i] = -1;
            detail::IndexWord w = detail::index_commutator(tuple, exps);
            for (std::int64_t a0 = 0; a0 < m.num_configs(); ++a0) {
                if (emitted >= budget) { exhausted = true; return false; }
                ++emitted;  // the budget counts attempted rows
                SparseRow row = detail::walk_row(m, w, a0, buf);
                if (row.empty()) continue;
                emit(std::move(row));
            }
        }
        return true;
    };

    std::function<bool(int, std::uint64_t)> recurse =
        [&](int n, std::uint64_t common) -> bool {
        if (static_cast<int>(tuple.size()) == n)
            return common == 0 ? emit_tuple(n) : true;
        for (int s = 0; s < ns; ++s) {
            tuple.push_back(s);
            bool ok = recurse(n, common & masks[s]);
            tuple.pop_back();
            if (!ok) return false;
        }
        return true;
    };

    for (int n = 2; n <= max_args && !exhausted; ++n) {
        tuple.clear();
        recurse(n, ~std::uint64_t(0));
    }
    return exhausted;
}

struct IdentityRows {
    std::vector<ThetaVector> rows;  // deduplicated, deterministic order
    bool budget_exhausted = false;
};

// Materialized variant with exact duplicate removal; intended for models
// small enough to hold the full row list.
inline IdentityRows generate_identities(const ExcitationModel& m, int max_args,
                                        std::int64_t budget) {
    IdentityRows out;
    std::set<SparseRow> seen;
    out.budget_exhausted = for_each_identity_row(
        m, max_args, budget, [&](SparseRow&& row) {
            if (seen.insert(row).second)
                out.rows.push_back(theta_from_row(row));
        });
    return out;
}

// True iff adding new_rows leaves the integer row span unchanged.
inline bool saturation_check(const std::vector<ThetaVector>& rows_so_far,
                             const std::vector<ThetaVector>& new_rows,
                             int cols) {
    HnfBuilder b(cols);
    for (const auto& r : rows_so_far) b.insert(theta_to_row(r));
    for (const auto& r : new_rows)
        if (!b.in_span(theta_to_row(r))) return false;
    return true;
}

}  // namespace genstat

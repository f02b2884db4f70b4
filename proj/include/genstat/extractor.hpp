#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "genstat/identities.hpp"
#include "genstat/linalg.hpp"
#include "genstat/model.hpp"

namespace genstat {

// ---------------------------------------------------------------------------
// Invariance verification.
// ---------------------------------------------------------------------------

struct InvarianceViolation {
    int condition;  // 1 = state rephasing, 2 = unitary rephasing, 3 = local
    std::string detail;
};

struct InvarianceReport {
    std::vector<InvarianceViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks the three invariance conditions on a coefficient vector:
//   1. per configuration a: sum_s eps(s,a) - sum_s eps(s,a-ds) = 0
//   2. per generator s:     sum_a eps(s,a) = 0
//   3. per generator s and vertex v of supp(s), grouping configurations by
//      their restriction to v: each group's coefficients sum to 0.
inline InvarianceReport verify_invariance(const ExcitationModel& m,
                                          const ThetaVector& v) {
    InvarianceReport rep;
    std::map<std::int64_t, std::int64_t> out_sum, in_sum;
    std::map<int, std::int64_t> per_gen;
    for (const auto& [col, c] : v.coeffs) {
        auto [s, a] = m.theta_term(col);
        out_sum[a] += c;
        in_sum[m.step(s, a)] += c;
        per_gen[s] += c;
    }
    std::set<std::int64_t> nodes;
    for (const auto& [a, c] : out_sum) nodes.insert(a);
    for (const auto& [a, c] : in_sum) nodes.insert(a);
    for (std::int64_t a : nodes) {
        std::int64_t net = out_sum[a] - in_sum[a];
        if (net != 0)
            rep.violations.push_back(
                {1, "configuration " + std::to_string(a) + ": net coefficient " +
                        std::to_string(net)});
    }
    for (const auto& [s, total] : per_gen) {
        if (total != 0)
            rep.violations.push_back(
                {2, "generator " + format_word({{m.generator_label(s), 1}}) +
                        ": coefficient sum " + std::to_string(total)});
    }
    // Group by (s, vertex, restricted chain).
    std::map<int, std::vector<std::pair<std::int64_t, std::int64_t>>> by_gen;
    for (const auto& [col, c] : v.coeffs) {
        auto [s, a] = m.theta_term(col);
        by_gen[s].emplace_back(a, c);
    }
    for (const auto& [s, terms] : by_gen) {
        for (int vert : m.generator_label(s).simplex.vertices) {
            std::map<std::string, std::int64_t> group_sum;
            for (const auto& [a, c] : terms) {
                Chain r = m.restrict_configuration(a, vert);
                std::string key;
                for (const auto& [sx, e] : r.coeffs) {
                    key += format_simplex(sx) + "=";
                    for (int x : e.residues) key += std::to_string(x) + ",";
                    key += ";";
                }
                group_sum[key] += c;
            }
            for (const auto& [key, total] : group_sum)
                if (total != 0)
                    rep.violations.push_back(
                        {3, "generator " +
                                format_word({{m.generator_label(s), 1}}) +
                                ", vertex " + std::to_string(vert) +
                                ", restriction {" + key + "}: sum " +
                                std::to_string(total)});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Witness extraction (Eulerian circuit over the configuration multigraph).
// ---------------------------------------------------------------------------

// Builds a word whose evaluation from the circuit's start reproduces v
// exactly.  Positive eps(s,a) becomes edges a -> a+ds labeled U(s); negative
// eps becomes reverse edges labeled U(s)^-1.  Disconnected components are
// joined with canceling U(s)/U(s)^-1 pairs along shortest transition paths,
// which leave the coefficient vector unchanged.
inline Word extract_sequence(const ExcitationModel& m, const ThetaVector& v) {
    if (v.is_zero()) return {};

    struct Edge {
        std::int64_t to;
        int s;
        int exp;
    };
    std::map<std::int64_t, std::vector<Edge>> adj;
    std::map<std::int64_t, std::int64_t> indeg;
    for (const auto& [col, c] : v.coeffs) {
        auto [s, a] = m.theta_term(col);
        std::int64_t b = m.step(s, a);
        if (c > 0) {
            for (std::int64_t k = 0; k < c; ++k) adj[a].push_back({b, s, +1});
            indeg[b] += c;
            indeg[a];  // ensure node exists
        } else {
            for (std::int64_t k = 0; k < -c; ++k) adj[b].push_back({a, s, -1});
            indeg[a] += -c;
            indeg[b];
        }
    }
    for (auto& [a, edges] : adj) indeg[a];
    for (const auto& [a, d] : indeg) {
        std::int64_t out = adj.count(a) ? static_cast<std::int64_t>(adj[a].size()) : 0;
        if (out != d)
            throw InvalidInputError(
                "coefficient vector is not a closed walk: configuration " +
                std::to_string(a) + " has out-degree " + std::to_string(out) +
                " but in-degree " + std::to_string(d));
    }

    // Connected components of the used nodes (undirected sense).
    std::vector<std::int64_t> nodes;
    for (const auto& [a, d] : indeg) nodes.push_back(a);
    std::map<std::int64_t, int> comp;
    {
        std::map<std::int64_t, std::vector<std::int64_t>> und;
        for (const auto& [a, edges] : adj)
            for (const auto& e : edges) {
                und[a].push_back(e.to);
                und[e.to].push_back(a);
            }
        int c = 0;
        for (std::int64_t start : nodes) {
            if (comp.count(start)) continue;
            std::deque<std::int64_t> q{start};
            comp[start] = c;
            while (!q.empty()) {
                std::int64_t cur = q.front();
                q.pop_front();
                for (std::int64_t nb : und[cur])
                    if (!comp.count(nb)) {
                        comp[nb] = c;
                        q.push_back(nb);
                    }
            }
            ++c;
        }
    }

    // Join every secondary component to the main set via BFS over the full
    // transition graph, inserting canceling U(s)/U(s)^-1 edge pairs.
    std::set<std::int64_t> main_set;
    int main_comp = comp[nodes.front()];
    for (std::int64_t a : nodes)
        if (comp[a] == main_comp) main_set.insert(a);
    std::set<int> remaining;
    for (std::int64_t a : nodes)
        if (comp[a] != main_comp) remaining.insert(comp[a]);
    for (int target : remaining) {
        std::set<std::int64_t> goal;
        for (std::int64_t a : nodes)
            if (comp[a] == target) goal.insert(a);
        // Multi-source BFS from main_set to goal.
        std::map<std::int64_t, std::pair<std::int64_t, int>> parent;  // node -> (prev, s)
        std::deque<std::int64_t> q;
        for (std::int64_t a : main_set) {
            parent[a] = {-1, -1};
            q.push_back(a);
        }
        std::int64_t found = -1;
        while (!q.empty() && found < 0) {
            std::int64_t cur = q.front();
            q.pop_front();
            if (goal.count(cur)) { found = cur; break; }
            for (int s = 0; s < m.num_generators() && found < 0; ++s) {
                std::int64_t nxt = m.step(s, cur);
                if (!parent.count(nxt)) {
                    parent[nxt] = {cur, s};
                    if (goal.count(nxt)) { found = nxt; break; }
                    q.push_back(nxt);
                }
            }
        }
        if (found < 0)
            throw InvalidInputError("configuration graph is not connected");
        // Walk back along the path, adding canceling pairs.
        std::int64_t cur = found;
        while (parent[cur].first >= 0) {
            auto [prev, s] = parent[cur];
            adj[prev].push_back({cur, s, +1});
            adj[cur].push_back({prev, s, -1});
            indeg[cur] += 1;
            indeg[prev] += 1;
            main_set.insert(cur);
            main_set.insert(prev);
            cur = prev;
        }
        for (std::int64_t a : goal) main_set.insert(a);
    }

    // Deterministic edge order, then Hierholzer's algorithm.
    for (auto& [a, edges] : adj)
        std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
            if (x.s != y.s) return x.s < y.s;
            if (x.exp != y.exp) return x.exp > y.exp;
            return x.to < y.to;
        });
    std::map<std::int64_t, std::size_t> next_edge;
    // Start at the lowest configuration touched by v itself (joining-path
    // nodes excluded) so evaluation from extract_start reproduces v.
    std::int64_t start = *std::min_element(nodes.begin(), nodes.end());

    std::vector<Edge> circuit;
    std::vector<std::pair<std::int64_t, std::size_t>> stack;  // (node, edges taken)
    std::vector<Edge> path_edges;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
        std::int64_t cur = stack.back().first;
        auto& ptr = next_edge[cur];
        if (ptr < adj[cur].size()) {
            const Edge& e = adj[cur][ptr++];
            stack.emplace_back(e.to, 0);
            path_edges.push_back(e);
        } else {
            stack.pop_back();
            if (!path_edges.empty() && !stack.empty()) {
                circuit.push_back(path_edges.back());
                path_edges.pop_back();
            }
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    std::size_t total_edges = 0;
    for (const auto& [a, edges] : adj) total_edges += edges.size();
    if (circuit.size() != total_edges)
        throw InvalidInputError("Eulerian circuit did not cover all steps");

    // Words apply right-to-left, so the first traversed edge goes last.
    Word w;
    w.reserve(circuit.size());
    for (auto it = circuit.rbegin(); it != circuit.rend(); ++it)
        w.push_back({m.generator_label(it->s), it->exp});
    return w;
}

// Start configuration of the circuit produced by extract_sequence.
inline std::int64_t extract_start(const ExcitationModel& m,
                                  const ThetaVector& v) {
    std::int64_t start = std::numeric_limits<std::int64_t>::max();
    for (const auto& [col, c] : v.coeffs) {
        auto [s, a] = m.theta_term(col);
        start = std::min({start, a, m.step(s, a)});
    }
    return start == std::numeric_limits<std::int64_t>::max() ? 0 : start;
}

// ---------------------------------------------------------------------------
// Statistics computation.
// ---------------------------------------------------------------------------

struct StatisticsFactor {
    Int order;                   // a_ii, >= 2
    int diag_index = 0;          // position in the Smith diagonal
    ThetaVector representative;  // row of R, first nonzero positive
    Word witness;                // may be empty when witnesses are skipped
};

struct StatisticsComputation {
    SmithDecomposition decomp;           // of the identity-row HNF
    SparseIntMatrix hnf;                 // canonical HNF of identity rows
    std::vector<Combination> hnf_provenance;  // HNF row -> basis rows
    std::vector<SparseRow> basis_rows;   // identity rows that grew the span
    std::vector<StatisticsFactor> factors;
    std::int64_t free_rank = 0;          // columns minus matrix rank
    bool saturated = true;               // false when the row budget truncated
    std::int64_t rows_streamed = 0;
};

namespace detail {

// Flip the sign of diagonal index i consistently across R, R^-1, L, L^-1.
inline void negate_smith_index(SmithDecomposition& d, int i) {
    for (auto& x : d.r[i]) x = -x;
    for (auto& row : d.r_inv) row[i] = -row[i];
    if (d.has_l && i < d.rows) {
        for (auto& row : d.l) row[i] = -row[i];
        for (auto& x : d.l_inv[i]) x = -x;
    }
}

template <class T>
StatisticsComputation compute_statistics_core(
    const ExcitationModel& m,
    const std::function<bool(const std::function<void(SparseRow&&)>&)>& stream) {
    if (m.theta_columns() > std::numeric_limits<std::int32_t>::max())
        throw ResourceLimitError("theta index space exceeds 2^31 columns");
    int cols = static_cast<int>(m.theta_columns());
    BasicHnfBuilder<T> builder(cols, /*track_provenance=*/true);
    StatisticsComputation out;
    bool exhausted = stream([&](SparseRow&& row) {
        ++out.rows_streamed;
        if (builder.insert(row)) out.basis_rows.push_back(std::move(row));
    });
    out.saturated = !exhausted;
    builder.canonicalize();
    out.hnf = builder.matrix();
    for (int i = 0; i < builder.rank(); ++i)
        out.hnf_provenance.push_back(builder.provenance(i));
    out.decomp = snf(out.hnf, /*with_l=*/true);
    out.free_rank = cols - builder.rank();
    for (int i = 0; i < static_cast<int>(out.decomp.diag.size()); ++i) {
        if (out.decomp.diag[i] == 0 || out.decomp.diag[i] == 1) continue;
        // Normalize: first nonzero coefficient of the representative positive.
        const auto& row = out.decomp.r[i];
        for (const auto& x : row) {
            if (x == 0) continue;
            if (x < 0) negate_smith_index(out.decomp, i);
            break;
        }
        StatisticsFactor f;
        f.order = out.decomp.diag[i];
        f.diag_index = i;
        SparseRow rep;
        for (int j = 0; j < cols; ++j)
            if (out.decomp.r[i][j] != 0) rep.emplace_back(j, out.decomp.r[i][j]);
        f.representative = theta_from_row(rep);
        out.factors.push_back(std::move(f));
    }
    return out;
}

}  // namespace detail

// Computes the statistics group from streamed locality-identity rows.
// Witness words are not built here; see minimize_sequence / extract_sequence.
inline StatisticsComputation compute_statistics(const ExcitationModel& m,
                                                int depth,
                                                std::int64_t row_budget) {
    auto stream = [&](const std::function<void(SparseRow&&)>& emit) {
        return for_each_identity_row(m, depth, row_budget, emit);
    };
    try {
        return detail::compute_statistics_core<std::int64_t>(m, stream);
    } catch (const detail::OverflowAbort&) {
        return detail::compute_statistics_core<Int>(m, stream);
    }
}

// Materialized-row variant (small models, tests).
inline StatisticsComputation compute_statistics(
    const ExcitationModel& m, const std::vector<ThetaVector>& rows,
    bool saturated = true) {
    auto stream = [&](const std::function<void(SparseRow&&)>& emit) {
        for (const auto& r : rows) emit(theta_to_row(r));
        return false;
    };
    StatisticsComputation out;
    try {
        out = detail::compute_statistics_core<std::int64_t>(m, stream);
    } catch (const detail::OverflowAbort&) {
        out = detail::compute_statistics_core<Int>(m, stream);
    }
    out.saturated = saturated;
    return out;
}

inline std::vector<ClassCoordinate> classify_vector(
    const StatisticsComputation& c, const ThetaVector& v) {
    return classify(c.decomp, theta_to_row(v));
}

// ---------------------------------------------------------------------------
// Witness minimization.
// ---------------------------------------------------------------------------

struct MinimizeResult {
    Word word;
    ThetaVector vector;
    std::int64_t l1 = 0;                 // theta L1 of the final vector
    bool exact_enumeration_used = false; // orientation enumeration ran
    std::int64_t candidates_checked = 0;
    bool budget_exhausted = false;
};

namespace detail {

inline bool row_lex_less(const SparseRow& a, const SparseRow& b) {
    return a < b;
}

// Merge cand + scale*other into sorted zero-free form.
inline SparseRow row_merge(const SparseRow& a, const Int& scale,
                           const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
        if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
            out.push_back(a[x++]);
        } else if (x == a.size() || b[y].first < a[x].first) {
            Int v = scale * b[y].second;
            if (v != 0) out.emplace_back(b[y].first, std::move(v));
            ++y;
        } else {
            Int s = a[x].second + scale * b[y].second;
            if (s != 0) out.emplace_back(a[x].first, std::move(s));
            ++x;
            ++y;
        }
    }
    return out;
}

}  // namespace detail

// Searches v plus integer combinations of identity rows for a shorter
// executable witness.  The objective is the realized word length (theta L1
// plus the steps needed to join disconnected circuit components), with
// (L1, lexicographic) tie-breaks for determinism.  Two stages: orientation
// enumeration over the up-to-max_exact largest contributing basis rows
// (2^k candidates, the restricted search space), then greedy descent over
// +-1 multiples of canonical identity-matrix rows.  The result is never
// worse than the input.
inline MinimizeResult minimize_sequence(const ExcitationModel& m,
                                        const ThetaVector& v,
                                        const StatisticsComputation& c,
                                        std::int64_t budget = 1 << 20,
                                        int max_exact = 15) {
    MinimizeResult res;
    SparseRow best = theta_to_row(v);
    auto word_len = [&](const SparseRow& row) -> std::int64_t {
        return static_cast<std::int64_t>(
            extract_sequence(m, theta_from_row(row)).size());
    };
    Int best_l1 = row_l1(best);
    std::int64_t best_len = v.is_zero() ? 0 : word_len(best);
    std::int64_t checked = 0;

    auto consider = [&](const SparseRow& cand) {
        ++checked;
        Int l1 = row_l1(cand);
        if (l1 > best_len) return false;  // word length is at least L1
        if (cand.empty()) return false;   // the zero vector is not a witness
        std::int64_t len = word_len(cand);
        if (len < best_len || (len == best_len && l1 < best_l1) ||
            (len == best_len && l1 == best_l1 &&
             detail::row_lex_less(cand, best))) {
            best = cand;
            best_l1 = l1;
            best_len = len;
            return true;
        }
        return false;
    };

    // Orientation enumeration: decompose v over the basis rows and flip the
    // orientation (sign) of the k largest contributors exhaustively.
    {
        HnfBuilder span(c.hnf.cols);
        for (const auto& r : c.hnf.rows) span.insert(r);
        std::vector<Int> coeffs;
        span.reduce(theta_to_row(v), &coeffs);
        Combination contrib;  // basis row id -> coefficient
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            auto it = c.hnf_provenance.begin() + static_cast<std::ptrdiff_t>(i);
            for (const auto& [basis_id, pv] : *it) {
                Int& t = contrib[basis_id];
                t += coeffs[i] * pv;
                if (t == 0) contrib.erase(basis_id);
            }
        }
        std::vector<std::pair<std::int32_t, Int>> items(contrib.begin(),
                                                        contrib.end());
        if (static_cast<int>(items.size()) > max_exact) {
            // Keep the largest |coefficient| contributors (stable by id).
            std::stable_sort(items.begin(), items.end(),
                             [](const auto& a, const auto& b) {
                                 return detail::t_abs(a.second) >
                                        detail::t_abs(b.second);
                             });
            items.resize(max_exact);
        }
        int k = static_cast<int>(items.size());
        if (k > 0 && (std::int64_t(1) << k) <= budget) {
            res.exact_enumeration_used = true;
            SparseRow base = theta_to_row(v);
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k);
                 ++mask) {
                SparseRow cand = base;
                for (int j = 0; j < k; ++j)
                    if (mask & (std::uint64_t(1) << j)) {
                        // Flip: subtract twice this row's contribution.
                        cand = detail::row_merge(
                            cand, Int(-2) * items[j].second,
                            c.basis_rows[items[j].first]);
                    }
                consider(cand);
            }
        }
    }

    // Greedy descent over +-1 multiples of canonical HNF rows.
    bool improved = true;
    while (improved && checked < budget) {
        improved = false;
        SparseRow round_start = best;
        for (const auto& h : c.hnf.rows) {
            for (int sign : {+1, -1}) {
                if (consider(detail::row_merge(round_start, Int(sign), h)))
                    improved = true;
                if (checked >= budget) break;
            }
            if (checked >= budget) break;
        }
    }

    res.budget_exhausted = checked >= budget;
    res.candidates_checked = checked;
    res.vector = theta_from_row(best);
    res.l1 = theta_l1(res.vector);
    res.word = extract_sequence(m, res.vector);
    return res;
}

}  // namespace genstat

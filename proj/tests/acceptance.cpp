// Acceptance gate: one pass/fail line per criterion, non-zero exit on any
// failure.  Each criterion also enforces its wall-clock budget.
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "genstat/extractor.hpp"
#include "genstat/synthmodel.hpp"
#include "genstat/witnesses.hpp"

using namespace genstat;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    }
};

void report(int criterion, bool ok, const std::string& detail, double secs) {
    std::ostringstream line;
    line << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " — "
         << detail << " (" << static_cast<int>(secs) << "s)";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

struct Check {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

// Registry of computed cases reused by the property criteria 8-10.
struct ComputedCase {
    std::string name;
    ExcitationModel model;
    StatisticsComputation stats;
};
std::vector<ComputedCase> registry;

// Torsion coordinates of a classification as (order, value) pairs.
std::vector<std::pair<Int, Int>> torsion(
    const std::vector<ClassCoordinate>& cls) {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& c : cls)
        if (c.order > 1) out.emplace_back(c.order, c.value);
    return out;
}

bool hits_generator(const StatisticsComputation& c, const ThetaVector& v,
                    const Int& order) {
    auto t = torsion(classify_vector(c, v));
    if (t.size() != 1) return false;
    return t[0].first == order &&
           boost::multiprecision::gcd(t[0].second, order) == 1;
}

std::vector<Int> orders_of(const StatisticsComputation& c) {
    std::vector<Int> out;
    for (const auto& f : c.factors) out.push_back(f.order);
    return out;
}

std::string orders_text(const std::vector<Int>& orders) {
    if (orders.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        s += (i ? " x Z" : "Z");
        std::ostringstream os;
        os << orders[i];
        s += os.str();
    }
    return s;
}

ComputedCase compute_case(const std::string& name, int d, int p,
                          std::vector<int> group_orders) {
    auto m = build_model(minimal_sphere_triangulation(d),
                         make_group(std::move(group_orders)), p);
    auto c = compute_statistics(m, default_identity_depth(d, p), 200'000'000);
    return ComputedCase{name, std::move(m), std::move(c)};
}

void criterion1() {
    Timer t;
    Check ck;
    for (int n = 2; n <= 5 && ck.ok; ++n) {
        Timer per;
        auto cc = compute_case("d2p0 Z" + std::to_string(n), 2, 0, {n});
        Int expect = Int(std::gcd(2, n)) * n;
        ck.expect(cc.stats.saturated, "not saturated N=" + std::to_string(n));
        ck.expect(orders_of(cc.stats) == std::vector<Int>{expect},
                  "group mismatch N=" + std::to_string(n) + ": got " +
                      orders_text(orders_of(cc.stats)));
        auto [v, fin] = evaluate_word(cc.model, t_junction_word(), 0);
        ck.expect(fin == 0, "exchange word not closed");
        ck.expect(hits_generator(cc.stats, v, expect),
                  "exchange word misses a generator, N=" + std::to_string(n));
        ck.expect(per.seconds() < 300,
                  "over 5 min for N=" + std::to_string(n));
        registry.push_back(std::move(cc));
    }
    report(1, ck.ok,
           ck.ok ? "2d particles Z2..Z5: T = Z_{gcd(2,N)N}, exchange word hits "
                   "a generator"
                 : ck.detail,
           t.seconds());
}

void criterion2() {
    Timer t;
    Check ck;
    for (int n = 2; n <= 4 && ck.ok; ++n) {
        Timer per;
        auto cc = compute_case("d3p0 Z" + std::to_string(n), 3, 0, {n});
        std::vector<Int> expect;
        if (std::gcd(2, n) > 1) expect.push_back(std::gcd(2, n));
        ck.expect(cc.stats.saturated, "not saturated N=" + std::to_string(n));
        ck.expect(orders_of(cc.stats) == expect,
                  "group mismatch N=" + std::to_string(n) + ": got " +
                      orders_text(orders_of(cc.stats)));
        ck.expect(per.seconds() < 600,
                  "over 10 min for N=" + std::to_string(n));
        // The N=4 decomposition is large; keep only the small models for the
        // property criteria.
        if (n <= 3) registry.push_back(std::move(cc));
    }
    report(2, ck.ok,
           ck.ok ? "3d particles Z2..Z4: T = Z_{gcd(2,N)}" : ck.detail,
           t.seconds());
}

void criterion3() {
    Timer t;
    Check ck;
    for (int n = 2; n <= 4 && ck.ok; ++n) {
        Timer per;
        auto cc = compute_case("d1p0 Z" + std::to_string(n), 1, 0, {n});
        ck.expect(cc.stats.saturated, "not saturated N=" + std::to_string(n));
        ck.expect(orders_of(cc.stats) == std::vector<Int>{Int(n)},
                  "group mismatch N=" + std::to_string(n) + ": got " +
                      orders_text(orders_of(cc.stats)));
        auto [v, fin] = evaluate_word(cc.model, particle_fusion_word(n), 0);
        ck.expect(fin == 0, "fusion word not closed");
        ck.expect(hits_generator(cc.stats, v, Int(n)),
                  "fusion word misses a generator, N=" + std::to_string(n));
        ck.expect(per.seconds() < 60, "over 1 min for N=" + std::to_string(n));
        registry.push_back(std::move(cc));
    }
    report(3, ck.ok,
           ck.ok ? "1d particles Z2..Z4: T = Z_N, fusion word hits a generator"
                 : ck.detail,
           t.seconds());
}

void criterion4() {
    Timer t;
    Check ck;
    auto cc = compute_case("d3p1 Z2", 3, 1, {2});
    ck.expect(cc.stats.saturated, "not saturated");
    ck.expect(orders_of(cc.stats) == std::vector<Int>{Int(2)},
              "group mismatch: got " + orders_text(orders_of(cc.stats)));
    auto [v24, fin] = evaluate_word(cc.model, loop_flip_word(), 0);
    ck.expect(fin == 0, "24-step word not closed");
    ck.expect(v24.coeffs.size() > 0 && theta_l1(v24) == 24, "24-step L1 off");
    ck.expect(hits_generator(cc.stats, v24, Int(2)),
              "24-step word misses the generator");
    if (ck.ok) {
        // Minimizing the representative reaches a 24-step word.
        auto rmin = minimize_sequence(cc.model,
                                      cc.stats.factors[0].representative,
                                      cc.stats, 1 << 20, 15);
        ck.expect(static_cast<int>(rmin.word.size()) == 24,
                  "representative minimizes to " +
                      std::to_string(rmin.word.size()) + " steps");
        // Orientation enumeration over 2^15 candidates around the published
        // process finds nothing shorter in that restricted space.
        auto wmin = minimize_sequence(cc.model, v24, cc.stats, 1 << 20, 15);
        ck.expect(wmin.exact_enumeration_used,
                  "orientation enumeration did not run");
        ck.expect(wmin.candidates_checked >= (1 << 15),
                  "fewer than 2^15 candidates");
        ck.expect(static_cast<int>(wmin.word.size()) == 24,
                  "found a shorter witness in the restricted space: " +
                      std::to_string(wmin.word.size()));
        ck.expect(hits_generator(cc.stats, wmin.vector, Int(2)),
                  "minimized witness left the class");
    }
    ck.expect(t.seconds() < 900, "over 15 min");
    registry.push_back(std::move(cc));
    report(4, ck.ok,
           ck.ok ? "3d loops Z2: T = Z2, minimal 24-step witness confirmed "
                   "over 2^15 orientations"
                 : ck.detail,
           t.seconds());
}

void criterion5() {
    Timer t;
    Check ck;
    auto c1 = compute_case("d2p1 Z2", 2, 1, {2});
    ck.expect(c1.stats.saturated && c1.stats.factors.empty(),
              "Z2 loops should be trivial, got " +
                  orders_text(orders_of(c1.stats)));
    registry.push_back(std::move(c1));
    auto c2 = compute_case("d2p1 Z2xZ2", 2, 1, {2, 2});
    ck.expect(orders_of(c2.stats) == std::vector<Int>{Int(2), Int(2)},
              "Z2xZ2 loops mismatch: got " + orders_text(orders_of(c2.stats)));
    if (ck.ok) {
        // The two fusion words classify to independent generators: their
        // torsion coordinate vectors span (Z2)^2.
        auto [va, fa] = evaluate_word(c2.model, loop_fusion_word(2, 0, 1), 0);
        auto [vb, fb] = evaluate_word(c2.model, loop_fusion_word(2, 1, 0), 0);
        ck.expect(fa == 0 && fb == 0, "fusion words not closed");
        auto ta = torsion(classify_vector(c2.stats, va));
        auto tb = torsion(classify_vector(c2.stats, vb));
        ck.expect(ta.size() == 2 && tb.size() == 2, "coordinate count");
        if (ta.size() == 2 && tb.size() == 2) {
            // Independence over Z2: the 2x2 coordinate matrix is invertible.
            Int det = ta[0].second * tb[1].second -
                      ta[1].second * tb[0].second;
            ck.expect(det % 2 != 0, "fusion words are not independent");
        }
    }
    ck.expect(t.seconds() < 900, "over 15 min");
    registry.push_back(std::move(c2));
    report(5, ck.ok,
           ck.ok ? "2d loops: Z2 trivial; Z2xZ2 gives Z2 x Z2 with "
                   "independent fusion witnesses"
                 : ck.detail,
           t.seconds());
}

void criterion6() {
    Timer t;
    Check ck;
    for (int n = 2; n <= 3 && ck.ok; ++n) {
        Timer per;
        auto cc = compute_case("d3p2 Z" + std::to_string(n), 3, 2, {n});
        ck.expect(cc.stats.saturated, "not saturated N=" + std::to_string(n));
        bool has_zn = false;
        for (const auto& f : cc.stats.factors)
            if (f.order == n) has_zn = true;
        ck.expect(has_zn, "no Z_" + std::to_string(n) + " factor, got " +
                              orders_text(orders_of(cc.stats)));
        auto [v, fin] = evaluate_word(cc.model, membrane_fusion_word(n), 0);
        ck.expect(fin == 0, "membrane word not closed");
        ck.expect(hits_generator(cc.stats, v, Int(n)),
                  "membrane word misses a generator, N=" + std::to_string(n));
        ck.expect(per.seconds() < 1200,
                  "over 20 min for N=" + std::to_string(n));
        registry.push_back(std::move(cc));
    }
    report(6, ck.ok,
           ck.ok ? "3d membranes Z2,Z3: T contains Z_N, fusion word hits a "
                   "generator"
                 : ck.detail,
           t.seconds());
}

void criterion7() {
    Timer t;
    Check ck;
    SparseIntMatrix m;
    m.cols = 3;
    m.rows = {{{0, 1}, {1, 2}, {2, 3}},
              {{0, 4}, {1, 5}, {2, 6}},
              {{0, 7}, {1, 8}, {2, 9}}};
    auto d = snf(m, true);
    ck.expect(d.diag == std::vector<Int>{1, 3, 0},
              "diagonal is not (1,3,0)");
    SparseRow v{{1, 1}, {2, 2}};  // (0,1,2)
    int hits = 0;
    for (const auto& coord : classify(d, v)) {
        if (coord.order == 3) {
            ++hits;
            ck.expect(coord.value == 1 || coord.value == 2,
                      "coordinate not a Z3 generator");
        }
    }
    ck.expect(hits == 1, "expected exactly one Z3 coordinate");
    report(7, ck.ok,
           ck.ok ? "toy matrix gives diag(1,3,0); (0,1,2) is a Z3 generator"
                 : ck.detail,
           t.seconds());
}

void criterion8() {
    Timer t;
    Check ck;
    for (const auto& cc : registry) {
        // All retained identity rows are invariant.
        for (const auto& row : cc.stats.basis_rows)
            ck.expect(verify_invariance(cc.model, theta_from_row(row)).ok(),
                      cc.name + ": basis identity row not invariant");
        HnfBuilder span(cc.stats.hnf.cols);
        for (const auto& r : cc.stats.hnf.rows) span.insert(r);
        for (const auto& f : cc.stats.factors) {
            ck.expect(verify_invariance(cc.model, f.representative).ok(),
                      cc.name + ": representative not invariant");
            SparseRow rep = theta_to_row(f.representative);
            // order * rep lies in the identity span; smaller multiples don't.
            for (Int j = 1; j <= f.order; ++j) {
                SparseRow scaled;
                for (const auto& [col, val] : rep)
                    scaled.emplace_back(col, j * val);
                bool inside = span.in_span(scaled);
                if (j == f.order)
                    ck.expect(inside, cc.name + ": order*rep not in span");
                else
                    ck.expect(!inside,
                              cc.name + ": premature multiple in span");
            }
        }
        if (!ck.ok) break;
    }
    report(8, ck.ok,
           ck.ok ? "invariance and exact order verified for every computed "
                   "representative (" +
                       std::to_string(registry.size()) + " models)"
                 : ck.detail,
           t.seconds());
}

void criterion9() {
    Timer t;
    Check ck;
    const double tol = 1e-9;
    for (const auto& cc : registry) {
        if (cc.stats.factors.empty()) continue;
        std::int64_t na = cc.model.num_configs();
        for (const auto& f : cc.stats.factors) {
            for (Int k = 0; k < f.order && ck.ok; ++k) {
                std::map<int, Int> choice{{f.diag_index, k}};
                auto p = sample_assignment(cc.model, cc.stats.decomp, choice,
                                           1234 + k.convert_to<unsigned>());
                double got = evaluate(p, f.representative);
                double want =
                    kTwoPi * k.convert_to<double>() /
                    f.order.convert_to<double>();
                ck.expect(angle_distance(got, want) < tol,
                          cc.name + ": representative phase off");
                // Identity rows evaluate to zero phase.
                for (std::size_t i = 0;
                     i < cc.stats.basis_rows.size() && i < 50; ++i)
                    ck.expect(angle_distance(
                                  evaluate(p, theta_from_row(
                                                  cc.stats.basis_rows[i])),
                                  0.0) < tol,
                              cc.name + ": identity row phase nonzero");
                // Quantization: |A| * Theta is a multiple of 2*pi.
                ck.expect(angle_distance(static_cast<double>(na) * got, 0.0) <
                              static_cast<double>(na) * tol,
                          cc.name + ": quantization violated");
            }
        }
        // 100 random deformations of each kind leave the class phase alone.
        const auto& f0 = cc.stats.factors[0];
        std::map<int, Int> choice{{f0.diag_index, Int(1)}};
        auto p = sample_assignment(cc.model, cc.stats.decomp, choice, 777);
        double base = evaluate(p, f0.representative);
        std::mt19937_64 rng(2718);
        for (int trial = 0; trial < 100 && ck.ok; ++trial) {
            for (auto kind :
                 {DeformKind::kStatePhase, DeformKind::kUnitaryPhase,
                  DeformKind::kLocalVertex}) {
                auto q = deform(cc.model, p, kind, rng);
                ck.expect(
                    angle_distance(evaluate(q, f0.representative), base) < tol,
                    cc.name + ": deformation moved the class phase");
                if (!ck.ok) break;
            }
        }
        if (!ck.ok) break;
    }
    report(9, ck.ok,
           ck.ok ? "sampled assignments realize 2*pi*k/order and survive 300 "
                   "deformations per model"
                 : ck.detail,
           t.seconds());
}

void criterion10() {
    Timer t;
    Check ck;
    for (const auto& cc : registry) {
        auto roundtrip = [&](const ThetaVector& v) {
            Word w = extract_sequence(cc.model, v);
            std::int64_t a0 = extract_start(cc.model, v);
            auto [theta, fin] = evaluate_word(cc.model, w, a0);
            return theta == v && fin == a0;
        };
        for (const auto& f : cc.stats.factors)
            ck.expect(roundtrip(f.representative),
                      cc.name + ": representative does not round-trip");
        std::mt19937_64 rng(31415);
        int done = 0;
        for (int trial = 0; trial < 200 && done < 50; ++trial) {
            ThetaVector v;
            for (int j = 0; j < 4; ++j) {
                const auto& row = cc.stats.basis_rows[rng() %
                                                      cc.stats.basis_rows.size()];
                v = theta_add(v, theta_scale(theta_from_row(row),
                                             static_cast<int>(rng() % 5) - 2));
            }
            if (!cc.stats.factors.empty() && trial % 2) {
                const auto& f =
                    cc.stats.factors[rng() % cc.stats.factors.size()];
                v = theta_add(v, f.representative);
            }
            if (v.is_zero()) continue;
            ++done;
            ck.expect(roundtrip(v), cc.name + ": random vector round-trip");
            if (!ck.ok) break;
        }
        ck.expect(done == 50, cc.name + ": too few random vectors");
        if (!ck.ok) break;
    }
    report(10, ck.ok,
           ck.ok ? "witness extraction round-trips representatives and 50 "
                   "random invariant vectors per model"
                 : ck.detail,
           t.seconds());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "genstat/extractor.hpp"
#include "genstat/linalg.hpp"
#include "genstat/model.hpp"

namespace genstat {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// An explicit real phase for every theta symbol, consistent with all
// locality identities by construction.
struct PhaseAssignment {
    std::vector<double> theta;    // indexed by theta column
    std::uint64_t seed = 0;
    std::map<int, Int> class_choice;  // torsion diagonal index -> k_i
};

namespace detail {

inline double reduce_angle(long double x) {
    long double r = std::fmod(x, static_cast<long double>(kTwoPi));
    if (r < 0) r += kTwoPi;
    return static_cast<double>(r);
}

// (coef * angle) mod 2pi, with the integer coefficient reduced first so that
// large transform entries do not destroy precision for rational angles.
inline long double scaled_angle(const Int& coef, long double angle) {
    Int c = coef;
    // angle is a multiple of 2pi/denom for torsion coordinates; the caller
    // pre-reduces c in that case.  Here we only guard the magnitude.
    long double cf = static_cast<long double>(c.convert_to<double>());
    return std::fmod(cf * angle, static_cast<long double>(kTwoPi));
}

}  // namespace detail

// Builds theta = R^-1 * phi where phi has the prescribed rational values at
// torsion coordinates, zero at unit coordinates, and uniform random values
// at free coordinates.
inline PhaseAssignment sample_assignment(const ExcitationModel& m,
                                         const SmithDecomposition& d,
                                         const std::map<int, Int>& class_choice,
                                         std::uint64_t seed) {
    if (d.cols != m.theta_columns())
        throw InvalidInputError("decomposition does not match the model");
    for (const auto& [i, k] : class_choice) {
        Int a = d.diag_at(i);
        if (a == 0 || a == 1)
            throw InvalidInputError("class choice at non-torsion index " +
                                    std::to_string(i));
        if (k < 0 || k >= a)
            throw InvalidInputError("class choice out of range at index " +
                                    std::to_string(i));
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);

    int cols = d.cols;
    std::vector<long double> phi(cols, 0.0L);
    std::vector<bool> torsion(cols, false);
    std::vector<Int> denom(cols, 0), numer(cols, 0);
    for (int i = 0; i < cols; ++i) {
        Int a = d.diag_at(i);
        if (a == 0) {
            phi[i] = uni(rng);
        } else if (a >= 2) {
            torsion[i] = true;
            denom[i] = a;
            auto it = class_choice.find(i);
            numer[i] = it == class_choice.end() ? Int(0) : it->second;
        }
    }

    PhaseAssignment out;
    out.seed = seed;
    out.class_choice = class_choice;
    out.theta.resize(cols, 0.0);
    for (int j = 0; j < cols; ++j) {
        long double acc = 0.0L;
        for (int i = 0; i < cols; ++i) {
            const Int& coef = d.r_inv[j][i];
            if (coef == 0) continue;
            if (torsion[i]) {
                if (numer[i] == 0) continue;
                // coef * 2pi * k / a  ==  2pi * ((coef*k) mod a) / a  (mod 2pi)
                Int t = coef * numer[i] % denom[i];
                if (t < 0) t += denom[i];
                acc += static_cast<long double>(kTwoPi) *
                       t.convert_to<long double>() /
                       denom[i].convert_to<long double>();
            } else if (phi[i] != 0.0L) {
                acc += detail::scaled_angle(coef, phi[i]);
            }
            acc = std::fmod(acc, static_cast<long double>(kTwoPi));
        }
        out.theta[j] = detail::reduce_angle(acc);
    }
    return out;
}

// Sum of eps(s,a) * theta(s,a), reduced into [0, 2pi).
inline double evaluate(const PhaseAssignment& p, const ThetaVector& v) {
    long double acc = 0.0L;
    for (const auto& [col, c] : v.coeffs) {
        acc += static_cast<long double>(c) *
               static_cast<long double>(p.theta[col]);
        acc = std::fmod(acc, static_cast<long double>(kTwoPi));
    }
    return detail::reduce_angle(acc);
}

inline double evaluate(const ExcitationModel& m, const PhaseAssignment& p,
                       const Word& w, std::int64_t a0 = 0) {
    return evaluate(p, evaluate_word(m, w, a0).first);
}

enum class DeformKind { kStatePhase, kUnitaryPhase, kLocalVertex };

// Applies one of the three invariance-defining shifts with random data:
//   state-phase:   theta(s,a) += -phi(a) + phi(a + ds)
//   unitary-phase: theta(s,a) += psi(s)
//   local-vertex:  theta(s,a) += phi_{s,v}(a restricted to vertex v)
inline PhaseAssignment deform(const ExcitationModel& m,
                              const PhaseAssignment& p, DeformKind kind,
                              std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);
    PhaseAssignment out = p;
    std::int64_t na = m.num_configs();
    int ns = m.num_generators();
    switch (kind) {
        case DeformKind::kStatePhase: {
            std::vector<double> phi(na);
            for (auto& x : phi) x = uni(rng);
            for (int s = 0; s < ns; ++s)
                for (std::int64_t a = 0; a < na; ++a) {
                    double d = -phi[a] + phi[m.step(s, a)];
                    out.theta[m.theta_column(s, a)] = detail::reduce_angle(
                        static_cast<long double>(out.theta[m.theta_column(s, a)]) + d);
                }
            break;
        }
        case DeformKind::kUnitaryPhase: {
            for (int s = 0; s < ns; ++s) {
                double psi = uni(rng);
                for (std::int64_t a = 0; a < na; ++a)
                    out.theta[m.theta_column(s, a)] = detail::reduce_angle(
                        static_cast<long double>(out.theta[m.theta_column(s, a)]) + psi);
            }
            break;
        }
        case DeformKind::kLocalVertex: {
            for (int s = 0; s < ns; ++s) {
                for (int vert : m.generator_label(s).simplex.vertices) {
                    std::map<std::string, double> table;
                    for (std::int64_t a = 0; a < na; ++a) {
                        Chain r = m.restrict_configuration(a, vert);
                        std::string key;
                        for (const auto& [sx, e] : r.coeffs) {
                            key += format_simplex(sx) + "=";
                            for (int x : e.residues)
                                key += std::to_string(x) + ",";
                            key += ";";
                        }
                        auto it = table.find(key);
                        if (it == table.end())
                            it = table.emplace(key, uni(rng)).first;
                        out.theta[m.theta_column(s, a)] = detail::reduce_angle(
                            static_cast<long double>(
                                out.theta[m.theta_column(s, a)]) + it->second);
                    }
                }
            }
            break;
        }
    }
    return out;
}

// Absolute distance from the nearest multiple of 2pi.
inline double angle_distance(double x, double y) {
    double d = std::fmod(std::fabs(x - y), kTwoPi);
    return std::min(d, kTwoPi - d);
}

}  // namespace genstat

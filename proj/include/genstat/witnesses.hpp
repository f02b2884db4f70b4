#pragma once

#include <vector>

#include "genstat/model.hpp"

namespace genstat {

// Reference detection sequences for small-dimensional cases, written in
// operator-product notation: the leftmost factor is applied last.

namespace detail {

inline Word one(int gen, std::initializer_list<int> verts, int exp = 1) {
    return {{GeneratorLabel{gen, make_simplex(std::vector<int>(verts))}, exp}};
}

inline Word cat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace detail

// Particle fusion statistics on a segment: [U(g)_01^N, U(g)_02] with N the
// order of the hopped generator.
inline Word particle_fusion_word(int order, int gen = 0) {
    using detail::one;
    return commutator_word({repeat_word(one(gen, {0, 1}), order),
                            one(gen, {0, 2})});
}

// Particle exchange: U_02 U_03^-1 U_01 U_02^-1 U_03 U_01^-1.
inline Word t_junction_word(int gen = 0) {
    using detail::cat;
    using detail::one;
    return cat({one(gen, {0, 2}), one(gen, {0, 3}, -1), one(gen, {0, 1}),
                one(gen, {0, 2}, -1), one(gen, {0, 3}), one(gen, {0, 1}, -1)});
}

// Loop fusion in two spatial dimensions for G with two order-N generators:
//   (U(a)_023 U(a)_013)^-N
//   ( U(a)_023 U(a)_013 [U(a)_013, [U(a)_012,
//       U(b)_012 U(b)_013 U(b)_023 U(b)_123]] )^N
inline Word loop_fusion_word(int order, int gen_a, int gen_b) {
    using detail::cat;
    using detail::one;
    Word pair = cat({one(gen_a, {0, 2, 3}), one(gen_a, {0, 1, 3})});
    Word big_b = cat({one(gen_b, {0, 1, 2}), one(gen_b, {0, 1, 3}),
                      one(gen_b, {0, 2, 3}), one(gen_b, {1, 2, 3})});
    Word inner = commutator_word({one(gen_a, {0, 1, 2}), big_b});
    Word comm = commutator_word({one(gen_a, {0, 1, 3}), inner});
    Word block = cat({pair, comm});
    return cat({repeat_word(pair, -order), repeat_word(block, order)});
}

// Loop flip in three spatial dimensions (24 steps, threefold symmetric).
inline Word loop_flip_word(int gen = 0) {
    using detail::cat;
    using detail::one;
    auto u = [&](int i, int j, int k, int exp = 1) {
        return one(gen, {i, j, k}, exp);
    };
    return cat({u(0, 1, 4), u(0, 3, 4), u(0, 2, 3), u(0, 1, 4, -1),
                u(0, 2, 4, -1), u(0, 1, 2), u(0, 2, 3, -1), u(0, 1, 3, -1),
                u(0, 2, 4), u(0, 1, 4), u(0, 1, 3), u(0, 2, 4, -1),
                u(0, 3, 4, -1), u(0, 2, 3), u(0, 1, 3, -1), u(0, 1, 2, -1),
                u(0, 3, 4), u(0, 2, 4), u(0, 1, 2), u(0, 3, 4, -1),
                u(0, 1, 4, -1), u(0, 1, 3), u(0, 1, 2, -1), u(0, 2, 3, -1)});
}

// Membrane fusion in three spatial dimensions for an order-N generator:
//   (U_0234 U_0124)^-N ( U_0234 [U_0134, U_0123^N]^-1 U_0124
//                        [U_0134, U_0123^N] )^N
inline Word membrane_fusion_word(int order, int gen = 0) {
    using detail::cat;
    using detail::one;
    Word pair = cat({one(gen, {0, 2, 3, 4}), one(gen, {0, 1, 2, 4})});
    Word comm = commutator_word({one(gen, {0, 1, 3, 4}),
                                 repeat_word(one(gen, {0, 1, 2, 3}), order)});
    Word block = cat({one(gen, {0, 2, 3, 4}), inverse_word(comm),
                      one(gen, {0, 1, 2, 4}), comm});
    return cat({repeat_word(pair, -order), repeat_word(block, order)});
}

}  // namespace genstat

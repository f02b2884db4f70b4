#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "genstat/complex.hpp"
#include "genstat/group.hpp"
#include "genstat/linalg.hpp"

namespace genstat {

// Label of a hopping unitary U(s), s = g_i * sigma with g_i a canonical
// generator of G and sigma a (p+1)-simplex.
struct GeneratorLabel {
    int gen_index = 0;
    Simplex simplex;

    bool operator==(const GeneratorLabel& o) const {
        return gen_index == o.gen_index && simplex == o.simplex;
    }
    bool operator<(const GeneratorLabel& o) const {
        if (gen_index != o.gen_index) return gen_index < o.gen_index;
        return simplex < o.simplex;
    }
};

struct WordStep {
    GeneratorLabel label;
    int exponent = 1;  // +1 or -1
};

// Applied right-to-left onto states; no implicit simplification.
using Word = std::vector<WordStep>;

// Sparse integer vector over theta symbols; column = s_index * |A| + a_index.
struct ThetaVector {
    std::map<std::int32_t, std::int64_t> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const ThetaVector& o) const { return coeffs == o.coeffs; }

    void add(std::int32_t col, std::int64_t delta) {
        auto it = coeffs.find(col);
        if (it == coeffs.end()) {
            if (delta != 0) coeffs.emplace(col, delta);
            return;
        }
        it->second += delta;
        if (it->second == 0) coeffs.erase(it);
    }
};

inline ThetaVector theta_add(const ThetaVector& a, const ThetaVector& b) {
    ThetaVector c = a;
    for (const auto& [col, v] : b.coeffs) c.add(col, v);
    return c;
}

inline ThetaVector theta_scale(const ThetaVector& a, std::int64_t k) {
    ThetaVector c;
    if (k == 0) return c;
    for (const auto& [col, v] : a.coeffs) c.coeffs.emplace(col, k * v);
    return c;
}

inline std::int64_t theta_l1(const ThetaVector& a) {
    std::int64_t s = 0;
    for (const auto& [col, v] : a.coeffs) s += v < 0 ? -v : v;
    return s;
}

inline SparseRow theta_to_row(const ThetaVector& a) {
    SparseRow r;
    r.reserve(a.coeffs.size());
    for (const auto& [col, v] : a.coeffs) r.emplace_back(col, Int(v));
    return r;
}

inline ThetaVector theta_from_row(const SparseRow& r) {
    ThetaVector t;
    for (const auto& [col, v] : r) {
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            throw ResourceLimitError("theta coefficient exceeds 64 bits");
        t.coeffs.emplace(col, static_cast<std::int64_t>(v));
    }
    return t;
}

// The excitation model: generators S, configuration space A = the orbit
// closure of the vacuum under adding +-boundary(s), and transition tables.
class ExcitationModel {
  public:
    static constexpr std::int64_t kDefaultConfigCap = std::int64_t(1) << 20;

    ExcitationModel(SimplicialComplex x, FiniteAbelianGroup g, int p,
                    std::int64_t config_cap = kDefaultConfigCap)
        : x_(std::move(x)), g_(std::move(g)), p_(p) {
        if (p_ < 0 || p_ > x_.dim() - 1)
            throw InvalidInputError("excitation degree must satisfy 0 <= p <= dim-1");
        if (x_.count(p_ + 1) == 0)
            throw InvalidInputError("complex has no (p+1)-simplices");
        build_generators();
        build_boundaries();
        enumerate_configs(config_cap);
        build_tables();
    }

    const SimplicialComplex& complex() const { return x_; }
    const FiniteAbelianGroup& group() const { return g_; }
    int degree() const { return p_; }

    int num_generators() const { return static_cast<int>(gens_.size()); }
    const GeneratorLabel& generator_label(int s) const { return gens_[s]; }
    int generator_index(const GeneratorLabel& l) const {
        auto it = gen_index_.find(l);
        if (it == gen_index_.end())
            throw InvalidInputError("unknown generator label");
        return it->second;
    }

    std::int64_t num_configs() const {
        return static_cast<std::int64_t>(configs_.size());
    }
    // Vacuum is configuration 0 (lexicographically smallest).
    const std::vector<int>& config(std::int64_t a) const { return configs_[a]; }

    std::int64_t theta_columns() const {
        return static_cast<std::int64_t>(gens_.size()) * num_configs();
    }
    std::int32_t theta_column(int s, std::int64_t a) const {
        return static_cast<std::int32_t>(s * num_configs() + a);
    }
    std::pair<int, std::int64_t> theta_term(std::int32_t col) const {
        return {static_cast<int>(col / num_configs()), col % num_configs()};
    }

    // a + boundary(s) / a - boundary(s), by configuration index.
    std::int64_t step(int s, std::int64_t a) const {
        return fwd_[static_cast<std::size_t>(s) * configs_.size() + a];
    }
    std::int64_t unstep(int s, std::int64_t a) const {
        return bwd_[static_cast<std::size_t>(s) * configs_.size() + a];
    }

    Chain config_chain(std::int64_t a) const {
        Chain c;
        c.degree = p_;
        int k = g_.num_factors();
        for (int i = 0; i < x_.count(p_); ++i) {
            GroupElement e{std::vector<int>(
                configs_[a].begin() + static_cast<std::size_t>(i) * k,
                configs_[a].begin() + static_cast<std::size_t>(i + 1) * k)};
            if (!e.is_zero()) c.coeffs.emplace(x_.simplex(p_, i), e);
        }
        return c;
    }

    std::int64_t config_index(const Chain& c) const {
        if (c.degree != p_) throw InvalidInputError("chain degree mismatch");
        std::vector<int> flat(flat_size(), 0);
        int k = g_.num_factors();
        for (const auto& [s, e] : c.coeffs) {
            int i = x_.index_of(s);
            for (int f = 0; f < k; ++f) flat[static_cast<std::size_t>(i) * k + f] = e.residues[f];
        }
        auto it = config_index_.find(flat);
        if (it == config_index_.end())
            throw InvalidInputError("configuration is not in A");
        return it->second;
    }

    // For every p-simplex containing v, the restriction keeps a's value.
    Chain restrict_configuration(std::int64_t a, int vertex) const {
        Simplex v = make_simplex({vertex});
        if (!x_.contains(v)) throw InvalidInputError("vertex not in complex");
        Chain full = config_chain(a);
        Chain out;
        out.degree = p_;
        for (const auto& [s, e] : full.coeffs)
            if (std::find(s.vertices.begin(), s.vertices.end(), vertex) !=
                s.vertices.end())
                out.coeffs.emplace(s, e);
        return out;
    }

  private:
    std::size_t flat_size() const {
        return static_cast<std::size_t>(x_.count(p_)) * g_.num_factors();
    }

    void build_generators() {
        for (int i = 0; i < g_.num_factors(); ++i)
            for (const auto& s : x_.simplices(p_ + 1))
                gens_.push_back(GeneratorLabel{i, s});
        for (int s = 0; s < num_generators(); ++s) gen_index_[gens_[s]] = s;
    }

    void build_boundaries() {
        int k = g_.num_factors();
        for (const auto& lab : gens_) {
            Chain c;
            c.degree = p_ + 1;
            c.coeffs.emplace(lab.simplex, generator(g_, lab.gen_index));
            Chain b = boundary(g_, c);
            std::vector<int> flat(flat_size(), 0);
            for (const auto& [s, e] : b.coeffs) {
                int i = x_.index_of(s);
                for (int f = 0; f < k; ++f)
                    flat[static_cast<std::size_t>(i) * k + f] = e.residues[f];
            }
            boundaries_.push_back(std::move(flat));
        }
    }

    std::vector<int> shift(const std::vector<int>& a, const std::vector<int>& d,
                           int sign) const {
        int k = g_.num_factors();
        std::vector<int> out(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            int n = g_.factor_order(static_cast<int>(j) % k);
            int v = sign > 0 ? a[j] + d[j] : a[j] - d[j] + n;
            out[j] = v % n;
        }
        return out;
    }

    void enumerate_configs(std::int64_t cap) {
        std::vector<int> zero(flat_size(), 0);
        std::map<std::vector<int>, std::int64_t> seen;
        seen.emplace(zero, 0);
        std::deque<std::vector<int>> queue{zero};
        while (!queue.empty()) {
            std::vector<int> cur = std::move(queue.front());
            queue.pop_front();
            for (const auto& d : boundaries_)
                for (int sign : {+1, -1}) {
                    std::vector<int> nxt = shift(cur, d, sign);
                    if (seen.emplace(nxt, 0).second) {
                        if (static_cast<std::int64_t>(seen.size()) > cap)
                            throw ResourceLimitError(
                                "configuration space exceeds cap of " +
                                std::to_string(cap));
                        queue.push_back(std::move(nxt));
                    }
                }
        }
        configs_.reserve(seen.size());
        for (auto& [c, idx] : seen) {  // std::map iterates lexicographically
            idx = static_cast<std::int64_t>(configs_.size());
            configs_.push_back(c);
        }
        config_index_ = std::move(seen);
    }

    void build_tables() {
        std::size_t n = configs_.size();
        fwd_.resize(gens_.size() * n);
        bwd_.resize(gens_.size() * n);
        for (std::size_t s = 0; s < gens_.size(); ++s)
            for (std::size_t a = 0; a < n; ++a) {
                fwd_[s * n + a] =
                    config_index_.at(shift(configs_[a], boundaries_[s], +1));
                bwd_[s * n + a] =
                    config_index_.at(shift(configs_[a], boundaries_[s], -1));
            }
    }

    SimplicialComplex x_;
    FiniteAbelianGroup g_;
    int p_;
    std::vector<GeneratorLabel> gens_;
    std::map<GeneratorLabel, int> gen_index_;
    std::vector<std::vector<int>> boundaries_;  // flat residue deltas per s
    std::vector<std::vector<int>> configs_;     // lexicographically sorted
    std::map<std::vector<int>, std::int64_t> config_index_;
    std::vector<std::int64_t> fwd_, bwd_;       // transition tables
};

inline ExcitationModel build_model(
    const SimplicialComplex& x, const FiniteAbelianGroup& g, int p,
    std::int64_t config_cap = ExcitationModel::kDefaultConfigCap) {
    return ExcitationModel(x, g, p, config_cap);
}

// U(s)|a> = e^{i theta(s,a)} |a + ds>; theta(U^-1, a) := -theta(U, a - ds).
// Walks the word right-to-left from a0, accumulating signed coefficients.
inline std::pair<ThetaVector, std::int64_t> evaluate_word(
    const ExcitationModel& m, const Word& w, std::int64_t a0) {
    if (a0 < 0 || a0 >= m.num_configs())
        throw InvalidInputError("initial configuration index out of range");
    ThetaVector theta;
    std::int64_t a = a0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int s = m.generator_index(it->label);
        if (it->exponent == 1) {
            theta.add(m.theta_column(s, a), +1);
            a = m.step(s, a);
        } else if (it->exponent == -1) {
            a = m.unstep(s, a);
            theta.add(m.theta_column(s, a), -1);
        } else {
            throw InvalidInputError("word exponent must be +1 or -1");
        }
    }
    return {std::move(theta), a};
}

inline Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->label, -it->exponent});
    return out;
}

inline Word concat_words(std::initializer_list<const Word*> parts) {
    Word out;
    for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

// Nested left-fold commutator [[...[w1, w2], ...], wn], [A,B] = A^-1 B^-1 A B.
// Optional per-argument exponents invert arguments before nesting.
inline Word commutator_word(const std::vector<Word>& words,
                            const std::vector<int>& exponents = {}) {
    if (words.size() < 2)
        throw InvalidInputError("commutator needs at least 2 arguments");
    if (!exponents.empty() && exponents.size() != words.size())
        throw InvalidInputError("exponent list length mismatch");
    auto arg = [&](std::size_t i) {
        if (exponents.empty() || exponents[i] == 1) return words[i];
        if (exponents[i] == -1) return inverse_word(words[i]);
        throw InvalidInputError("argument exponent must be +1 or -1");
    };
    Word acc = arg(0);
    for (std::size_t i = 1; i < words.size(); ++i) {
        Word b = arg(i);
        Word acc_inv = inverse_word(acc);
        Word b_inv = inverse_word(b);
        acc = concat_words({&acc_inv, &b_inv, &acc, &b});
    }
    return acc;
}

inline Word repeat_word(const Word& w, std::int64_t k) {
    Word out;
    const Word& base = k >= 0 ? w : inverse_word(w);
    std::int64_t n = k >= 0 ? k : -k;
    out.reserve(base.size() * static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        out.insert(out.end(), base.begin(), base.end());
    return out;
}

// Word text format: whitespace-separated "U[g;v0v1..vk]" or "...^-1" tokens,
// g a generator index; vertices concatenated digits, or dot-separated when
// any id exceeds 9.  Applied right-to-left, matching evaluate_word.
inline std::string format_word(const Word& w) {
    std::string out;
    for (const auto& step : w) {
        if (!out.empty()) out += " ";
        out += "U[" + std::to_string(step.label.gen_index) + ";" +
               format_simplex(step.label.simplex) + "]";
        if (step.exponent == -1) out += "^-1";
    }
    return out;
}

inline Word parse_word(const std::string& text) {
    Word out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int exponent = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            exponent = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        if (tok.size() < 6 || tok.substr(0, 2) != "U[" || tok.back() != ']')
            throw InvalidInputError("bad word token: " + tok);
        std::string body = tok.substr(2, tok.size() - 3);
        auto semi = body.find(';');
        if (semi == std::string::npos)
            throw InvalidInputError("bad word token: " + tok);
        int g = 0;
        try {
            g = std::stoi(body.substr(0, semi));
        } catch (const std::exception&) {
            throw InvalidInputError("bad generator index in token: " + tok);
        }
        std::string verts = body.substr(semi + 1);
        std::vector<int> vs;
        if (verts.find('.') != std::string::npos) {
            std::stringstream ss(verts);
            std::string part;
            while (std::getline(ss, part, '.')) {
                try {
                    vs.push_back(std::stoi(part));
                } catch (const std::exception&) {
                    throw InvalidInputError("bad vertex in token: " + tok);
                }
            }
        } else {
            for (char c : verts) {
                if (c < '0' || c > '9')
                    throw InvalidInputError("bad vertex in token: " + tok);
                vs.push_back(c - '0');
            }
        }
        if (vs.empty()) throw InvalidInputError("empty simplex in token: " + tok);
        out.push_back({GeneratorLabel{g, make_simplex(std::move(vs))}, exponent});
    }
    return out;
}

// Row-dump term format: "coef*(g;simplex;config_index)" per theta symbol.
inline std::string format_theta(const ExcitationModel& m, const ThetaVector& v) {
    std::string out;
    for (const auto& [col, coef] : v.coeffs) {
        auto [s, a] = m.theta_term(col);
        if (!out.empty()) out += " ";
        out += std::to_string(coef) + "*(" +
               std::to_string(m.generator_label(s).gen_index) + ";" +
               format_simplex(m.generator_label(s).simplex) + ";" +
               std::to_string(a) + ")";
    }
    return out;
}

}  // namespace genstat

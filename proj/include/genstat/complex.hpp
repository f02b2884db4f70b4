#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "genstat/group.hpp"

namespace genstat {

// Vertex ids, strictly increasing; dimension = size - 1.
struct Simplex {
    std::vector<int> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex& o) const { return vertices == o.vertices; }
    bool operator<(const Simplex& o) const { return vertices < o.vertices; }

    // j-th face: drop vertex j.
    Simplex face(int j) const {
        Simplex f;
        f.vertices.reserve(vertices.size() - 1);
        for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
            if (i != j) f.vertices.push_back(vertices[i]);
        return f;
    }
};

inline Simplex make_simplex(std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (verts[i] == verts[i - 1])
            throw InvalidInputError("simplex has a repeated vertex");
    return Simplex{std::move(verts)};
}

inline std::string format_simplex(const Simplex& s) {
    std::string out;
    bool multi = !s.vertices.empty() && s.vertices.back() > 9;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i && multi) out += ".";
        out += std::to_string(s.vertices[i]);
    }
    return out;
}

// Abstract simplicial complex, closed under faces, no two simplices with
// identical vertex sets (sets are the identity here, so this is automatic).
class SimplicialComplex {
  public:
    // Builds the closure of the given maximal simplices.
    explicit SimplicialComplex(const std::vector<Simplex>& maximal) {
        std::set<Simplex> seen;
        for (const auto& m : maximal) close(m, seen);
        int d = 0;
        for (const auto& s : seen) d = std::max(d, s.dim());
        by_dim_.resize(d + 1);
        for (const auto& s : seen) by_dim_[s.dim()].push_back(s);
        index_.resize(d + 1);
        for (int k = 0; k <= d; ++k) {
            std::sort(by_dim_[k].begin(), by_dim_[k].end());
            for (int i = 0; i < count(k); ++i) index_[k][by_dim_[k][i]] = i;
        }
    }

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    int count(int k) const {
        if (k < 0 || k > dim()) return 0;
        return static_cast<int>(by_dim_[k].size());
    }
    const std::vector<Simplex>& simplices(int k) const { return by_dim_[k]; }
    const Simplex& simplex(int k, int i) const { return by_dim_[k][i]; }

    bool contains(const Simplex& s) const {
        int k = s.dim();
        return k >= 0 && k <= dim() && index_[k].count(s) > 0;
    }
    int index_of(const Simplex& s) const {
        auto it = index_[s.dim()].find(s);
        if (it == index_[s.dim()].end())
            throw InvalidInputError("simplex not in complex: " + format_simplex(s));
        return it->second;
    }

  private:
    void close(const Simplex& s, std::set<Simplex>& seen) {
        if (s.vertices.empty() || !seen.insert(s).second) return;
        if (s.dim() == 0) return;
        for (int j = 0; j <= s.dim(); ++j) close(s.face(j), seen);
    }

    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, int>> index_;
};

// Boundary of the (d+1)-simplex on vertices 0..d+1: the minimal
// triangulation of the sphere S^d (1-skeleton is K_{d+2}).
inline SimplicialComplex minimal_sphere_triangulation(int d) {
    if (d < 1) throw InvalidInputError("sphere dimension must be >= 1");
    std::vector<Simplex> maximal;
    // All (d+1)-subsets of {0,...,d+1}.
    std::vector<int> pick(d + 1);
    for (int skip = d + 1; skip >= 0; --skip) {
        int j = 0;
        for (int v = 0; v <= d + 1; ++v)
            if (v != skip) pick[j++] = v;
        maximal.push_back(make_simplex(pick));
    }
    return SimplicialComplex(maximal);
}

// G-valued p-chain, zero coefficients absent.
struct Chain {
    int degree = 0;
    std::map<Simplex, GroupElement> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const Chain& o) const {
        return degree == o.degree && coeffs == o.coeffs;
    }
};

inline void chain_add_term(const FiniteAbelianGroup& g, Chain& c,
                           const Simplex& s, const GroupElement& v) {
    auto it = c.coeffs.find(s);
    if (it == c.coeffs.end()) {
        if (!v.is_zero()) c.coeffs.emplace(s, v);
        return;
    }
    it->second = add(g, it->second, v);
    if (it->second.is_zero()) c.coeffs.erase(it);
}

inline Chain chain_sum(const FiniteAbelianGroup& g, const Chain& a,
                       const Chain& b) {
    Chain c = a;
    c.degree = a.degree;
    for (const auto& [s, v] : b.coeffs) chain_add_term(g, c, s, v);
    return c;
}

inline Chain chain_neg(const FiniteAbelianGroup& g, const Chain& a) {
    Chain c;
    c.degree = a.degree;
    for (const auto& [s, v] : a.coeffs) c.coeffs.emplace(s, neg(g, v));
    return c;
}

// d(g*sigma) = sum_i (-1)^i g * face_i(sigma).
inline Chain boundary(const FiniteAbelianGroup& g, const Chain& c) {
    if (c.degree < 1) throw InvalidInputError("boundary needs degree >= 1");
    Chain out;
    out.degree = c.degree - 1;
    for (const auto& [s, v] : c.coeffs)
        for (int j = 0; j <= s.dim(); ++j)
            chain_add_term(g, out, s.face(j), j % 2 == 0 ? v : neg(g, v));
    return out;
}

// Common vertex set of the closed supports. Returns nullopt when empty.
// A non-empty common vertex set that is not a simplex of X means the
// complex is outside the supported family; reject rather than guess.
inline std::optional<Simplex> support_intersection(
    const SimplicialComplex& x, const std::vector<Simplex>& simplices) {
    if (simplices.empty())
        throw InvalidInputError("support_intersection of empty list");
    std::vector<int> common = simplices[0].vertices;
    for (std::size_t i = 1; i < simplices.size() && !common.empty(); ++i) {
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(),
                              simplices[i].vertices.begin(),
                              simplices[i].vertices.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    if (common.empty()) return std::nullopt;
    Simplex s{common};
    if (!x.contains(s))
        throw InvalidInputError(
            "common vertex set " + format_simplex(s) +
            " is not a simplex of the complex; unsupported complex");
    return s;
}

// One maximal simplex per line, whitespace-separated vertex ids,
// '#' comments, optional "name:" prefix per line.
inline SimplicialComplex parse_complex(const std::string& text) {
    std::vector<Simplex> maximal;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto colon = line.find(':');
        if (colon != std::string::npos) line = line.substr(colon + 1);
        std::istringstream ls(line);
        std::vector<int> verts;
        int v;
        while (ls >> v) {
            if (v < 0) throw InvalidInputError("negative vertex id");
            verts.push_back(v);
        }
        if (!ls.eof()) throw InvalidInputError("bad token in complex line: " + line);
        if (!verts.empty()) maximal.push_back(make_simplex(std::move(verts)));
    }
    if (maximal.empty()) throw InvalidInputError("complex description is empty");
    return SimplicialComplex(maximal);
}

}  // namespace genstat

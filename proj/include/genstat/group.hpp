#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace genstat {

struct InvalidInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite Abelian group G = Z_{N_1} x ... x Z_{N_k}, factor order as given.
class FiniteAbelianGroup {
  public:
    explicit FiniteAbelianGroup(std::vector<int> orders)
        : orders_(std::move(orders)) {
        if (orders_.empty())
            throw InvalidInputError("group needs at least one cyclic factor");
        for (int n : orders_)
            if (n < 2)
                throw InvalidInputError("cyclic factor order must be >= 2");
    }

    int num_factors() const { return static_cast<int>(orders_.size()); }
    int factor_order(int i) const { return orders_[i]; }
    const std::vector<int>& orders() const { return orders_; }

    std::int64_t size() const {
        std::int64_t s = 1;
        for (int n : orders_) s *= n;
        return s;
    }

    bool operator==(const FiniteAbelianGroup& o) const {
        return orders_ == o.orders_;
    }

  private:
    std::vector<int> orders_;
};

// Element stored as reduced residues, residues[i] in [0, N_i).
struct GroupElement {
    std::vector<int> residues;

    bool is_zero() const {
        return std::all_of(residues.begin(), residues.end(),
                           [](int r) { return r == 0; });
    }
    bool operator==(const GroupElement& o) const {
        return residues == o.residues;
    }
};

inline FiniteAbelianGroup make_group(std::vector<int> orders) {
    return FiniteAbelianGroup(std::move(orders));
}

inline GroupElement zero_element(const FiniteAbelianGroup& g) {
    return GroupElement{std::vector<int>(g.num_factors(), 0)};
}

// i-th canonical generator: the unit vector of factor i.
inline GroupElement generator(const FiniteAbelianGroup& g, int i) {
    GroupElement e = zero_element(g);
    e.residues[i] = 1;
    return e;
}

inline GroupElement add(const FiniteAbelianGroup& g, const GroupElement& a,
                        const GroupElement& b) {
    GroupElement c = a;
    for (int i = 0; i < g.num_factors(); ++i)
        c.residues[i] = (a.residues[i] + b.residues[i]) % g.factor_order(i);
    return c;
}

inline GroupElement neg(const FiniteAbelianGroup& g, const GroupElement& a) {
    GroupElement c = a;
    for (int i = 0; i < g.num_factors(); ++i)
        c.residues[i] = (g.factor_order(i) - a.residues[i]) % g.factor_order(i);
    return c;
}

// k*a with k possibly negative.
inline GroupElement scale(const FiniteAbelianGroup& g, std::int64_t k,
                          const GroupElement& a) {
    GroupElement c = zero_element(g);
    for (int i = 0; i < g.num_factors(); ++i) {
        int n = g.factor_order(i);
        std::int64_t r = (static_cast<std::int64_t>(a.residues[i]) * k) % n;
        c.residues[i] = static_cast<int>((r + n) % n);
    }
    return c;
}

// Smallest k >= 1 with k*g = 0: lcm over factors of N_i / gcd(N_i, r_i).
inline std::int64_t element_order(const FiniteAbelianGroup& g,
                                  const GroupElement& e) {
    std::int64_t ord = 1;
    for (int i = 0; i < g.num_factors(); ++i) {
        int n = g.factor_order(i);
        std::int64_t k = n / std::gcd(n, e.residues[i]);
        ord = std::lcm(ord, k);
    }
    return ord;
}

// "Z2", "Z2xZ3", "z4XZ4": case-insensitive, 'x' separated.
inline FiniteAbelianGroup parse_group(const std::string& spec) {
    std::vector<int> orders;
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        if (part.size() < 2 || part[0] != 'z')
            throw InvalidInputError("bad group spec: " + spec);
        try {
            orders.push_back(std::stoi(part.substr(1)));
        } catch (const std::exception&) {
            throw InvalidInputError("bad group spec: " + spec);
        }
    }
    return make_group(std::move(orders));
}

inline std::string format_group(const FiniteAbelianGroup& g) {
    std::string out;
    for (int i = 0; i < g.num_factors(); ++i) {
        if (i) out += "x";
        out += "Z" + std::to_string(g.factor_order(i));
    }
    return out;
}

}  // namespace genstat

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "finsym/abelian_group.hpp"
#include "finsym/error.hpp"

namespace finsym {

/// Finite group given by its Cayley table: cayley[a][b] = a*b. Validated on construction
/// (Latin square, two-sided identity, associativity).
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<std::size_t>> cayley, std::size_t identity, std::string name = "")
        : table_(std::move(cayley)), identity_(identity), name_(std::move(name)) {
        validate();
        inverse_.resize(order());
        for (std::size_t a = 0; a < order(); ++a) {
            for (std::size_t b = 0; b < order(); ++b) {
                if (table_[a][b] == identity_) {
                    inverse_[a] = b;
                }
            }
        }
    }

    std::size_t order() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    const std::string& name() const { return name_; }
    const std::vector<std::vector<std::size_t>>& cayley() const { return table_; }

    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    std::size_t commutator(std::size_t a, std::size_t b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

    bool is_abelian() const {
        for (std::size_t a = 0; a < order(); ++a) {
            for (std::size_t b = a + 1; b < order(); ++b) {
                if (table_[a][b] != table_[b][a]) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    void validate() const {
        const std::size_t n = table_.size();
        if (n == 0) {
            throw InputError("group must have at least one element");
        }
        if (identity_ >= n) {
            throw InputError("identity index out of range");
        }
        for (const auto& row : table_) {
            if (row.size() != n) {
                throw InputError("Cayley table must be square");
            }
            std::vector<bool> seen(n, false);
            for (auto v : row) {
                if (v >= n || seen[v]) {
                    throw InputError("Cayley table row is not a permutation");
                }
                seen[v] = true;
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<bool> seen(n, false);
            for (std::size_t i = 0; i < n; ++i) {
                if (seen[table_[i][j]]) {
                    throw InputError("Cayley table column is not a permutation");
                }
                seen[table_[i][j]] = true;
            }
        }
        for (std::size_t a = 0; a < n; ++a) {
            if (table_[identity_][a] != a || table_[a][identity_] != a) {
                throw InputError("identity is not a two-sided unit");
            }
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                        throw InputError("Cayley table is not associative");
                    }
                }
            }
        }
    }

    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_;
    std::string name_;
    std::vector<std::size_t> inverse_;
};

/// Disjoint classes covering G, each sorted, ordered by smallest member. The identity's
/// class comes first.
inline std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<int> class_of(n, -1);
    std::vector<std::vector<std::size_t>> classes;
    auto visit = [&](std::size_t x) {
        if (class_of[x] >= 0) {
            return;
        }
        std::vector<std::size_t> cls;
        for (std::size_t h = 0; h < n; ++h) {
            const std::size_t y = g.mul(g.mul(h, x), g.inv(h));
            if (class_of[y] < 0) {
                class_of[y] = static_cast<int>(classes.size());
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    };
    visit(g.identity());
    for (std::size_t x = 0; x < n; ++x) {
        visit(x);
    }
    return classes;
}

namespace groups {

/// Cayley table of a finite abelian group, elements in its index order.
inline FiniteGroup from_abelian(const FiniteAbelianGroup& a) {
    const auto n = static_cast<std::size_t>(a.order());
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = static_cast<std::size_t>(a.index(a.add(a.element(i), a.element(j))));
        }
    }
    return FiniteGroup(std::move(t), 0, a.name());
}

inline FiniteGroup cyclic(std::int64_t n) {
    auto g = from_abelian(FiniteAbelianGroup::cyclic(n));
    return FiniteGroup(g.cayley(), 0, "Z" + std::to_string(n));
}

namespace detail {

using Perm = std::vector<std::size_t>;

// Closure of the generators under composition (p*q)(i) = p(q(i)); identity first,
// remaining elements in lexicographic order of their images.
inline FiniteGroup from_permutations(const std::vector<Perm>& gens, std::size_t degree, const std::string& name) {
    Perm id(degree);
    for (std::size_t i = 0; i < degree; ++i) {
        id[i] = i;
    }
    std::vector<Perm> elems{id};
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (const auto& g : gens) {
            Perm p(degree);
            for (std::size_t i = 0; i < degree; ++i) {
                p[i] = elems[k][g[i]];
            }
            if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
                elems.push_back(p);
            }
        }
    }
    std::sort(elems.begin() + 1, elems.end());
    std::map<Perm, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        index[elems[i]] = i;
    }
    std::vector<std::vector<std::size_t>> t(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a) {
        for (std::size_t b = 0; b < elems.size(); ++b) {
            Perm p(degree);
            for (std::size_t i = 0; i < degree; ++i) {
                p[i] = elems[a][elems[b][i]];
            }
            t[a][b] = index.at(p);
        }
    }
    return FiniteGroup(std::move(t), 0, name);
}

}  // namespace detail

inline FiniteGroup symmetric3() { return detail::from_permutations({{1, 0, 2}, {1, 2, 0}}, 3, "S3"); }

/// Symmetries of the square acting on its vertices 0..3.
inline FiniteGroup dihedral4() { return detail::from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}}, 4, "D4"); }

/// Quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup quaternion8() {
    // Unit quaternions as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k.
    static constexpr std::array<std::array<int, 4>, 4> axis_product{{
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    }};
    static constexpr std::array<std::array<int, 4>, 4> sign_product{{
        {1, 1, 1, 1},
        {1, -1, 1, -1},
        {1, -1, -1, 1},
        {1, 1, -1, -1},
    }};
    auto idx = [](int axis, int sign) { return static_cast<std::size_t>(2 * axis + (sign < 0 ? 1 : 0)); };
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (int a = 0; a < 4; ++a) {
        for (int sa : {1, -1}) {
            for (int b = 0; b < 4; ++b) {
                for (int sb : {1, -1}) {
                    t[idx(a, sa)][idx(b, sb)] = idx(axis_product[a][b], sa * sb * sign_product[a][b]);
                }
            }
        }
    }
    return FiniteGroup(std::move(t), 0, "Q8");
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"};
    return names;
}

}  // namespace groups

}  // namespace finsym

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "finsym/error.hpp"
#include "finsym/rational.hpp"

namespace finsym {

/// Finite abelian group Z_{n_1} x ... x Z_{n_k} in invariant-factor form n_1 | n_2 | ... | n_k,
/// every n_i >= 2. The empty list is the trivial group.
///
/// Elements are coordinate vectors (a_1, ..., a_k) with 0 <= a_i < n_i. They are also
/// indexed by a mixed-radix integer with the first factor most significant, so index
/// order is lexicographic order of coordinates.
class FiniteAbelianGroup {
public:
    using Element = std::vector<std::int64_t>;

    FiniteAbelianGroup() = default;

    explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
        : factors_(std::move(invariant_factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < 2) {
                throw InputError("invariant factor must be >= 2, got " + std::to_string(factors_[i]));
            }
            if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0) {
                throw InputError("invariant factors must form a divisibility chain");
            }
        }
    }

    static FiniteAbelianGroup cyclic(std::int64_t n) {
        if (n < 1) {
            throw InputError("cyclic group order must be >= 1");
        }
        return n == 1 ? FiniteAbelianGroup{} : FiniteAbelianGroup({n});
    }

    /// Normalizes an arbitrary product of cyclic groups Z_{m_1} x ... (m_i >= 1) into
    /// invariant-factor form via the primary decomposition.
    static FiniteAbelianGroup from_cyclic_orders(const std::vector<std::int64_t>& orders) {
        std::map<std::int64_t, std::vector<std::int64_t>> prime_powers;  // p -> exponents p^e
        for (std::int64_t m : orders) {
            if (m < 1) {
                throw InputError("cyclic factor order must be >= 1");
            }
            std::int64_t rest = m;
            for (std::int64_t p = 2; p * p <= rest; ++p) {
                std::int64_t pe = 1;
                while (rest % p == 0) {
                    rest /= p;
                    pe *= p;
                }
                if (pe > 1) {
                    prime_powers[p].push_back(pe);
                }
            }
            if (rest > 1) {
                prime_powers[rest].push_back(rest);
            }
        }
        std::size_t k = 0;
        for (auto& [p, pes] : prime_powers) {
            std::sort(pes.begin(), pes.end(), std::greater<>());
            k = std::max(k, pes.size());
        }
        // Largest invariant factor takes the largest power of each prime, and so on down.
        std::vector<std::int64_t> factors(k, 1);
        for (const auto& [p, pes] : prime_powers) {
            for (std::size_t i = 0; i < pes.size(); ++i) {
                factors[k - 1 - i] *= pes[i];
            }
        }
        return FiniteAbelianGroup(std::move(factors));
    }

    const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }

    std::uint64_t order() const {
        std::uint64_t n = 1;
        for (auto f : factors_) {
            n *= static_cast<std::uint64_t>(f);
        }
        return n;
    }

    /// Exponent of the group (largest invariant factor).
    std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    bool is_trivial() const { return factors_.empty(); }

    Element zero() const { return Element(factors_.size(), 0); }

    Element element(std::uint64_t index) const {
        Element e(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            e[i] = static_cast<std::int64_t>(index % factors_[i]);
            index /= factors_[i];
        }
        return e;
    }

    std::uint64_t index(const Element& e) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            idx = idx * factors_[i] + static_cast<std::uint64_t>(reduce(e[i], i));
        }
        return idx;
    }

    std::vector<Element> elements() const {
        std::vector<Element> all;
        all.reserve(order());
        for (std::uint64_t i = 0; i < order(); ++i) {
            all.push_back(element(i));
        }
        return all;
    }

    Element add(const Element& a, const Element& b) const {
        Element c(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            c[i] = reduce(a[i] + b[i], i);
        }
        return c;
    }

    Element negate(const Element& a) const {
        Element c(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            c[i] = reduce(-a[i], i);
        }
        return c;
    }

    Element scale(const Element& a, std::int64_t k) const {
        Element c(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            c[i] = reduce(static_cast<std::int64_t>((static_cast<__int128>(a[i]) * k) % factors_[i]), i);
        }
        return c;
    }

    std::int64_t reduce(std::int64_t v, std::size_t factor) const {
        const std::int64_t n = factors_[factor];
        v %= n;
        return v < 0 ? v + n : v;
    }

    /// Order of a single element.
    std::int64_t element_order(const Element& a) const {
        std::int64_t ord = 1;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            const std::int64_t n = factors_[i];
            ord = std::lcm(ord, n / std::gcd(reduce(a[i], i), n));
        }
        return ord;
    }

    /// "Z2xZ4"; trivial group is "Z1".
    std::string name() const {
        if (factors_.empty()) {
            return "Z1";
        }
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            s += (i ? "xZ" : "Z") + std::to_string(factors_[i]);
        }
        return s;
    }

    std::string element_str(const Element& e) const {
        if (e.size() == 1) {
            return std::to_string(e[0]);
        }
        std::string s = "(";
        for (std::size_t i = 0; i < e.size(); ++i) {
            s += (i ? "," : "") + std::to_string(e[i]);
        }
        return s + ")";
    }

    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    std::vector<std::int64_t> factors_;
};

inline FiniteAbelianGroup product(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    std::vector<std::int64_t> orders = a.invariant_factors();
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return FiniteAbelianGroup::from_cyclic_orders(orders);
}

/// Character chi: A -> Q/Z, chi(a) = sum_i exponent_i * a_i / n_i. Exponent i lives mod n_i.
class Character {
public:
    Character(FiniteAbelianGroup group, std::vector<std::int64_t> exponents)
        : group_(std::move(group)), exponents_(std::move(exponents)) {
        if (exponents_.size() != group_.rank()) {
            throw InputError("character needs one exponent per invariant factor");
        }
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            exponents_[i] = group_.reduce(exponents_[i], i);
        }
    }

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }

    Phase operator()(const FiniteAbelianGroup::Element& a) const {
        Phase total;
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            total += Phase(exponents_[i] * group_.reduce(a[i], i), group_.invariant_factors()[i]);
        }
        return total;
    }

    bool is_trivial() const {
        return std::all_of(exponents_.begin(), exponents_.end(), [](std::int64_t e) { return e == 0; });
    }

    bool operator==(const Character&) const = default;

private:
    FiniteAbelianGroup group_;
    std::vector<std::int64_t> exponents_;
};

/// Pontryagin dual. Non-canonically isomorphic to A, so it has the same invariant factors;
/// element e of the dual is the character with exponents e.
inline FiniteAbelianGroup dual_group(const FiniteAbelianGroup& a) { return a; }

/// All characters of A, in the index order of dual_group(A).
inline std::vector<Character> characters(const FiniteAbelianGroup& a) {
    std::vector<Character> out;
    const FiniteAbelianGroup dual = dual_group(a);
    out.reserve(dual.order());
    for (std::uint64_t i = 0; i < dual.order(); ++i) {
        out.emplace_back(a, dual.element(i));
    }
    return out;
}

}  // namespace finsym

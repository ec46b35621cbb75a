#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "finsym/abelian_group.hpp"
#include "finsym/error.hpp"
#include "finsym/rational.hpp"

namespace finsym {

/// Quadratic refinement q: A' -> Q/Z.
///
/// Specified by q on the invariant-factor generators g_i and the cross terms b(g_i, g_j)
/// for i < j; the full value table is expanded as
///   q(sum a_i g_i) = sum a_i^2 q(g_i) + sum_{i<j} a_i a_j b(g_i, g_j)
/// over coordinate representatives and then validated exhaustively.
class QuadraticForm {
public:
    QuadraticForm(FiniteAbelianGroup domain, std::vector<Phase> gen_values, std::vector<Phase> cross_terms = {})
        : domain_(std::move(domain)), gen_values_(std::move(gen_values)), cross_terms_(std::move(cross_terms)) {
        const std::size_t k = domain_.rank();
        if (gen_values_.size() != k) {
            throw InputError("quadratic form needs one generator value per invariant factor (" + std::to_string(k) +
                             "), got " + std::to_string(gen_values_.size()));
        }
        if (cross_terms_.empty()) {
            cross_terms_.assign(k * (k - (k ? 1 : 0)) / 2, Phase{});
        }
        if (cross_terms_.size() != k * (k - (k ? 1 : 0)) / 2) {
            throw InputError("quadratic form needs k(k-1)/2 cross terms");
        }
        values_.reserve(domain_.order());
        for (std::uint64_t idx = 0; idx < domain_.order(); ++idx) {
            const auto a = domain_.element(idx);
            Phase v;
            std::size_t c = 0;
            for (std::size_t i = 0; i < k; ++i) {
                v += gen_values_[i] * (a[i] * a[i]);
                for (std::size_t j = i + 1; j < k; ++j, ++c) {
                    v += cross_terms_[c] * (a[i] * a[j]);
                }
            }
            values_.push_back(v);
        }
    }

    static QuadraticForm zero(const FiniteAbelianGroup& domain) {
        return QuadraticForm(domain, std::vector<Phase>(domain.rank()));
    }

    const FiniteAbelianGroup& domain() const { return domain_; }
    const std::vector<Phase>& gen_values() const { return gen_values_; }
    const std::vector<Phase>& cross_terms() const { return cross_terms_; }

    Phase operator()(const FiniteAbelianGroup::Element& a) const { return values_[domain_.index(a)]; }
    Phase at(std::uint64_t index) const { return values_[index]; }

    /// Polarization b(x, y) = q(x + y) - q(x) - q(y).
    Phase polar(const FiniteAbelianGroup::Element& x, const FiniteAbelianGroup::Element& y) const {
        return (*this)(domain_.add(x, y)) - (*this)(x) - (*this)(y);
    }

    /// Table of b(x, y), indexed [index(x)][index(y)], with no validity check.
    std::vector<std::vector<Phase>> polar_table() const {
        const std::uint64_t n = domain_.order();
        std::vector<std::vector<Phase>> b(n, std::vector<Phase>(n));
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto x = domain_.element(i);
            for (std::uint64_t j = 0; j < n; ++j) {
                const auto y = domain_.element(j);
                b[i][j] = values_[domain_.index(domain_.add(x, y))] - values_[i] - values_[j];
            }
        }
        return b;
    }

    /// Empty string when q(n a) = n^2 q(a) for all a, n and b is symmetric and bi-additive;
    /// otherwise a description of the first violation.
    std::string violation() const {
        const auto e = domain_.exponent();
        const std::uint64_t n = domain_.order();
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto a = domain_.element(i);
            // k ranges over a full period of k -> k*a; k^2 q(a) has period dividing 2e.
            for (std::int64_t k = 0; k <= 2 * e; ++k) {
                if ((*this)(domain_.scale(a, k)) != values_[i] * (k * k)) {
                    return "q(" + std::to_string(k) + "*" + domain_.element_str(a) + ") != " + std::to_string(k * k) +
                           "*q(" + domain_.element_str(a) + ")";
                }
            }
        }
        const auto b = polar_table();
        for (std::uint64_t i = 0; i < n; ++i) {
            for (std::uint64_t j = 0; j < n; ++j) {
                if (b[i][j] != b[j][i]) {
                    return "b not symmetric";
                }
            }
        }
        // Additivity in the first slot on generators implies it everywhere.
        for (std::size_t g = 0; g < domain_.rank(); ++g) {
            auto gen = domain_.zero();
            gen[g] = 1;
            const std::uint64_t gi = domain_.index(gen);
            for (std::uint64_t i = 0; i < n; ++i) {
                const std::uint64_t sum = domain_.index(domain_.add(domain_.element(i), gen));
                for (std::uint64_t k = 0; k < n; ++k) {
                    if (b[sum][k] != b[i][k] + b[gi][k]) {
                        return "b not additive at (" + domain_.element_str(domain_.element(i)) + "+" +
                               domain_.element_str(gen) + ", " + domain_.element_str(domain_.element(k)) + ")";
                    }
                }
            }
        }
        return {};
    }

    bool is_valid() const { return violation().empty(); }

private:
    FiniteAbelianGroup domain_;
    std::vector<Phase> gen_values_;
    std::vector<Phase> cross_terms_;
    std::vector<Phase> values_;
};

/// Full table of b(x, y), indexed [index(x)][index(y)].
using BihomomorphismTable = std::vector<std::vector<Phase>>;

inline BihomomorphismTable bihomomorphism(const QuadraticForm& q) {
    if (const auto why = q.violation(); !why.empty()) {
        throw InputError("invalid quadratic form: " + why);
    }
    return q.polar_table();
}

}  // namespace finsym

#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "finsym/abelian_group.hpp"
#include "finsym/chain_complex.hpp"
#include "finsym/quadratic_form.hpp"

namespace fixtures {

/// Every preset cell complex of dimension <= 3.
inline std::vector<std::pair<std::string, finsym::ChainComplex>> small_presets() {
    using namespace finsym::presets;
    return {{"point", point()},
            {"sphere:0", sphere(0)},
            {"sphere:1", sphere(1)},
            {"sphere:2", sphere(2)},
            {"sphere:3", sphere(3)},
            {"circle", circle()},
            {"interval", interval()},
            {"torus:1", torus(1)},
            {"torus:2", torus(2)},
            {"torus:3", torus(3)},
            {"surface:0", surface(0)},
            {"surface:1", surface(1)},
            {"surface:2", surface(2)},
            {"surface:3", surface(3)},
            {"surface:4", surface(4)},
            {"rp:1", rp(1)},
            {"rp:2", rp(2)},
            {"rp:3", rp(3)},
            {"klein", klein()},
            {"disk", disk()},
            {"pants", pants()},
            {"cylinder", finsym::product(circle(), interval())}};
}

/// Coefficient groups of order <= 4.
inline std::vector<finsym::FiniteAbelianGroup> small_groups() {
    using finsym::FiniteAbelianGroup;
    return {FiniteAbelianGroup{}, FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3),
            FiniteAbelianGroup::cyclic(4), FiniteAbelianGroup({2, 2})};
}

using finsym::FiniteAbelianGroup;
using finsym::Phase;
using finsym::QuadraticForm;

inline std::vector<FiniteAbelianGroup> groups_up_to_16() {
    std::vector<FiniteAbelianGroup> out;
    for (std::int64_t n = 2; n <= 16; ++n) {
        out.push_back(FiniteAbelianGroup::cyclic(n));
    }
    for (const auto& f : std::vector<std::vector<std::int64_t>>{
             {2, 2}, {2, 4}, {2, 6}, {2, 8}, {3, 3}, {4, 4}, {2, 2, 2}, {2, 2, 4}, {2, 2, 2, 2}}) {
        out.emplace_back(f);
    }
    return out;
}

// Subgroups aligned with the trailing invariant factors: k_i | n_{shift+i}, k_i | k_{i+1}.
inline std::vector<FiniteAbelianGroup> aligned_subgroups(const FiniteAbelianGroup& a) {
    std::vector<FiniteAbelianGroup> out{FiniteAbelianGroup{}};
    const auto& n = a.invariant_factors();
    for (std::size_t r = 1; r <= n.size(); ++r) {
        const std::size_t shift = n.size() - r;
        std::vector<std::int64_t> k(r, 2);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == r) {
                out.emplace_back(k);
                return;
            }
            for (std::int64_t d = 2; d <= n[shift + i]; ++d) {
                if (n[shift + i] % d == 0 && (i == 0 || d % k[i - 1] == 0)) {
                    k[i] = d;
                    rec(i + 1);
                }
            }
        };
        rec(0);
    }
    return out;
}

// Every candidate quadratic refinement with q(g_i) in (1/2n_i)Z and b(g_i, g_j) in (1/n_i)Z.
inline std::vector<QuadraticForm> all_forms(const FiniteAbelianGroup& ap) {
    const auto& k = ap.invariant_factors();
    const std::size_t r = k.size();
    std::vector<std::pair<std::size_t, std::size_t>> cross;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            cross.emplace_back(i, j);
        }
    }
    std::vector<std::int64_t> radix;
    for (auto n : k) {
        radix.push_back(2 * n);
    }
    for (const auto& [i, j] : cross) {
        radix.push_back(std::gcd(k[i], k[j]));
    }
    std::vector<QuadraticForm> out;
    std::vector<std::int64_t> digits(radix.size(), 0);
    for (;;) {
        std::vector<Phase> gens;
        for (std::size_t i = 0; i < r; ++i) {
            gens.emplace_back(digits[i], 2 * k[i]);
        }
        std::vector<Phase> cr;
        for (std::size_t c = 0; c < cross.size(); ++c) {
            cr.emplace_back(digits[r + c], radix[r + c]);
        }
        QuadraticForm q(ap, gens, cr);
        if (q.is_valid()) {
            out.push_back(std::move(q));
        }
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == radix[pos]) {
            digits[pos++] = 0;
        }
        if (pos == digits.size()) {
            break;
        }
    }
    return out;
}

}  // namespace fixtures

#pragma once

// Groupoid-cardinality path integrals of finite homotopy theories with targets B^n A
// (abelian, any closed complex) and BG (any finite group, closed surfaces only).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "finsym/abelian_group.hpp"
#include "finsym/chain_complex.hpp"
#include "finsym/cohomology.hpp"
#include "finsym/error.hpp"
#include "finsym/finite_group.hpp"
#include "finsym/rational.hpp"

namespace finsym {

/// Eilenberg-MacLane target B^n A, n >= 1.
struct EilenbergMacLane {
    FiniteAbelianGroup group;
    std::size_t degree = 1;
};

/// Classifying space BG of a possibly nonabelian group.
struct ClassifyingSpace {
    FiniteGroup group;
};

using PiFiniteTarget = std::variant<EilenbergMacLane, ClassifyingSpace>;

/// Only the untwisted theory exists; a nonzero weight is rejected.
struct TwistWeight {
    bool is_zero = true;
};

namespace detail {

inline void require_closed(const ChainComplex& m) {
    if (!is_closed(m)) {
        throw InputError("manifold must be closed (no mod-2 fundamental class in top degree)");
    }
}

inline void require_untwisted(const TwistWeight& w) {
    if (!w.is_zero) {
        throw InputError("twisted weights are not supported; only the zero weight is accepted");
    }
}

}  // namespace detail

/// prod_{q=0}^{n} |H^{n-q}(M; A)|^{(-1)^q}. For n = 2 this is #H^0 / #H^1 * #H^2.
inline Rational em_partition(const ChainComplex& m, const FiniteAbelianGroup& a, std::size_t n,
                             const TwistWeight& weight = {}) {
    detail::require_untwisted(weight);
    if (n < 1) {
        throw InputError("Eilenberg-MacLane degree must be >= 1");
    }
    detail::require_closed(m);
    Rational value(1);
    for (std::size_t q = 0; q <= n; ++q) {
        const Integer h(cohomology(m, a, n - q).order());
        value = (q % 2 == 0) ? Rational(value * h) : Rational(value / h);
    }
    return value;
}

/// Dimension of the state space Fun(pi_0 Map(M, B^n A)) = |H^n(M; A)|.
inline Integer em_state_space_dim(const ChainComplex& m, const FiniteAbelianGroup& a, std::size_t n) {
    return Integer(cohomology(m, a, n).order());
}

/// Simple objects of Vect(H^2(M;A) x H^1(M;A)^dual) for a closed 3-manifold M and n = 2.
inline Integer em_category_simple_count(const ChainComplex& m, const FiniteAbelianGroup& a) {
    if (m.top_dim() != 3) {
        throw InputError("category-valued invariant needs a 3-dimensional complex, got dimension " +
                         std::to_string(m.top_dim()));
    }
    return Integer(cohomology(m, a, 2).order()) * Integer(cohomology(m, a, 1).order());
}

/// Z_G(Sigma_g) = #{(a_1, b_1, ..., a_g, b_g) : prod [a_i, b_i] = e} / |G|.
///
/// Brute-force tuple enumeration, split across `threads` workers by the first generator;
/// per-worker counts are summed in worker order.
inline Rational surface_gauge_count(const FiniteGroup& g, std::size_t genus, const EnumGuard& guard = {},
                                    unsigned threads = 1) {
    const std::size_t n = g.order();
    if (genus == 0) {
        return Rational(1, static_cast<long long>(n));
    }
    guard.require_power(n, 2 * genus, "surface holonomy tuples");

    const std::size_t slots = 2 * genus;
    auto count_from = [&](std::size_t first) {
        std::uint64_t count = 0;
        std::vector<std::size_t> t(slots, 0);
        t[0] = first;
        for (;;) {
            std::size_t prod = g.identity();
            for (std::size_t i = 0; i < genus; ++i) {
                prod = g.mul(prod, g.commutator(t[2 * i], t[2 * i + 1]));
            }
            if (prod == g.identity()) {
                ++count;
            }
            std::size_t pos = slots;
            while (pos-- > 1) {
                if (++t[pos] < n) {
                    break;
                }
                t[pos] = 0;
            }
            if (pos == 0) {
                break;
            }
        }
        return count;
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    std::vector<std::uint64_t> partial(n, 0);
    if (threads == 1) {
        for (std::size_t a = 0; a < n; ++a) {
            partial[a] = count_from(a);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t a = w; a < n; a += threads) {
                    partial[a] = count_from(a);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    Integer total = 0;
    for (auto c : partial) {
        total += c;
    }
    return Rational(total, Integer(n));
}

/// Partition function of a closed manifold for either kind of target. BG with nonabelian G
/// is only defined on closed surfaces (matched by cell structure against the genus-g preset).
inline Rational partition_function(const PiFiniteTarget& target, const ChainComplex& m, const EnumGuard& guard = {},
                                   unsigned threads = 1) {
    if (const auto* em = std::get_if<EilenbergMacLane>(&target)) {
        return em_partition(m, em->group, em->degree);
    }
    const auto& bg = std::get<ClassifyingSpace>(target).group;
    for (std::size_t genus = 0; genus <= 4; ++genus) {
        if (m == presets::surface(genus)) {
            return surface_gauge_count(bg, genus, guard, threads);
        }
    }
    throw InputError("BG targets are only supported on closed oriented surfaces (surface:g)");
}

}  // namespace finsym

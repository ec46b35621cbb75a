#pragma once

// Independent reference computations used to check the library. Nothing here calls the
// code under test beyond plain data accessors.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "finsym/abelian_group.hpp"
#include "finsym/chain_complex.hpp"
#include "finsym/finite_group.hpp"
#include "finsym/int_matrix.hpp"

namespace oracle {

using finsym::Integer;

// ---------------------------------------------------------------- cochains

inline std::vector<std::vector<long long>> small(const finsym::IntMatrix& m) {
    std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = m(i, j).convert_to<long long>();
        }
    }
    return out;
}

// Cochains with values in Z_{n_1} x ... x Z_{n_r}, stored per cell and factor and
// enumerated as mixed-radix integers.
struct CochainSpace {
    std::vector<std::int64_t> orders;
    std::size_t cells = 0;

    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (std::size_t c = 0; c < cells; ++c) {
            for (auto n : orders) {
                s *= static_cast<std::uint64_t>(n);
            }
        }
        return s;
    }

    std::vector<std::int64_t> decode(std::uint64_t code) const {
        std::vector<std::int64_t> v(cells * orders.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto n = static_cast<std::uint64_t>(orders[i % orders.size()]);
            v[i] = static_cast<std::int64_t>(code % n);
            code /= n;
        }
        return v;
    }
};

// (delta f)(tau) = sum_sigma d[sigma][tau] f(sigma), d the boundary c_q x c_{q+1}.
inline std::vector<std::int64_t> coboundary(const std::vector<std::int64_t>& f, const std::vector<std::vector<long long>>& d,
                                            std::size_t next_cells, const std::vector<std::int64_t>& orders) {
    const std::size_t r = orders.size();
    std::vector<std::int64_t> out(next_cells * r, 0);
    for (std::size_t tau = 0; tau < next_cells; ++tau) {
        for (std::size_t sigma = 0; sigma < d.size(); ++sigma) {
            const long long k = d[sigma][tau];
            if (k == 0) {
                continue;
            }
            for (std::size_t i = 0; i < r; ++i) {
                out[tau * r + i] += k * f[sigma * r + i];
            }
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = ((out[i] % orders[i % r]) + orders[i % r]) % orders[i % r];
    }
    return out;
}

struct CochainCounts {
    std::uint64_t cocycles = 0;
    std::uint64_t coboundaries = 0;
    std::uint64_t cochains = 0;
    std::uint64_t cohomology() const { return cocycles / coboundaries; }
};

inline CochainCounts count_cochains(const finsym::ChainComplex& c, const std::vector<std::int64_t>& orders, std::size_t q) {
    if (orders.empty()) {
        return {1, 1, 1};
    }
    auto cells = [&](std::size_t k) -> std::size_t { return k <= c.top_dim() ? c.cells(k) : 0; };
    auto bnd = [&](std::size_t k) {
        // c_{k-1} x c_k, empty outside the complex
        if (k == 0 || k > c.top_dim()) {
            return std::vector<std::vector<long long>>(cells(k - (k ? 1 : 0)), std::vector<long long>(cells(k), 0));
        }
        return small(c.boundary(k));
    };
    CochainCounts out;
    const CochainSpace cq{orders, cells(q)};
    out.cochains = cq.size();
    const auto dq1 = bnd(q + 1);
    for (std::uint64_t code = 0; code < cq.size(); ++code) {
        const auto f = cq.decode(code);
        const auto df = coboundary(f, dq1, cells(q + 1), orders);
        if (std::all_of(df.begin(), df.end(), [](std::int64_t x) { return x == 0; })) {
            ++out.cocycles;
        }
    }
    if (q == 0) {
        out.coboundaries = 1;
        return out;
    }
    const CochainSpace cp{orders, cells(q - 1)};
    const auto dq = bnd(q);
    std::set<std::vector<std::int64_t>> image;
    for (std::uint64_t code = 0; code < cp.size(); ++code) {
        image.insert(coboundary(cp.decode(code), dq, cells(q), orders));
    }
    out.coboundaries = image.size();
    return out;
}

// ---------------------------------------------------------------- integer matrices

inline Integer det(std::vector<std::vector<Integer>> a) {
    // Bareiss fraction-free elimination.
    const std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// D_k = gcd of all k x k minors, k = 1..min(rows, cols). The Smith diagonal is
/// d_k = D_k / D_{k-1}.
inline std::vector<Integer> determinantal_divisors(const finsym::IntMatrix& m) {
    const std::size_t kmax = std::min(m.rows(), m.cols());
    std::vector<Integer> out;
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::vector<std::size_t>> rs;
        std::vector<std::vector<std::size_t>> cs;
        std::vector<std::size_t> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        Integer g = 0;
        for (const auto& r : rs) {
            for (const auto& c : cs) {
                std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) {
                        sub[i][j] = m(r[i], c[j]);
                    }
                }
                g = boost::multiprecision::gcd(g, det(sub));
            }
        }
        out.push_back(g < 0 ? Integer(-g) : g);
    }
    return out;
}

// ---------------------------------------------------------------- groups

/// #{(a1, b1, ..., ag, bg) : prod [ai, bi] = e} by dynamic programming over the running
/// product.
inline Integer surface_hom_count(const finsym::FiniteGroup& g, std::size_t genus) {
    const std::size_t n = g.order();
    std::vector<Integer> comm(n, 0);  // number of pairs with given commutator
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            comm[c] += 1;
        }
    }
    std::vector<Integer> dist(n, 0);
    dist[g.identity()] = 1;
    for (std::size_t i = 0; i < genus; ++i) {
        std::vector<Integer> next(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            if (dist[x] == 0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                next[g.mul(x, c)] += dist[x] * comm[c];
            }
        }
        dist = std::move(next);
    }
    return dist[g.identity()];
}

/// Burnside: number of conjugacy classes = (1/|G|) sum_g |C(g)|.
inline std::size_t class_count(const finsym::FiniteGroup& g) {
    std::size_t commuting = 0;
    for (std::size_t a = 0; a < g.order(); ++a) {
        for (std::size_t b = 0; b < g.order(); ++b) {
            commuting += g.mul(a, b) == g.mul(b, a);
        }
    }
    return commuting / g.order();
}

/// Sorted multiset of element orders; an isomorphism invariant.
inline std::vector<std::size_t> order_profile(const finsym::FiniteGroup& g) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < g.order(); ++a) {
        std::size_t k = 1;
        std::size_t x = a;
        while (x != g.identity()) {
            x = g.mul(x, a);
            ++k;
        }
        out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- Ising

/// Direct sum over spins of exp(beta sum_edges s s' (-1)^twist), rescaled by e^{-beta E}
/// so that an aligned edge has weight 1. Twisted seams: horizontal edges leaving column
/// L-1 (hx) and vertical edges leaving row T-1 (ht).
inline double ising_direct(std::size_t L, std::size_t T, double beta, int hx, int ht) {
    const std::size_t n = L * T;
    const double edges = 2.0 * static_cast<double>(n);
    long double z = 0.0L;
    for (std::uint64_t cfg = 0; cfg < (std::uint64_t{1} << n); ++cfg) {
        auto spin = [&](std::size_t x, std::size_t t) { return ((cfg >> (t * L + x)) & 1U) ? -1 : 1; };
        int energy = 0;
        for (std::size_t t = 0; t < T; ++t) {
            for (std::size_t x = 0; x < L; ++x) {
                const int sh = (x == L - 1 && hx) ? -1 : 1;
                const int sv = (t == T - 1 && ht) ? -1 : 1;
                energy += spin(x, t) * spin((x + 1) % L, t) * sh;
                energy += spin(x, t) * spin(x, (t + 1) % T) * sv;
            }
        }
        z += std::exp(static_cast<long double>(beta) * (energy - edges));
    }
    return static_cast<double>(z);
}

}  // namespace oracle

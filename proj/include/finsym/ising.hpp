#pragma once

// Two-dimensional Ising model on an L x T square torus with Z2 background fields.
//
// Spins sit on sites (x, t). Horizontal edge (x, t) joins (x, t)-(x+1 mod L, t); vertical
// edge (x, t) joins (x, t)-(x, t+1 mod T). An edge with spins s, s' and twist h in {0, 1}
// has weight theta(s s' (-1)^h), theta(+1) = 1, theta(-1) = exp(-2 beta).
//
// Holonomy sector (hx, ht) twists the horizontal edges x = L-1 (hx) and the vertical
// edges t = T-1 (ht). With transfer matrix
//   M_hx[s][s'] = (weights of the horizontal edges of row s) * prod_x theta(s_x s'_x)
// the torus partition function is Z = Tr(M_hx^T F^ht), F the global spin flip.

#include <Eigen/Dense>

#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "finsym/error.hpp"

namespace finsym::ising {

struct IsingLattice {
    std::size_t L = 1;
    std::size_t T = 1;
    double beta = 1.0;

    IsingLattice(std::size_t l, std::size_t t, double b) : L(l), T(t), beta(b) {
        if (L < 1 || T < 1) {
            throw InputError("Ising lattice needs L >= 1 and T >= 1");
        }
        if (!(beta > 0.0)) {
            throw InputError("inverse temperature must be positive");
        }
    }

    std::size_t sites() const { return L * T; }
    std::size_t edges() const { return 2 * L * T; }
};

/// Z2 twist per edge.
struct Background {
    std::size_t L = 1;
    std::size_t T = 1;
    std::vector<std::uint8_t> horizontal;  // [t * L + x]
    std::vector<std::uint8_t> vertical;    // [t * L + x]

    static Background trivial(std::size_t l, std::size_t t) {
        return Background{l, t, std::vector<std::uint8_t>(l * t, 0), std::vector<std::uint8_t>(l * t, 0)};
    }

    static Background sector(std::size_t l, std::size_t t, int hx, int ht) {
        Background b = trivial(l, t);
        for (std::size_t r = 0; r < t; ++r) {
            b.horizontal[r * l + (l - 1)] = static_cast<std::uint8_t>(hx & 1);
        }
        for (std::size_t x = 0; x < l; ++x) {
            b.vertical[(t - 1) * l + x] ^= static_cast<std::uint8_t>(ht & 1);
        }
        return b;
    }

    /// Gauge transformation at one site: toggles the twist on every incident edge end.
    Background flipped_at(std::size_t x, std::size_t t) const {
        Background b = *this;
        b.horizontal[t * L + x] ^= 1;
        b.horizontal[t * L + (x + L - 1) % L] ^= 1;
        b.vertical[t * L + x] ^= 1;
        b.vertical[((t + T - 1) % T) * L + x] ^= 1;
        return b;
    }
};

/// theta_beta(s): 1 for s = +1, exp(-2 beta) for s = -1.
inline double weight(double beta, int s) {
    if (!(beta > 0.0)) {
        throw InputError("inverse temperature must be positive");
    }
    return s > 0 ? 1.0 : std::exp(-2.0 * beta);
}

inline constexpr std::size_t kMaxBruteForceSites = 20;
inline constexpr std::size_t kMaxTransferWidth = 12;

/// hist[k] = number of spin configurations with exactly k frustrated edges.
inline std::vector<std::uint64_t> frustration_histogram(std::size_t L, std::size_t T, const Background& bg) {
    const std::size_t n = L * T;
    if (n > kMaxBruteForceSites) {
        throw GuardExceeded("brute-force Ising sum limited to L*T <= 20, got " + std::to_string(n));
    }
    if (bg.L != L || bg.T != T) {
        throw InputError("background does not match the lattice");
    }
    struct Edge {
        std::uint32_t a;
        std::uint32_t b;
        std::uint32_t twist;
    };
    std::vector<Edge> edges;
    for (std::size_t t = 0; t < T; ++t) {
        for (std::size_t x = 0; x < L; ++x) {
            const auto site = static_cast<std::uint32_t>(t * L + x);
            edges.push_back({site, static_cast<std::uint32_t>(t * L + (x + 1) % L), bg.horizontal[t * L + x]});
            edges.push_back({site, static_cast<std::uint32_t>(((t + 1) % T) * L + x), bg.vertical[t * L + x]});
        }
    }
    std::vector<std::uint64_t> hist(edges.size() + 1, 0);
    const std::uint64_t configs = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < configs; ++s) {
        std::size_t frustrated = 0;
        for (const auto& e : edges) {
            frustrated += ((s >> e.a) ^ (s >> e.b) ^ e.twist) & 1U;
        }
        ++hist[frustrated];
    }
    return hist;
}

/// Sum over spin assignments of prod_edges theta(s_i s_j twist).
inline double partition_bruteforce(const IsingLattice& lat, const Background& bg) {
    const auto hist = frustration_histogram(lat.L, lat.T, bg);
    const double w = std::exp(-2.0 * lat.beta);
    double z = 0.0;
    for (std::size_t k = hist.size(); k-- > 0;) {
        z = z * w + static_cast<double>(hist[k]);
    }
    return z;
}

/// log Z, with log-sum-exp over the frustration histogram when beta > 5.
inline double log_partition(const IsingLattice& lat, const Background& bg) {
    if (lat.beta <= 5.0) {
        return std::log(partition_bruteforce(lat, bg));
    }
    const auto hist = frustration_histogram(lat.L, lat.T, bg);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < hist.size(); ++k) {
        if (hist[k] != 0) {
            best = std::max(best, std::log(static_cast<double>(hist[k])) - 2.0 * lat.beta * static_cast<double>(k));
        }
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < hist.size(); ++k) {
        if (hist[k] != 0) {
            acc += std::exp(std::log(static_cast<double>(hist[k])) - 2.0 * lat.beta * static_cast<double>(k) - best);
        }
    }
    return best + std::log(acc);
}

/// 2^L x 2^L row-to-row transfer matrix; bit x of a row index is 1 when spin x is -1.
inline Eigen::MatrixXd transfer_matrix(std::size_t L, double beta, int spatial_twist) {
    if (L < 1 || L > kMaxTransferWidth) {
        throw GuardExceeded("transfer matrix width must be in 1..12, got " + std::to_string(L));
    }
    const double w = weight(beta, -1);
    const std::size_t dim = std::size_t{1} << L;
    Eigen::MatrixXd m(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) {
        int row_frustrated = 0;
        for (std::size_t x = 0; x < L; ++x) {
            const std::size_t y = (x + 1) % L;
            const unsigned twist = (x == L - 1 && (spatial_twist & 1)) ? 1U : 0U;
            row_frustrated += static_cast<int>(((s >> x) ^ (s >> y) ^ twist) & 1U);
        }
        const double row_weight = std::pow(w, row_frustrated);
        for (std::size_t sp = 0; sp < dim; ++sp) {
            m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(sp)) =
                row_weight * std::pow(w, std::popcount(static_cast<std::uint64_t>(s ^ sp)));
        }
    }
    return m;
}

/// Z(torus, sector) with the transfer matrix of width L applied T times.
inline double partition_transfer_rows(std::size_t L, std::size_t T, double beta, int hx, int ht) {
    const Eigen::MatrixXd m = transfer_matrix(L, beta, hx);
    Eigen::MatrixXd p = m;
    for (std::size_t t = 1; t < T; ++t) {
        p = p * m;
    }
    const std::size_t dim = std::size_t{1} << L;
    double z = 0.0;
    for (std::size_t s = 0; s < dim; ++s) {
        const std::size_t partner = (ht & 1) ? (~s & (dim - 1)) : s;
        z += p(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(partner));
    }
    return z;
}

/// Z(torus, sector) = Tr(M_hx^T F^ht), run along the shorter side: when T < L the torus is
/// transposed (L <-> T, hx <-> ht).
inline double partition_transfer(const IsingLattice& lat, int hx, int ht) {
    if (lat.T < lat.L) {
        return partition_transfer_rows(lat.T, lat.L, lat.beta, ht, hx);
    }
    return partition_transfer_rows(lat.L, lat.T, lat.beta, hx, ht);
}

/// Sector values in the order (0,0), (0,1), (1,0), (1,1) for (hx, ht).
using SectorValues = std::array<double, 4>;

inline SectorValues sector_partitions(const IsingLattice& lat) {
    SectorValues z{};
    for (int hx = 0; hx < 2; ++hx) {
        for (int ht = 0; ht < 2; ++ht) {
            z[static_cast<std::size_t>(2 * hx + ht)] =
                lat.sites() <= kMaxBruteForceSites ? partition_bruteforce(lat, Background::sector(lat.L, lat.T, hx, ht))
                                                   : partition_transfer(lat, hx, ht);
        }
    }
    return z;
}

/// Discrete Fourier transform over H^1(T^2; Z2) with the intersection pairing
/// <a, h> = a_x h_t + a_t h_x, normalized by 1/|H^0| = 1/2. Entry 0 is the gauged
/// partition function; the other entries are its dual-symmetry sectors.
inline SectorValues gauge_sectors(const SectorValues& z) {
    SectorValues out{};
    for (int ax = 0; ax < 2; ++ax) {
        for (int at = 0; at < 2; ++at) {
            double acc = 0.0;
            for (int hx = 0; hx < 2; ++hx) {
                for (int ht = 0; ht < 2; ++ht) {
                    const int pairing = (ax * ht + at * hx) & 1;
                    acc += (pairing ? -1.0 : 1.0) * z[static_cast<std::size_t>(2 * hx + ht)];
                }
            }
            out[static_cast<std::size_t>(2 * ax + at)] = acc / 2.0;
        }
    }
    return out;
}

/// (1/2) * sum over the four holonomy sectors.
inline double gauged_partition(const IsingLattice& lat) { return gauge_sectors(sector_partitions(lat))[0]; }

/// Solves sinh(2 beta) sinh(2 beta_dual) = 1.
inline double kw_dual_beta(double beta) {
    if (!(beta > 0.0)) {
        throw InputError("inverse temperature must be positive");
    }
    return 0.5 * std::asinh(1.0 / std::sinh(2.0 * beta));
}

/// Self-dual point 1/2 ln(1 + sqrt 2).
inline double critical_beta() { return 0.5 * std::log(1.0 + std::sqrt(2.0)); }

/// gauged(beta) / [(1 + e^{-2 beta})^E Z(beta_dual)], E = 2LT. Independent of beta on a
/// fixed torus.
inline double kw_ratio(std::size_t L, std::size_t T, double beta) {
    const IsingLattice lat(L, T, beta);
    const IsingLattice dual(L, T, kw_dual_beta(beta));
    const double z_dual = sector_partitions(dual)[0];
    const double prefactor = std::pow(1.0 + std::exp(-2.0 * beta), static_cast<double>(lat.edges()));
    return gauged_partition(lat) / (prefactor * z_dual);
}

}  // namespace finsym::ising

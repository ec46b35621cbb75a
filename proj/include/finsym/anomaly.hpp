#pragma once

// Arithmetic of higher-form symmetry and anomalies: line lattices from quadratic
// refinements, minimal abelian TFTs, chiral defect fusion, the theta = pi obstruction,
// fractional instanton numbers and the Z_N Gauss sum.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "finsym/abelian_group.hpp"
#include "finsym/error.hpp"
#include "finsym/quadratic_form.hpp"
#include "finsym/rational.hpp"

namespace finsym {

/// Injective homomorphism A' -> A, given by the images of A''s invariant-factor generators.
class SubgroupEmbedding {
public:
    SubgroupEmbedding(FiniteAbelianGroup ambient, FiniteAbelianGroup sub, std::vector<FiniteAbelianGroup::Element> images)
        : ambient_(std::move(ambient)), sub_(std::move(sub)), images_(std::move(images)) {
        if (images_.size() != sub_.rank()) {
            throw InputError("embedding needs one image per generator of the subgroup");
        }
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i].size() != ambient_.rank()) {
                throw InputError("embedding image has wrong number of coordinates");
            }
            if (ambient_.scale(images_[i], sub_.invariant_factors()[i]) != ambient_.zero()) {
                throw InputError("embedding is not a homomorphism (generator order mismatch)");
            }
        }
        for (std::uint64_t idx = 1; idx < sub_.order(); ++idx) {
            if ((*this)(sub_.element(idx)) == ambient_.zero()) {
                throw InputError("embedding is not injective");
            }
        }
    }

    /// Factor-wise g_i -> (n_j / k_i) e_j, aligning the subgroup's factors with the
    /// trailing (largest) factors of the ambient group.
    static SubgroupEmbedding canonical(const FiniteAbelianGroup& ambient, const FiniteAbelianGroup& sub) {
        const auto& n = ambient.invariant_factors();
        const auto& k = sub.invariant_factors();
        if (k.size() > n.size()) {
            throw InputError(sub.name() + " does not embed in " + ambient.name());
        }
        const std::size_t shift = n.size() - k.size();
        std::vector<FiniteAbelianGroup::Element> images;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (n[shift + i] % k[i] != 0) {
                throw InputError(sub.name() + " does not embed factor-wise in " + ambient.name());
            }
            auto e = ambient.zero();
            e[shift + i] = n[shift + i] / k[i];
            images.push_back(std::move(e));
        }
        return SubgroupEmbedding(ambient, sub, std::move(images));
    }

    const FiniteAbelianGroup& ambient() const { return ambient_; }
    const FiniteAbelianGroup& sub() const { return sub_; }

    FiniteAbelianGroup::Element operator()(const FiniteAbelianGroup::Element& x) const {
        auto out = ambient_.zero();
        for (std::size_t i = 0; i < images_.size(); ++i) {
            out = ambient_.add(out, ambient_.scale(images_[i], x[i]));
        }
        return out;
    }

    FiniteAbelianGroup::Element generator(std::size_t i) const {
        auto g = sub_.zero();
        g[i] = 1;
        return g;
    }

private:
    FiniteAbelianGroup ambient_;
    FiniteAbelianGroup sub_;
    std::vector<FiniteAbelianGroup::Element> images_;
};

/// Allowed (m, e) labels, m in A and e in the dual of A (as character exponents).
struct LineLattice {
    FiniteAbelianGroup ambient;
    std::vector<std::pair<FiniteAbelianGroup::Element, FiniteAbelianGroup::Element>> pairs;

    bool closed_under_addition() const {
        std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
        for (const auto& [m, e] : pairs) {
            keys.insert({ambient.index(m), ambient.index(e)});
        }
        for (const auto& [m1, e1] : pairs) {
            for (const auto& [m2, e2] : pairs) {
                if (!keys.count({ambient.index(ambient.add(m1, m2)), ambient.index(ambient.add(e1, e2))})) {
                    return false;
                }
            }
        }
        return true;
    }
};

/// Selection rule m in A', e restricted to A' equal to -b(m, .), e free on A/A'.
inline LineLattice allowed_lines(const SubgroupEmbedding& embed, const QuadraticForm& q) {
    if (!(q.domain() == embed.sub())) {
        throw InputError("quadratic form is defined on " + q.domain().name() + ", not on A' = " + embed.sub().name());
    }
    const BihomomorphismTable b = bihomomorphism(q);
    const FiniteAbelianGroup& a = embed.ambient();
    const FiniteAbelianGroup& ap = embed.sub();
    LineLattice lattice{a, {}};
    const auto chars = characters(a);
    // chi(i(g_j)) for every character and generator of A'.
    std::vector<std::uint64_t> gen_index(ap.rank());
    std::vector<std::vector<Phase>> on_gens(chars.size(), std::vector<Phase>(ap.rank()));
    for (std::size_t j = 0; j < ap.rank(); ++j) {
        const auto x = embed.generator(j);
        gen_index[j] = ap.index(x);
        const auto ix = embed(x);
        for (std::size_t c = 0; c < chars.size(); ++c) {
            on_gens[c][j] = chars[c](ix);
        }
    }
    for (std::uint64_t mi = 0; mi < ap.order(); ++mi) {
        const auto m = embed(ap.element(mi));
        for (std::size_t c = 0; c < chars.size(); ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < ap.rank() && ok; ++j) {
                ok = on_gens[c][j] == -b[mi][gen_index[j]];
            }
            if (ok) {
                lattice.pairs.emplace_back(m, chars[c].exponents());
            }
        }
    }
    if (lattice.pairs.size() != a.order() || !lattice.closed_under_addition()) {
        throw std::logic_error("line lattice is not a subgroup of order |A|");
    }
    return lattice;
}

/// Minimal abelian TFT A^{N,p}, gcd(p, N) = 1.
struct MinimalTFT {
    std::int64_t N = 1;
    std::int64_t p = 1;

    MinimalTFT(std::int64_t n, std::int64_t p_) : N(n), p(p_) {
        if (N < 1) {
            throw InputError("minimal TFT needs N >= 1");
        }
        if (std::gcd(p, N) != 1) {
            throw InputError("minimal TFT needs gcd(p, N) = 1");
        }
        p = ((p % N) + N) % N;
    }

    /// theta_k = p k^2 / (2N) mod 1, from Theta(L^k) = exp(i pi p k^2 / N).
    Phase spin(std::int64_t k) const { return Phase(p * k * k, 2 * N); }
    std::int64_t charge(std::int64_t k) const { return ((p * k) % N + N) % N; }
    Phase braiding(std::int64_t j, std::int64_t k) const { return Phase(p * j * k, N); }
};

struct AnyonRow {
    std::int64_t k = 0;
    Phase spin;
    std::int64_t charge = 0;
};

struct AnyonTable {
    MinimalTFT theory;
    std::vector<AnyonRow> anyons;
    std::vector<std::vector<Phase>> braiding;
};

/// Rows indexed strictly by k in [0, N).
inline AnyonTable minimal_tft_data(const MinimalTFT& t) {
    AnyonTable table{t, {}, {}};
    for (std::int64_t k = 0; k < t.N; ++k) {
        table.anyons.push_back(AnyonRow{k, t.spin(k), t.charge(k)});
        std::vector<Phase> row;
        for (std::int64_t j = 0; j < t.N; ++j) {
            row.push_back(t.braiding(k, j));
        }
        table.braiding.push_back(std::move(row));
    }
    return table;
}

/// Value of the minimal TFT on S^3: 1/sqrt(N).
inline double defect_quantum_dim(std::int64_t n) {
    if (n < 1) {
        throw InputError("N must be >= 1");
    }
    return 1.0 / std::sqrt(static_cast<double>(n));
}

/// Action of the N-defect on the flux-m sector of S^1 x S^2: 1 if m = 0 mod N, else 0.
inline int flux_projector_action(std::int64_t n, std::int64_t m) {
    if (n < 1) {
        throw InputError("N must be >= 1");
    }
    return m % n == 0 ? 1 : 0;
}

/// Reduced angle p/N in Q/Z labelling a chiral defect.
using ChiralAngle = Phase;

struct ChiralFusion {
    ChiralAngle result;
    std::int64_t condensed_order = 1;
};

/// p1/N1 + p2/N2 mod 1, obtained by gauging a Z_g with g = L / den(result),
/// L = lcm(N1, N2) (g = gcd(p1 + p2, N) when N1 = N2 = N).
inline ChiralFusion chiral_fuse(const ChiralAngle& a, const ChiralAngle& b) {
    const ChiralAngle r = a + b;
    const std::int64_t l = std::lcm(a.den(), b.den());
    return ChiralFusion{r, l / r.den()};
}

struct ThetaPiVerdict {
    bool anomalous = false;
    std::optional<std::int64_t> counterterm;  // k with 2k = N - 1
};

/// Time reversal at theta = pi needs a counterterm k with 2k = N - 1: impossible for even N.
inline ThetaPiVerdict ym_theta_pi_anomaly(std::int64_t n) {
    if (n < 2) {
        throw InputError("theta = pi anomaly needs N >= 2");
    }
    if (n % 2 == 0) {
        return ThetaPiVerdict{true, std::nullopt};
    }
    return ThetaPiVerdict{false, (n - 1) / 2};
}

/// Fractional part of the instanton number, -(N-1) P / (2N) mod 1, with P the value of the
/// Pontryagin square taken mod gcd(2,N) N. On spin manifolds with N even, P must be even.
inline Phase fractional_instanton(std::int64_t n, std::int64_t pontryagin, bool spin = false) {
    if (n < 1) {
        throw InputError("N must be >= 1");
    }
    const std::int64_t modulus = std::gcd<std::int64_t>(2, n) * n;
    const std::int64_t P = ((pontryagin % modulus) + modulus) % modulus;
    if (spin && n % 2 == 0 && P % 2 != 0) {
        throw InputError("on a spin manifold with N even the Pontryagin square is even");
    }
    return Phase(-(n - 1) * P, 2 * n);
}

struct GaussSum {
    Integer exact;
    std::complex<double> direct;
};

inline std::int64_t inverse_mod(std::int64_t p, std::int64_t n) {
    if (n == 1) {
        return 0;
    }
    std::int64_t r0 = n;
    std::int64_t r1 = ((p % n) + n) % n;
    std::int64_t t0 = 0;
    std::int64_t t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    if (r0 != 1) {
        throw InputError(std::to_string(p) + " is not invertible mod " + std::to_string(n));
    }
    return ((t0 % n) + n) % n;
}

/// sum_{b,c in Z_N} exp(2 pi i p^{-1} b c / N). `exact` uses that the c-sum vanishes
/// unless p^{-1} b = 0 mod N; `direct` is the double sum in floating point.
inline GaussSum gauss_sum(std::int64_t n, std::int64_t p) {
    if (n < 1) {
        throw InputError("N must be >= 1");
    }
    const std::int64_t pinv = inverse_mod(p, n);
    Integer exact = 0;
    std::complex<double> direct = 0.0;
    for (std::int64_t b = 0; b < n; ++b) {
        if ((pinv * b) % n == 0) {
            exact += n;
        }
        for (std::int64_t c = 0; c < n; ++c) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((pinv * b * c) % n) / static_cast<double>(n);
            direct += std::polar(1.0, angle);
        }
    }
    return GaussSum{exact, direct};
}

}  // namespace finsym

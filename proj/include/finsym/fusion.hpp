#pragma once

// Fusion rings (Grothendieck rings of fusion categories) and the dimension-based
// obstructions to a fiber functor or to a "square root" factorization.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "finsym/error.hpp"
#include "finsym/finite_group.hpp"

namespace finsym {

/// Fusion ring with simples labels[i], N[i][j][k] = N_{ij}^k, a unit and a duality involution.
/// Construction checks the unit law, associativity and N_{ij}^unit = delta_{j, dual(i)}.
class FusionRing {
public:
    using Tensor = std::vector<std::vector<std::vector<std::int64_t>>>;

    FusionRing(std::vector<std::string> labels, std::size_t unit, Tensor n, std::vector<std::size_t> dual)
        : labels_(std::move(labels)), unit_(unit), n_(std::move(n)), dual_(std::move(dual)) {
        validate();
    }

    std::size_t rank() const { return labels_.size(); }
    std::size_t unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::size_t>& dual() const { return dual_; }
    const Tensor& tensor() const { return n_; }
    std::int64_t N(std::size_t i, std::size_t j, std::size_t k) const { return n_[i][j][k]; }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i] == label) {
                return i;
            }
        }
        throw InputError("no simple object named '" + label + "'");
    }

    /// Left-multiplication matrix of simple i: (N_i)_{jk} = N_{ij}^k.
    std::vector<std::vector<std::int64_t>> fusion_matrix(std::size_t i) const { return n_[i]; }

private:
    void validate() const {
        const std::size_t r = labels_.size();
        if (r == 0) {
            throw InputError("fusion ring needs at least one simple object");
        }
        if (unit_ >= r) {
            throw InputError("unit index out of range");
        }
        if (n_.size() != r || dual_.size() != r) {
            throw InputError("fusion tensor and duality must match the number of labels");
        }
        for (const auto& a : n_) {
            if (a.size() != r) {
                throw InputError("fusion tensor has wrong shape");
            }
            for (const auto& b : a) {
                if (b.size() != r) {
                    throw InputError("fusion tensor has wrong shape");
                }
                for (auto v : b) {
                    if (v < 0) {
                        throw InputError("fusion coefficients must be nonnegative");
                    }
                }
            }
        }
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) {
                const std::int64_t d = j == k ? 1 : 0;
                if (n_[unit_][j][k] != d || n_[j][unit_][k] != d) {
                    throw InputError("unit law fails for '" + labels_[j] + "'");
                }
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (dual_[i] >= r || dual_[dual_[i]] != i) {
                throw InputError("duality is not an involution");
            }
            for (std::size_t j = 0; j < r; ++j) {
                if (n_[i][j][unit_] != (j == dual_[i] ? 1 : 0)) {
                    throw InputError("N_{" + labels_[i] + "," + labels_[j] + "}^1 is inconsistent with the duality");
                }
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                for (std::size_t k = 0; k < r; ++k) {
                    for (std::size_t l = 0; l < r; ++l) {
                        std::int64_t lhs = 0;
                        std::int64_t rhs = 0;
                        for (std::size_t m = 0; m < r; ++m) {
                            lhs += n_[i][j][m] * n_[m][k][l];
                            rhs += n_[j][k][m] * n_[i][m][l];
                        }
                        if (lhs != rhs) {
                            throw InputError("fusion ring is not associative at (" + labels_[i] + "," + labels_[j] +
                                             "," + labels_[k] + ")");
                        }
                    }
                }
            }
        }
    }

    std::vector<std::string> labels_;
    std::size_t unit_;
    Tensor n_;
    std::vector<std::size_t> dual_;
};

/// Nonnegative integer combination of simples.
class RingElement {
public:
    RingElement(std::shared_ptr<const FusionRing> ring, std::vector<std::int64_t> coefficients)
        : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
        if (coeffs_.size() != ring_->rank()) {
            throw InputError("ring element needs one coefficient per simple object");
        }
    }

    static RingElement simple(std::shared_ptr<const FusionRing> ring, std::size_t i) {
        std::vector<std::int64_t> c(ring->rank(), 0);
        c.at(i) = 1;
        return RingElement(ring, std::move(c));
    }

    const FusionRing& ring() const { return *ring_; }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    RingElement operator*(const RingElement& o) const {
        std::vector<std::int64_t> c(ring_->rank(), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (coeffs_[i] == 0 || o.coeffs_[j] == 0) {
                    continue;
                }
                for (std::size_t k = 0; k < c.size(); ++k) {
                    c[k] += coeffs_[i] * o.coeffs_[j] * ring_->N(i, j, k);
                }
            }
        }
        return RingElement(ring_, std::move(c));
    }

    RingElement operator*(std::int64_t s) const {
        auto c = coeffs_;
        for (auto& x : c) {
            x *= s;
        }
        return RingElement(ring_, std::move(c));
    }

    RingElement operator+(const RingElement& o) const {
        auto c = coeffs_;
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] += o.coeffs_[i];
        }
        return RingElement(ring_, std::move(c));
    }

    bool operator==(const RingElement& o) const { return coeffs_ == o.coeffs_; }

    /// "1 + 2 g" style, using labels.
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += " + ";
            }
            if (coeffs_[i] != 1) {
                s += std::to_string(coeffs_[i]) + " ";
            }
            s += ring_->labels()[i];
        }
        return s.empty() ? "0" : s;
    }

private:
    std::shared_ptr<const FusionRing> ring_;
    std::vector<std::int64_t> coeffs_;
};

/// One simple per group element, L_g L_h = L_{gh}, dual = inverse. Labels are the
/// element indices, with the identity called "1".
inline FusionRing group_ring(const FiniteGroup& g) {
    const std::size_t n = g.order();
    FusionRing::Tensor t(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
    std::vector<std::string> labels;
    std::vector<std::size_t> dual;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(a == g.identity() ? "1" : "g" + std::to_string(a));
        dual.push_back(g.inv(a));
        for (std::size_t b = 0; b < n; ++b) {
            t[a][b][g.mul(a, b)] = 1;
        }
    }
    return FusionRing(std::move(labels), g.identity(), std::move(t), std::move(dual));
}

/// Tambara-Yamagami ring of an abelian group: the group ring plus one self-dual simple "N"
/// (last index) with L_g N = N L_g = N and N N = sum_g L_g.
inline FusionRing tambara_yamagami(const FiniteGroup& g) {
    if (!g.is_abelian()) {
        throw InputError("Tambara-Yamagami ring needs an abelian group");
    }
    const std::size_t n = g.order();
    const std::size_t r = n + 1;
    const std::size_t dual_line = n;
    FusionRing::Tensor t(r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0)));
    std::vector<std::string> labels;
    std::vector<std::size_t> dual;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(a == g.identity() ? "1" : "g" + std::to_string(a));
        dual.push_back(g.inv(a));
        for (std::size_t b = 0; b < n; ++b) {
            t[a][b][g.mul(a, b)] = 1;
        }
        t[a][dual_line][dual_line] = 1;
        t[dual_line][a][dual_line] = 1;
        t[dual_line][dual_line][a] = 1;
    }
    labels.push_back("N");
    dual.push_back(dual_line);
    return FusionRing(std::move(labels), g.identity(), std::move(t), std::move(dual));
}

/// Perron-Frobenius dimension; `square` is set when d^2 is (to 1e-9) an integer.
struct PfDimension {
    double value = 0.0;
    std::optional<std::int64_t> square;

    bool is_integer() const { return std::abs(value - std::round(value)) <= 1e-9; }

    /// "1", "2", "sqrt(2)", "(1+sqrt(5))/2" or a decimal.
    std::string exact_str() const {
        if (is_integer()) {
            return std::to_string(static_cast<std::int64_t>(std::llround(value)));
        }
        if (square) {
            return "sqrt(" + std::to_string(*square) + ")";
        }
        // d^2 = t d + n with small integers t, n: d = (t + sqrt(t^2 + 4n)) / 2.
        for (std::int64_t t = 1; t <= 32; ++t) {
            const double n = value * value - static_cast<double>(t) * value;
            if (std::abs(n - std::round(n)) <= 1e-9) {
                const std::int64_t disc = t * t + 4 * std::llround(n);
                return "(" + std::to_string(t) + "+sqrt(" + std::to_string(disc) + "))/2";
            }
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.15g", value);
        return buf;
    }
};

struct PfOptions {
    double tolerance = 1e-12;
    std::size_t max_iterations = 100000;
};

/// Dimensions d_i = largest eigenvalue of N_i. Since N_i d = d_i d for the dimension
/// vector d, it is computed once as the Perron-Frobenius eigenvector of I + sum_i N_i,
/// normalized to 1 at the unit. Permutation fusion matrices
/// give d_i = 1 exactly.
inline std::vector<PfDimension> pf_dimensions(const FusionRing& ring, const PfOptions& opt = {}) {
    const std::size_t r = ring.rank();
    std::vector<std::vector<double>> s(r, std::vector<double>(r, 0.0));
    for (std::size_t i = 0; i < r; ++i) {
        s[i][i] += 1.0;
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) {
                s[j][k] += static_cast<double>(ring.N(i, j, k));
            }
        }
    }
    std::vector<double> v(r, 1.0);
    bool converged = false;
    // After reaching the tolerance keep iterating until the vector stops changing, so the
    // reported dimensions are accurate to rounding rather than to the stopping threshold.
    std::size_t polish = 0;
    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
        std::vector<double> w(r, 0.0);
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) {
                w[j] += s[j][k] * v[k];
            }
        }
        double norm = 0.0;
        for (double x : w) {
            norm = std::max(norm, std::abs(x));
        }
        double diff = 0.0;
        for (std::size_t k = 0; k < r; ++k) {
            w[k] /= norm;
            diff = std::max(diff, std::abs(w[k] - v[k]));
        }
        v = std::move(w);
        if (diff <= opt.tolerance) {
            converged = true;
        }
        if (converged && (diff == 0.0 || ++polish >= 1000)) {
            break;
        }
    }
    if (!converged) {
        throw std::runtime_error("Perron-Frobenius power iteration did not converge");
    }
    if (v[ring.unit()] <= 0.0) {
        throw InputError("fusion ring is not connected through its unit");
    }
    const double scale = v[ring.unit()];
    std::vector<PfDimension> dims(r);
    for (std::size_t i = 0; i < r; ++i) {
        bool permutation = true;
        for (std::size_t j = 0; j < r && permutation; ++j) {
            std::int64_t row = 0;
            std::int64_t col = 0;
            for (std::size_t k = 0; k < r; ++k) {
                row += ring.N(i, j, k);
                col += ring.N(i, k, j);
            }
            permutation = row == 1 && col == 1;
        }
        const double d = permutation ? 1.0 : v[i] / scale;
        std::optional<std::int64_t> sq;
        const double d2 = d * d;
        if (std::abs(d2 - std::round(d2)) <= 1e-9) {
            sq = static_cast<std::int64_t>(std::llround(d2));
        }
        dims[i] = PfDimension{d, sq};
    }
    return dims;
}

struct FiberFunctorVerdict {
    bool possible = true;
    std::optional<std::size_t> witness;  // simple with non-integer dimension
    std::optional<PfDimension> witness_dim;
};

/// A fiber functor forces every PF dimension to be a nonnegative integer. "possible"
/// only means this test found no obstruction.
inline FiberFunctorVerdict fiber_functor_obstruction(const FusionRing& ring) {
    const auto dims = pf_dimensions(ring);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i].is_integer()) {
            continue;
        }
        // Exact confirmation when d^2 = k: d is an integer iff k is a perfect square.
        if (dims[i].square) {
            const auto k = *dims[i].square;
            const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(k))));
            if (root * root == k) {
                continue;
            }
        }
        return FiberFunctorVerdict{false, i, dims[i]};
    }
    return FiberFunctorVerdict{};
}

struct SquareRootVerdict {
    bool no_sqrt = false;
    std::string reason;
};

/// T* (x) T has rank(T)^2 simples, so a ring whose rank is not a perfect square admits
/// no such factorization. Otherwise the test is inconclusive.
inline SquareRootVerdict square_root_obstruction(const FusionRing& target) {
    const auto r = static_cast<std::int64_t>(target.rank());
    auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(r))));
    while (root * root > r) {
        --root;
    }
    while ((root + 1) * (root + 1) <= r) {
        ++root;
    }
    if (root * root == r) {
        return SquareRootVerdict{false, "rank " + std::to_string(r) + " = " + std::to_string(root) + "^2"};
    }
    return SquareRootVerdict{true, "rank " + std::to_string(r) + " is not a perfect square"};
}

/// sum_g L_g in the group ring of G.
inline RingElement quotient_defect_composition(const FiniteGroup& g) {
    auto ring = std::make_shared<const FusionRing>(group_ring(g));
    const std::size_t n = ring->rank();
    return RingElement(std::move(ring), std::vector<std::int64_t>(n, 1));
}

}  // namespace finsym

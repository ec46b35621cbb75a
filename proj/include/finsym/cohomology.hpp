#pragma once

// Cohomology of finite cell complexes with coefficients in a finite abelian group.
//
// The SNF route works one cyclic factor Z_n of the coefficients at a time. For
// H^q(C; Z_n) = ker(delta^q mod n) / im(delta^{q-1} mod n) both groups are lifted to
// lattices in Z^{c_q} containing n Z^{c_q}:
//   K = { x : delta^q x = 0 mod n }   read off the SNF  U delta^q V = D  as
//       K = V diag(k_i) Z^{c_q},  k_i = n / gcd(d_i, n)  (k_i = 1 past the rank)
//   I = im(delta^{q-1}) + n Z^{c_q}
// and H = K / I is the cokernel of I written in the basis of K, whose invariant factors
// come from a second SNF.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "finsym/abelian_group.hpp"
#include "finsym/chain_complex.hpp"
#include "finsym/error.hpp"
#include "finsym/int_matrix.hpp"

namespace finsym {

/// A cochain with coefficients in A: values[cell * rank(A) + factor].
using Cochain = std::vector<std::int64_t>;

struct CohomologyGroup {
    std::size_t degree = 0;
    FiniteAbelianGroup group;
    std::optional<std::vector<Cochain>> representatives;

    std::uint64_t order() const { return group.order(); }
};

/// Cyclic orders (> 1) whose product is H^q(C; Z_n).
inline std::vector<std::int64_t> cyclic_cohomology_orders(const ChainComplex& c, std::int64_t n, std::size_t q) {
    const std::size_t cq = c.cells(q);
    if (cq == 0 || n == 1) {
        return {};
    }
    const Integer N(n);
    const SmithForm snf = smith_normal_form(c.coboundary(q));
    const std::size_t r = snf.rank();
    std::vector<Integer> k(cq, Integer(1));
    for (std::size_t i = 0; i < r; ++i) {
        k[i] = N / boost::multiprecision::gcd(snf.D(i, i), N);
    }

    // Generators of I: columns of delta^{q-1}, then n e_j.
    const IntMatrix prev = c.coboundary(q - (q > 0 ? 1 : 0));
    const std::size_t prev_cols = q > 0 ? prev.cols() : 0;
    IntMatrix rel(cq, prev_cols + cq);
    for (std::size_t j = 0; j < prev_cols + cq; ++j) {
        // y = V^{-1} g, then divide coordinate i by k_i.
        for (std::size_t i = 0; i < cq; ++i) {
            Integer y = 0;
            if (j < prev_cols) {
                for (std::size_t t = 0; t < cq; ++t) {
                    y += snf.V_inv(i, t) * prev(t, j);
                }
            } else {
                y = N * snf.V_inv(i, j - prev_cols);
            }
            if (y % k[i] != 0) {
                throw std::logic_error("cohomology: image not contained in kernel lattice");
            }
            rel(i, j) = y / k[i];
        }
    }
    std::vector<std::int64_t> orders;
    const SmithForm quot = smith_normal_form(rel);
    for (std::size_t i = 0; i < cq; ++i) {
        const Integer d = i < std::min(quot.D.rows(), quot.D.cols()) ? quot.D(i, i) : Integer(0);
        if (d == 0) {
            throw std::logic_error("cohomology with finite coefficients came out infinite");
        }
        if (d > 1) {
            orders.push_back(d.convert_to<std::int64_t>());
        }
    }
    return orders;
}

/// H^q(C; A) assembled factor-wise from the cyclic factors of A.
inline CohomologyGroup cohomology(const ChainComplex& c, const FiniteAbelianGroup& a, std::size_t q) {
    std::vector<std::int64_t> orders;
    if (q <= c.top_dim()) {
        for (auto n : a.invariant_factors()) {
            const auto part = cyclic_cohomology_orders(c, n, q);
            orders.insert(orders.end(), part.begin(), part.end());
        }
    }
    return CohomologyGroup{q, FiniteAbelianGroup::from_cyclic_orders(orders), std::nullopt};
}

/// Cohomology of the pair (W, S): cochains on W vanishing on the image of S.
inline CohomologyGroup relative_cohomology(const SubcomplexMap& sub, const FiniteAbelianGroup& a, std::size_t q) {
    return cohomology(quotient_complex(sub), a, q);
}

/// Every cohomology class of H^q(C; A) with its lexicographically smallest representative.
///
/// Cochains are encoded as mixed-radix integers, cell 0 most significant and, within a
/// cell, factor 0 most significant; increasing code is lexicographic order of values.
class CocycleClasses {
public:
    CocycleClasses(const ChainComplex& c, FiniteAbelianGroup a, std::size_t q, const EnumGuard& guard = {})
        : coeffs_(std::move(a)), degree_(q), cells_(c.cells(q)) {
        const std::uint64_t order = coeffs_.order();
        guard.require_power(order, cells_, "cochains in degree " + std::to_string(q));
        const std::size_t prev_cells = q > 0 ? c.cells(q - 1) : 0;
        guard.require_power(order, prev_cells, "cochains in degree " + std::to_string(q - (q > 0 ? 1 : 0)));

        const auto next = to_small(c.boundary(q + 1));  // c_q x c_{q+1}
        const auto cur = to_small(c.boundary(q));       // c_{q-1} x c_q

        // Coboundaries delta g, g in C^{q-1}.
        std::vector<std::uint64_t> coboundaries;
        {
            const std::uint64_t total = pow_u(order, prev_cells);
            std::vector<bool> seen(pow_u(order, cells_), false);
            for (std::uint64_t code = 0; code < total; ++code) {
                const Cochain g = decode(code, prev_cells);
                const Cochain dg = apply_coboundary(g, cur, prev_cells, cells_);
                const std::uint64_t e = encode(dg);
                if (!seen[e]) {
                    seen[e] = true;
                    coboundaries.push_back(e);
                }
            }
            if (q == 0) {
                coboundaries.assign(1, 0);
            }
        }
        coboundary_count_ = coboundaries.size();

        const std::uint64_t total = pow_u(order, cells_);
        const std::size_t next_cells = c.cells(q + 1);
        for (std::uint64_t code = 0; code < total; ++code) {
            const Cochain f = decode(code, cells_);
            if (!is_zero(apply_coboundary(f, next, cells_, next_cells))) {
                continue;
            }
            ++cocycle_count_;
            if (class_of_.count(code)) {
                continue;
            }
            const std::size_t id = reps_.size();
            reps_.push_back(f);
            for (std::uint64_t b : coboundaries) {
                class_of_[encode(add(f, decode(b, cells_)))] = id;
            }
        }
    }

    const FiniteAbelianGroup& coefficients() const { return coeffs_; }
    std::size_t degree() const { return degree_; }
    std::size_t cells() const { return cells_; }
    std::size_t size() const { return reps_.size(); }
    const std::vector<Cochain>& representatives() const { return reps_; }
    std::uint64_t cocycle_count() const { return cocycle_count_; }
    std::uint64_t coboundary_count() const { return coboundary_count_; }

    /// Class index of a cocycle; throws if it is not a cocycle.
    std::size_t class_of(const Cochain& z) const {
        const auto it = class_of_.find(encode(z));
        if (it == class_of_.end()) {
            throw InputError("cochain is not a cocycle");
        }
        return it->second;
    }

    Cochain add(const Cochain& x, const Cochain& y) const {
        Cochain z(x.size());
        const std::size_t k = coeffs_.rank();
        for (std::size_t i = 0; i < x.size(); ++i) {
            z[i] = coeffs_.reduce(x[i] + y[i], i % k);
        }
        return z;
    }

    /// Value of a cochain on one cell, as an element of A.
    FiniteAbelianGroup::Element value(const Cochain& f, std::size_t cell) const {
        const std::size_t k = coeffs_.rank();
        return FiniteAbelianGroup::Element(f.begin() + static_cast<std::ptrdiff_t>(cell * k),
                                           f.begin() + static_cast<std::ptrdiff_t>((cell + 1) * k));
    }

private:
    using SmallMatrix = std::vector<std::vector<std::int64_t>>;

    static SmallMatrix to_small(const IntMatrix& m) {
        SmallMatrix s(m.rows(), std::vector<std::int64_t>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                s[i][j] = m(i, j).convert_to<std::int64_t>();
            }
        }
        return s;
    }

    static std::uint64_t pow_u(std::uint64_t b, std::size_t e) {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < e; ++i) {
            r *= b;
        }
        return r;
    }

    // (delta f)(s) = sum_t d(t, s) f(t), with d the boundary from degree+1 cells s to cells t.
    Cochain apply_coboundary(const Cochain& f, const SmallMatrix& d, std::size_t from, std::size_t to) const {
        const std::size_t k = coeffs_.rank();
        Cochain out(to * k, 0);
        for (std::size_t s = 0; s < to; ++s) {
            for (std::size_t t = 0; t < from; ++t) {
                const std::int64_t coef = d[t][s];
                if (coef == 0) {
                    continue;
                }
                for (std::size_t i = 0; i < k; ++i) {
                    out[s * k + i] += coef * f[t * k + i];
                }
            }
            for (std::size_t i = 0; i < k; ++i) {
                out[s * k + i] = coeffs_.reduce(out[s * k + i], i);
            }
        }
        return out;
    }

    static bool is_zero(const Cochain& f) {
        for (auto v : f) {
            if (v != 0) {
                return false;
            }
        }
        return true;
    }

    std::uint64_t encode(const Cochain& f) const {
        const std::size_t k = coeffs_.rank();
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            code = code * static_cast<std::uint64_t>(coeffs_.invariant_factors()[i % k]) +
                   static_cast<std::uint64_t>(f[i]);
        }
        return code;
    }

    Cochain decode(std::uint64_t code, std::size_t cells) const {
        const std::size_t k = coeffs_.rank();
        Cochain f(cells * k);
        for (std::size_t i = f.size(); i-- > 0;) {
            const auto n = static_cast<std::uint64_t>(coeffs_.invariant_factors()[i % k]);
            f[i] = static_cast<std::int64_t>(code % n);
            code /= n;
        }
        return f;
    }

    FiniteAbelianGroup coeffs_;
    std::size_t degree_;
    std::size_t cells_;
    std::vector<Cochain> reps_;
    std::unordered_map<std::uint64_t, std::size_t> class_of_;
    std::uint64_t cocycle_count_ = 0;
    std::uint64_t coboundary_count_ = 0;
};

inline CocycleClasses enumerate_cocycles(const ChainComplex& c, const FiniteAbelianGroup& a, std::size_t q,
                                         const EnumGuard& guard = {}) {
    return CocycleClasses(c, a, q, guard);
}

/// Induced map on classes H^q(W; A) -> H^q(S; A): image[i] is the class of the
/// restriction of W's i-th class.
struct RestrictionMap {
    CocycleClasses source;
    CocycleClasses target;
    std::vector<std::size_t> image;
};

inline Cochain restrict_cochain(const Cochain& f, const SubcomplexMap& sub, std::size_t q, std::size_t rank) {
    const auto img = sub.image(q);
    Cochain out(img.size() * rank);
    for (std::size_t s = 0; s < img.size(); ++s) {
        for (std::size_t i = 0; i < rank; ++i) {
            out[s * rank + i] = f[img[s] * rank + i];
        }
    }
    return out;
}

inline RestrictionMap restriction_map(const SubcomplexMap& sub, const FiniteAbelianGroup& a, std::size_t q,
                                      const EnumGuard& guard = {}) {
    CocycleClasses w(sub.target(), a, q, guard);
    CocycleClasses s(sub.source(), a, q, guard);
    std::vector<std::size_t> image;
    image.reserve(w.size());
    for (const auto& rep : w.representatives()) {
        image.push_back(s.class_of(restrict_cochain(rep, sub, q, a.rank())));
    }
    return RestrictionMap{std::move(w), std::move(s), std::move(image)};
}

/// A complex is treated as a closed manifold when every component carries a mod-2
/// fundamental class: |H^top(C; Z2)| = |H^0(C; Z2)|.
inline bool is_closed(const ChainComplex& c) {
    if (c.total_cells() == 0) {
        return true;
    }
    const FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    return cohomology(c, z2, c.top_dim()).order() == cohomology(c, z2, 0).order();
}

}  // namespace finsym

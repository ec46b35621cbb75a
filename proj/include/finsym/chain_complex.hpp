#pragma once

// Finite cell complexes over Z, preset manifolds and bordisms between circles.
//
// Preset cell structures (boundary matrices are columns = cells of degree k, rows = cells
// of degree k-1):
//   point        1 vertex
//   sphere(n)    one 0-cell and one n-cell, all boundaries zero; sphere(0) is two points
//   interval     vertices a, b and edge I with dI = b - a
//   torus(n)     product of n circles
//   surface(g)   one vertex, edges a_1, b_1, ..., a_g, b_g, one face; both boundaries zero
//   rp(n)        one cell per degree, d_k = 1 + (-1)^k
//   klein        one vertex, edges a, b, face with word a b a^-1 b, so dF = 2b
//   disk         vertex p, loop c, face D with dD = c
//   pants        vertices p1 p2 p3, loops c1 c2 c3 (c_i based at p_i), arcs a: p1->p3 and
//                b: p2->p3, face F with word a^-1 c1 a b^-1 c2 b c3^-1, so dF = c1 + c2 - c3

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finsym/error.hpp"
#include "finsym/int_matrix.hpp"

namespace finsym {

class ChainComplex {
public:
    ChainComplex() : cells_{0} {}

    /// boundaries[k-1] is d_k: C_k -> C_{k-1}, of shape cells[k-1] x cells[k].
    ChainComplex(std::vector<std::size_t> cells, std::vector<IntMatrix> boundaries,
                 std::vector<std::vector<std::string>> labels = {})
        : cells_(std::move(cells)), boundaries_(std::move(boundaries)), labels_(std::move(labels)) {
        if (cells_.empty()) {
            throw InputError("chain complex needs at least degree 0");
        }
        if (boundaries_.size() + 1 != cells_.size()) {
            throw InputError("chain complex needs exactly top_dim boundary matrices");
        }
        for (std::size_t k = 1; k < cells_.size(); ++k) {
            const auto& d = boundaries_[k - 1];
            if (d.rows() != cells_[k - 1] || d.cols() != cells_[k]) {
                throw InputError("boundary d_" + std::to_string(k) + " has shape " + std::to_string(d.rows()) + "x" +
                                 std::to_string(d.cols()) + ", expected " + std::to_string(cells_[k - 1]) + "x" +
                                 std::to_string(cells_[k]));
            }
        }
        for (std::size_t k = 2; k < cells_.size(); ++k) {
            if (!(boundaries_[k - 2] * boundaries_[k - 1]).is_zero()) {
                throw InputError("d_" + std::to_string(k - 1) + " o d_" + std::to_string(k) + " != 0");
            }
        }
        if (labels_.empty()) {
            for (std::size_t k = 0; k < cells_.size(); ++k) {
                std::vector<std::string> l;
                for (std::size_t j = 0; j < cells_[k]; ++j) {
                    l.push_back("e" + std::to_string(k) + "_" + std::to_string(j));
                }
                labels_.push_back(std::move(l));
            }
        } else if (labels_.size() != cells_.size()) {
            throw InputError("labels must be given for every degree");
        }
    }

    std::size_t top_dim() const { return cells_.size() - 1; }
    const std::vector<std::size_t>& cells_per_dim() const { return cells_; }
    std::size_t cells(std::size_t k) const { return k < cells_.size() ? cells_[k] : 0; }
    std::size_t total_cells() const {
        std::size_t n = 0;
        for (auto c : cells_) {
            n += c;
        }
        return n;
    }
    const std::vector<std::vector<std::string>>& labels() const { return labels_; }

    /// d_k as a cells(k-1) x cells(k) matrix; empty shape outside the complex.
    IntMatrix boundary(std::size_t k) const {
        if (k >= 1 && k < cells_.size()) {
            return boundaries_[k - 1];
        }
        return IntMatrix(k == 0 ? 0 : cells(k - 1), cells(k));
    }

    /// delta^k = d_{k+1}^T: C^k -> C^{k+1}.
    IntMatrix coboundary(std::size_t k) const { return boundary(k + 1).transpose(); }

    long long euler_characteristic() const {
        long long chi = 0;
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            chi += (k % 2 ? -1 : 1) * static_cast<long long>(cells_[k]);
        }
        return chi;
    }

    bool operator==(const ChainComplex& o) const { return cells_ == o.cells_ && boundaries_ == o.boundaries_; }

private:
    std::vector<std::size_t> cells_;
    std::vector<IntMatrix> boundaries_;
    std::vector<std::vector<std::string>> labels_;
};

/// Cellular inclusion of `source` into `target`: cell j of degree k goes to cell
/// inclusion[k][j] of the target, with sign +1.
class SubcomplexMap {
public:
    SubcomplexMap(ChainComplex source, ChainComplex target, std::vector<std::vector<std::size_t>> inclusion)
        : source_(std::move(source)), target_(std::move(target)), inclusion_(std::move(inclusion)) {
        if (source_.top_dim() > target_.top_dim() && source_.total_cells() > 0) {
            throw InputError("subcomplex has larger dimension than its ambient complex");
        }
        inclusion_.resize(source_.top_dim() + 1);
        for (std::size_t k = 0; k <= source_.top_dim(); ++k) {
            if (inclusion_[k].size() != source_.cells(k)) {
                throw InputError("inclusion map in degree " + std::to_string(k) + " has wrong length");
            }
            std::vector<bool> hit(target_.cells(k), false);
            for (auto t : inclusion_[k]) {
                if (t >= target_.cells(k) || hit[t]) {
                    throw InputError("inclusion map in degree " + std::to_string(k) + " is not injective");
                }
                hit[t] = true;
            }
        }
        // Chain map: d^W(i(s)) == i(d^S(s)) for every source cell s.
        for (std::size_t k = 1; k <= source_.top_dim(); ++k) {
            const IntMatrix ds = source_.boundary(k);
            const IntMatrix dw = target_.boundary(k);
            for (std::size_t s = 0; s < source_.cells(k); ++s) {
                std::vector<Integer> expected(target_.cells(k - 1));
                for (std::size_t r = 0; r < source_.cells(k - 1); ++r) {
                    expected[inclusion_[k - 1][r]] += ds(r, s);
                }
                for (std::size_t r = 0; r < target_.cells(k - 1); ++r) {
                    if (dw(r, inclusion_[k][s]) != expected[r]) {
                        throw InputError("inclusion is not a chain map in degree " + std::to_string(k));
                    }
                }
            }
        }
    }

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    const std::vector<std::vector<std::size_t>>& inclusion() const { return inclusion_; }

    std::vector<std::size_t> image(std::size_t k) const {
        return k < inclusion_.size() ? inclusion_[k] : std::vector<std::size_t>{};
    }

private:
    ChainComplex source_;
    ChainComplex target_;
    std::vector<std::vector<std::size_t>> inclusion_;
};

/// Relative chain complex C(W)/C(S): cells of W not in the image of S.
inline ChainComplex quotient_complex(const SubcomplexMap& sub) {
    const ChainComplex& w = sub.target();
    std::vector<std::vector<std::size_t>> keep(w.top_dim() + 1);
    for (std::size_t k = 0; k <= w.top_dim(); ++k) {
        std::vector<bool> removed(w.cells(k), false);
        for (auto t : sub.image(k)) {
            removed[t] = true;
        }
        for (std::size_t j = 0; j < w.cells(k); ++j) {
            if (!removed[j]) {
                keep[k].push_back(j);
            }
        }
    }
    std::vector<std::size_t> cells;
    std::vector<IntMatrix> bnd;
    std::vector<std::vector<std::string>> labels;
    for (std::size_t k = 0; k <= w.top_dim(); ++k) {
        cells.push_back(keep[k].size());
        std::vector<std::string> l;
        for (auto j : keep[k]) {
            l.push_back(w.labels()[k][j]);
        }
        labels.push_back(std::move(l));
        if (k >= 1) {
            const IntMatrix d = w.boundary(k);
            IntMatrix r(keep[k - 1].size(), keep[k].size());
            for (std::size_t i = 0; i < keep[k - 1].size(); ++i) {
                for (std::size_t j = 0; j < keep[k].size(); ++j) {
                    r(i, j) = d(keep[k - 1][i], keep[k][j]);
                }
            }
            bnd.push_back(std::move(r));
        }
    }
    return ChainComplex(std::move(cells), std::move(bnd), std::move(labels));
}

/// Tensor-product complex. Degree-k cells are ordered by i = 0..k, then a in A_i, then
/// b in B_{k-i}; d(a x b) = da x b + (-1)^i a x db.
inline ChainComplex product(const ChainComplex& a, const ChainComplex& b) {
    const std::size_t top = a.top_dim() + b.top_dim();
    // offset[k][i] = index of the first cell a_i x b_{k-i} in degree k
    std::vector<std::vector<std::size_t>> offset(top + 1, std::vector<std::size_t>(top + 2, 0));
    std::vector<std::size_t> cells(top + 1, 0);
    for (std::size_t k = 0; k <= top; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            offset[k][i] = cells[k];
            cells[k] += a.cells(i) * b.cells(k - i);
        }
    }
    auto index = [&](std::size_t i, std::size_t ai, std::size_t j, std::size_t bj) {
        return offset[i + j][i] + ai * b.cells(j) + bj;
    };
    std::vector<IntMatrix> bnd;
    std::vector<std::vector<std::string>> labels(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            for (std::size_t x = 0; x < a.cells(i); ++x) {
                for (std::size_t y = 0; y < b.cells(k - i); ++y) {
                    labels[k].push_back(a.labels()[i][x] + "*" + b.labels()[k - i][y]);
                }
            }
        }
    }
    for (std::size_t k = 1; k <= top; ++k) {
        IntMatrix d(cells[k - 1], cells[k]);
        for (std::size_t i = 0; i <= k; ++i) {
            const std::size_t j = k - i;
            if (a.cells(i) == 0 || b.cells(j) == 0) {
                continue;
            }
            const IntMatrix da = a.boundary(i);
            const IntMatrix db = b.boundary(j);
            const int sign = (i % 2) ? -1 : 1;
            for (std::size_t x = 0; x < a.cells(i); ++x) {
                for (std::size_t y = 0; y < b.cells(j); ++y) {
                    const std::size_t col = index(i, x, j, y);
                    if (i >= 1) {
                        for (std::size_t r = 0; r < a.cells(i - 1); ++r) {
                            if (da(r, x) != 0) {
                                d(index(i - 1, r, j, y), col) += da(r, x);
                            }
                        }
                    }
                    if (j >= 1) {
                        for (std::size_t r = 0; r < b.cells(j - 1); ++r) {
                            if (db(r, y) != 0) {
                                d(index(i, x, j - 1, r), col) += sign * db(r, y);
                            }
                        }
                    }
                }
            }
        }
        bnd.push_back(std::move(d));
    }
    return ChainComplex(std::move(cells), std::move(bnd), std::move(labels));
}

/// Inclusion of a x {vertex} into a x b.
inline SubcomplexMap product_slice(const ChainComplex& a, const ChainComplex& b, std::size_t vertex) {
    if (vertex >= b.cells(0)) {
        throw InputError("slice vertex out of range");
    }
    const ChainComplex ab = product(a, b);
    std::vector<std::vector<std::size_t>> inc(a.top_dim() + 1);
    for (std::size_t k = 0; k <= a.top_dim(); ++k) {
        std::size_t off = 0;
        for (std::size_t i = 0; i < k; ++i) {
            off += a.cells(i) * b.cells(k - i);
        }
        for (std::size_t x = 0; x < a.cells(k); ++x) {
            inc[k].push_back(off + x * b.cells(0) + vertex);
        }
    }
    return SubcomplexMap(a, ab, std::move(inc));
}

/// Block-diagonal complex; cells of `a` come first in every degree.
inline ChainComplex disjoint_union(const ChainComplex& a, const ChainComplex& b) {
    const std::size_t top = std::max(a.top_dim(), b.top_dim());
    std::vector<std::size_t> cells(top + 1);
    std::vector<std::vector<std::string>> labels(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        cells[k] = a.cells(k) + b.cells(k);
        if (k <= a.top_dim()) {
            for (const auto& l : a.labels()[k]) {
                labels[k].push_back("L." + l);
            }
        }
        if (k <= b.top_dim()) {
            for (const auto& l : b.labels()[k]) {
                labels[k].push_back("R." + l);
            }
        }
    }
    std::vector<IntMatrix> bnd;
    for (std::size_t k = 1; k <= top; ++k) {
        IntMatrix d(cells[k - 1], cells[k]);
        const IntMatrix da = a.boundary(k);
        const IntMatrix db = b.boundary(k);
        for (std::size_t i = 0; i < da.rows(); ++i) {
            for (std::size_t j = 0; j < da.cols(); ++j) {
                d(i, j) = da(i, j);
            }
        }
        for (std::size_t i = 0; i < db.rows(); ++i) {
            for (std::size_t j = 0; j < db.cols(); ++j) {
                d(a.cells(k - 1) + i, a.cells(k) + j) = db(i, j);
            }
        }
        bnd.push_back(std::move(d));
    }
    return ChainComplex(std::move(cells), std::move(bnd), std::move(labels));
}

namespace presets {

inline ChainComplex point() { return ChainComplex({1}, {}, {{"pt"}}); }

inline ChainComplex empty() { return ChainComplex({0}, {}, {{}}); }

inline ChainComplex sphere(std::size_t n) {
    if (n > 5) {
        throw InputError("sphere dimension must be <= 5");
    }
    if (n == 0) {
        return ChainComplex({2}, {}, {{"n", "s"}});
    }
    std::vector<std::size_t> cells(n + 1, 0);
    cells[0] = 1;
    cells[n] = 1;
    std::vector<IntMatrix> bnd;
    std::vector<std::vector<std::string>> labels(n + 1);
    labels[0] = {"v"};
    labels[n] = {"top"};
    for (std::size_t k = 1; k <= n; ++k) {
        bnd.emplace_back(cells[k - 1], cells[k]);
    }
    return ChainComplex(std::move(cells), std::move(bnd), std::move(labels));
}

inline ChainComplex circle() { return ChainComplex({1, 1}, {IntMatrix(1, 1)}, {{"v"}, {"e"}}); }

inline ChainComplex interval() { return ChainComplex({2, 1}, {IntMatrix{{-1}, {1}}}, {{"a", "b"}, {"I"}}); }

inline ChainComplex torus(std::size_t n) {
    if (n < 1 || n > 5) {
        throw InputError("torus dimension must be in 1..5");
    }
    ChainComplex t = circle();
    for (std::size_t i = 1; i < n; ++i) {
        t = product(t, circle());
    }
    return t;
}

inline ChainComplex surface(std::size_t genus) {
    if (genus > 4) {
        throw InputError("surface genus must be <= 4");
    }
    if (genus == 0) {
        return sphere(2);
    }
    std::vector<std::string> edges;
    for (std::size_t i = 1; i <= genus; ++i) {
        edges.push_back("a" + std::to_string(i));
        edges.push_back("b" + std::to_string(i));
    }
    return ChainComplex({1, 2 * genus, 1}, {IntMatrix(1, 2 * genus), IntMatrix(2 * genus, 1)},
                        {{"v"}, edges, {"F"}});
}

inline ChainComplex rp(std::size_t n) {
    if (n < 1 || n > 4) {
        throw InputError("projective space dimension must be in 1..4");
    }
    std::vector<std::size_t> cells(n + 1, 1);
    std::vector<IntMatrix> bnd;
    std::vector<std::vector<std::string>> labels;
    for (std::size_t k = 0; k <= n; ++k) {
        labels.push_back({"e" + std::to_string(k)});
    }
    for (std::size_t k = 1; k <= n; ++k) {
        bnd.push_back(IntMatrix{{k % 2 == 0 ? 2 : 0}});
    }
    return ChainComplex(std::move(cells), std::move(bnd), std::move(labels));
}

inline ChainComplex klein() {
    return ChainComplex({1, 2, 1}, {IntMatrix(1, 2), IntMatrix{{0}, {2}}}, {{"v"}, {"a", "b"}, {"F"}});
}

inline ChainComplex disk() { return ChainComplex({1, 1, 1}, {IntMatrix(1, 1), IntMatrix{{1}}}, {{"p"}, {"c"}, {"D"}}); }

inline ChainComplex pants() {
    //            c1  c2  c3   a   b
    IntMatrix d1{{0, 0, 0, -1, 0},   // p1
                 {0, 0, 0, 0, -1},   // p2
                 {0, 0, 0, 1, 1}};   // p3
    IntMatrix d2{{1}, {1}, {-1}, {0}, {0}};
    return ChainComplex({3, 5, 1}, {d1, d2}, {{"p1", "p2", "p3"}, {"c1", "c2", "c3", "a", "b"}, {"F"}});
}

/// Disjoint union of k circles: vertices v_i and loops e_i, all boundaries zero.
inline ChainComplex circles(std::size_t k) {
    std::vector<std::string> vs;
    std::vector<std::string> es;
    for (std::size_t i = 0; i < k; ++i) {
        vs.push_back("v" + std::to_string(i));
        es.push_back("e" + std::to_string(i));
    }
    return ChainComplex({k, k}, {IntMatrix(k, k)}, {vs, es});
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"point", "sphere", "circle", "interval", "torus", "surface",
                                            "rp",    "klein",  "disk",   "pants",    "cylinder"};
    return n;
}

}  // namespace presets

/// A 2d bordism between disjoint unions of circles: the complex plus inclusions of its
/// incoming and outgoing boundary circles.
struct Bordism {
    std::string name;
    ChainComplex complex;
    SubcomplexMap in;
    SubcomplexMap out;

    std::size_t in_circles() const { return in.source().cells(1); }
    std::size_t out_circles() const { return out.source().cells(1); }
};

namespace bordisms {

namespace detail {

// Circles i = 0..k-1 map vertex -> vertices[i], loop -> loops[i].
inline SubcomplexMap circle_boundary(const ChainComplex& w, const std::vector<std::size_t>& vertices,
                                     const std::vector<std::size_t>& loops) {
    return SubcomplexMap(presets::circles(loops.size()), w, {vertices, loops});
}

}  // namespace detail

/// (k circles) x I, incoming end at vertex a of the interval.
inline Bordism cylinder(std::size_t k = 1) {
    const ChainComplex m = presets::circles(k);
    return Bordism{"cylinder", product(m, presets::interval()), product_slice(m, presets::interval(), 0),
                   product_slice(m, presets::interval(), 1)};
}

/// Two circles in (c1, c2), one circle out (c3).
inline Bordism pants() {
    const ChainComplex w = presets::pants();
    return Bordism{"pants", w, detail::circle_boundary(w, {0, 1}, {0, 1}), detail::circle_boundary(w, {2}, {2})};
}

/// One circle in (c3), two circles out (c1, c2).
inline Bordism copants() {
    const ChainComplex w = presets::pants();
    return Bordism{"copants", w, detail::circle_boundary(w, {2}, {2}), detail::circle_boundary(w, {0, 1}, {0, 1})};
}

/// Disk as empty -> circle.
inline Bordism cup() {
    const ChainComplex w = presets::disk();
    return Bordism{"cup", w, detail::circle_boundary(w, {}, {}), detail::circle_boundary(w, {0}, {0})};
}

/// Disk as circle -> empty.
inline Bordism cap() {
    const ChainComplex w = presets::disk();
    return Bordism{"cap", w, detail::circle_boundary(w, {0}, {0}), detail::circle_boundary(w, {}, {})};
}

/// Any complex viewed as a closed bordism empty -> empty.
inline Bordism closed(const ChainComplex& w, std::string name) {
    return Bordism{std::move(name), w, detail::circle_boundary(w, {}, {}), detail::circle_boundary(w, {}, {})};
}

}  // namespace bordisms

}  // namespace finsym

#pragma once

// Functorial 2d finite gauge theory with abelian gauge group G (p = 0): state spaces on
// disjoint circles and exact bordism matrices.
//
// The state space of k circles has basis H^1(k circles; G) = G^k, ordered
// lexicographically in the tuple of element indices. A bordism W: M_in -> M_out acts by
//
//   Z(W)[b][a] = c(W) * #{ A in H^1(W; G) : A|_in = a, A|_out = b },
//   c(W)       = |H^0(M_out; G)| / |H^0(W; G)|,
//
// the groupoid-cardinality pushforward. This constant is the one compatible with gluing
// (Mayer-Vietoris); it makes the cylinder the identity, the pants the group-algebra
// product, and closed surfaces evaluate to |H^1| / |H^0|.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finsym/abelian_group.hpp"
#include "finsym/chain_complex.hpp"
#include "finsym/cohomology.hpp"
#include "finsym/error.hpp"
#include "finsym/rational.hpp"

namespace finsym {

struct StateSpace {
    FiniteAbelianGroup group;
    std::size_t circles = 0;

    std::uint64_t dim() const {
        std::uint64_t d = 1;
        for (std::size_t i = 0; i < circles; ++i) {
            d *= group.order();
        }
        return d;
    }

    /// Holonomy of each circle for a basis index.
    std::vector<FiniteAbelianGroup::Element> basis_element(std::uint64_t index) const {
        std::vector<FiniteAbelianGroup::Element> t(circles);
        for (std::size_t i = circles; i-- > 0;) {
            t[i] = group.element(index % group.order());
            index /= group.order();
        }
        return t;
    }

    std::string basis_label(std::uint64_t index) const {
        if (circles == 0) {
            return "|>";
        }
        std::string s = "|";
        const auto t = basis_element(index);
        for (std::size_t i = 0; i < t.size(); ++i) {
            s += (i ? "," : "") + group.element_str(t[i]);
        }
        return s + ">";
    }

    bool operator==(const StateSpace&) const = default;
};

class BordismMatrix {
public:
    BordismMatrix(StateSpace source, StateSpace target)
        : source_(std::move(source)),
          target_(std::move(target)),
          entries_(target_.dim(), std::vector<Rational>(source_.dim(), Rational(0))) {}

    const StateSpace& source() const { return source_; }
    const StateSpace& target() const { return target_; }
    std::uint64_t rows() const { return target_.dim(); }
    std::uint64_t cols() const { return source_.dim(); }

    Rational& operator()(std::uint64_t out, std::uint64_t in) { return entries_[out][in]; }
    const Rational& operator()(std::uint64_t out, std::uint64_t in) const { return entries_[out][in]; }
    const std::vector<std::vector<Rational>>& entries() const { return entries_; }

    /// The single entry of an empty -> empty bordism.
    Rational scalar() const {
        if (rows() != 1 || cols() != 1) {
            throw InputError("bordism is not closed; no scalar value");
        }
        return entries_[0][0];
    }

    Rational trace() const {
        if (rows() != cols()) {
            throw InputError("trace of a non-square bordism matrix");
        }
        Rational t(0);
        for (std::uint64_t i = 0; i < rows(); ++i) {
            t += entries_[i][i];
        }
        return t;
    }

    bool is_identity() const {
        if (rows() != cols()) {
            return false;
        }
        for (std::uint64_t i = 0; i < rows(); ++i) {
            for (std::uint64_t j = 0; j < cols(); ++j) {
                if (entries_[i][j] != Rational(i == j ? 1 : 0)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool operator==(const BordismMatrix& o) const {
        return source_ == o.source_ && target_ == o.target_ && entries_ == o.entries_;
    }

private:
    StateSpace source_;
    StateSpace target_;
    std::vector<std::vector<Rational>> entries_;
};

/// Glue `second` after `first` along first's outgoing circles.
inline BordismMatrix compose(const BordismMatrix& second, const BordismMatrix& first) {
    if (!(first.target() == second.source())) {
        throw InputError("cannot compose bordisms: boundary mismatch");
    }
    BordismMatrix r(first.source(), second.target());
    for (std::uint64_t i = 0; i < r.rows(); ++i) {
        for (std::uint64_t k = 0; k < first.rows(); ++k) {
            if (second(i, k) == 0) {
                continue;
            }
            for (std::uint64_t j = 0; j < r.cols(); ++j) {
                r(i, j) += second(i, k) * first(k, j);
            }
        }
    }
    return r;
}

/// Disjoint union; the circles of `a` come first in both state spaces.
inline BordismMatrix tensor(const BordismMatrix& a, const BordismMatrix& b) {
    if (!(a.source().group == b.source().group)) {
        throw InputError("cannot tensor bordisms with different gauge groups");
    }
    const FiniteAbelianGroup& g = a.source().group;
    BordismMatrix r(StateSpace{g, a.source().circles + b.source().circles},
                    StateSpace{g, a.target().circles + b.target().circles});
    for (std::uint64_t i1 = 0; i1 < a.rows(); ++i1) {
        for (std::uint64_t j1 = 0; j1 < a.cols(); ++j1) {
            if (a(i1, j1) == 0) {
                continue;
            }
            for (std::uint64_t i2 = 0; i2 < b.rows(); ++i2) {
                for (std::uint64_t j2 = 0; j2 < b.cols(); ++j2) {
                    r(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
                }
            }
        }
    }
    return r;
}

/// Bordism matrix together with the data each entry was computed from.
struct BordismComputation {
    BordismMatrix matrix;
    std::vector<std::vector<std::uint64_t>> class_counts;  // [out][in]
    Rational constant;
    std::uint64_t h0_out = 1;
    std::uint64_t h0_bordism = 1;
    std::uint64_t h1_bordism = 1;
};

inline BordismComputation compute_bordism(const Bordism& w, const FiniteAbelianGroup& g, const EnumGuard& guard = {}) {
    const StateSpace in{g, w.in_circles()};
    const StateSpace out{g, w.out_circles()};
    const CocycleClasses classes(w.complex, g, 1, guard);

    auto basis_index = [&](const Cochain& rep, const SubcomplexMap& side) {
        std::uint64_t idx = 0;
        for (std::size_t loop : side.image(1)) {
            idx = idx * g.order() + g.index(classes.value(rep, loop));
        }
        return idx;
    };

    std::vector<std::vector<std::uint64_t>> counts(out.dim(), std::vector<std::uint64_t>(in.dim(), 0));
    for (const auto& rep : classes.representatives()) {
        ++counts[basis_index(rep, w.out)][basis_index(rep, w.in)];
    }

    const std::uint64_t h0_out = cohomology(w.out.source(), g, 0).order();
    const std::uint64_t h0_w = cohomology(w.complex, g, 0).order();
    const Rational c{Integer(h0_out), Integer(h0_w)};

    BordismMatrix m(in, out);
    for (std::uint64_t i = 0; i < out.dim(); ++i) {
        for (std::uint64_t j = 0; j < in.dim(); ++j) {
            m(i, j) = c * Integer(counts[i][j]);
        }
    }
    return BordismComputation{std::move(m), std::move(counts), c, h0_out, h0_w, classes.size()};
}

inline BordismMatrix bordism_matrix(const Bordism& w, const FiniteAbelianGroup& g, const EnumGuard& guard = {}) {
    return compute_bordism(w, g, guard).matrix;
}

/// Closed genus-g surface assembled as cap o (pants o copants)^g o cup.
inline BordismMatrix handle_composite(const FiniteAbelianGroup& g, std::size_t genus) {
    BordismMatrix m = bordism_matrix(bordisms::cup(), g);
    const BordismMatrix handle = compose(bordism_matrix(bordisms::pants(), g), bordism_matrix(bordisms::copants(), g));
    for (std::size_t i = 0; i < genus; ++i) {
        m = compose(handle, m);
    }
    return compose(bordism_matrix(bordisms::cap(), g), m);
}

/// Named bordism shapes: cylinder, pants, copants, cup, cap, torus, surface:g (closed
/// complex), handles:g (closed surface assembled from elementary pieces).
inline BordismMatrix named_bordism(const std::string& shape, const FiniteAbelianGroup& g, const EnumGuard& guard = {}) {
    if (shape == "cylinder") {
        return bordism_matrix(bordisms::cylinder(), g, guard);
    }
    if (shape == "pants") {
        return bordism_matrix(bordisms::pants(), g, guard);
    }
    if (shape == "copants") {
        return bordism_matrix(bordisms::copants(), g, guard);
    }
    if (shape == "cup") {
        return bordism_matrix(bordisms::cup(), g, guard);
    }
    if (shape == "cap") {
        return bordism_matrix(bordisms::cap(), g, guard);
    }
    if (shape == "torus") {
        return bordism_matrix(bordisms::closed(presets::surface(1), "torus"), g, guard);
    }
    auto genus_of = [&](const std::string& prefix) -> std::optional<std::size_t> {
        if (shape.rfind(prefix, 0) != 0) {
            return std::nullopt;
        }
        try {
            return static_cast<std::size_t>(std::stoul(shape.substr(prefix.size())));
        } catch (const std::exception&) {
            throw InputError("bad genus in bordism shape '" + shape + "'");
        }
    };
    if (auto genus = genus_of("surface:")) {
        return bordism_matrix(bordisms::closed(presets::surface(*genus), shape), g, guard);
    }
    if (auto genus = genus_of("handles:")) {
        return handle_composite(g, *genus);
    }
    throw InputError("unsupported bordism shape '" + shape +
                     "' (cylinder, pants, copants, cup, cap, torus, surface:g, handles:g)");
}

struct Problem1Report {
    FiniteAbelianGroup group;
    std::uint64_t circle_state_space_dim = 0;
    BordismComputation pants;
    BordismComputation copants;
};

/// d = 2, p = 0 finite gauge theory on the circle, pair of pants and co-pair of pants.
inline Problem1Report solve_problem_one(const FiniteAbelianGroup& g = FiniteAbelianGroup::cyclic(2)) {
    return Problem1Report{g, cohomology(presets::circle(), g, 1).order(), compute_bordism(bordisms::pants(), g),
                          compute_bordism(bordisms::copants(), g)};
}

struct TraceCheck {
    Rational trace;
    Integer h1;
    Rational closed_value;
    bool pass = false;
};

/// Tr Z(M x I) against |H^1(M; G)| and the closed value Z(M x S^1), M = k circles.
inline TraceCheck trace_check(std::size_t circles, const FiniteAbelianGroup& g) {
    const Rational tr = bordism_matrix(bordisms::cylinder(circles), g).trace();
    const Integer h1(cohomology(presets::circles(circles), g, 1).order());
    ChainComplex tori = presets::empty();
    for (std::size_t i = 0; i < circles; ++i) {
        tori = disjoint_union(tori, presets::surface(1));
    }
    const Rational closed = bordism_matrix(bordisms::closed(tori, "M x S1"), g).scalar();
    return TraceCheck{tr, h1, closed, tr == Rational(h1) && closed == tr};
}

}  // namespace finsym

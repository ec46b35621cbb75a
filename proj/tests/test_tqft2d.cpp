#include <gtest/gtest.h>

#include "finsym/finsym.hpp"

using namespace finsym;

namespace {

const std::vector<FiniteAbelianGroup>& groups_under_test() {
    static const std::vector<FiniteAbelianGroup> gs{FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3),
                                                    FiniteAbelianGroup({2, 2})};
    return gs;
}

Rational power(const Rational& base, long long e) {
    Rational r(1);
    for (long long i = 0; i < std::abs(e); ++i) {
        r *= base;
    }
    return e < 0 ? Rational(1 / r) : r;
}

// Permutation of two tensor factors of Z(S^1).
BordismMatrix swap_matrix(const FiniteAbelianGroup& g) {
    const StateSpace two{g, 2};
    BordismMatrix m(two, two);
    const std::uint64_t n = g.order();
    for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) {
            m(b * n + a, a * n + b) = 1;
        }
    }
    return m;
}

}  // namespace

TEST(Tqft2d, ProblemOne) {
    const auto r = solve_problem_one();
    const auto z2 = FiniteAbelianGroup::cyclic(2);
    EXPECT_EQ(r.circle_state_space_dim, 2u);
    const auto& p = r.pants.matrix;
    ASSERT_EQ(p.rows(), 2u);
    ASSERT_EQ(p.cols(), 4u);
    for (std::uint64_t a = 0; a < 2; ++a) {
        for (std::uint64_t b = 0; b < 2; ++b) {
            for (std::uint64_t c = 0; c < 2; ++c) {
                const bool product = z2.add(z2.element(a), z2.element(b)) == z2.element(c);
                EXPECT_EQ(p(c, a * 2 + b), Rational(product ? 1 : 0));
            }
        }
    }
    EXPECT_TRUE(bordism_matrix(bordisms::cylinder(), z2).is_identity());
    const auto tc = trace_check(1, z2);
    EXPECT_EQ(tc.trace, Rational(2));
    EXPECT_EQ(tc.closed_value, Rational(2));
    EXPECT_TRUE(tc.pass);
}

TEST(Tqft2d, GroupAlgebraForLargerGroups) {
    for (const auto& g : groups_under_test()) {
        const auto p = bordism_matrix(bordisms::pants(), g);
        const std::uint64_t n = g.order();
        for (std::uint64_t a = 0; a < n; ++a) {
            for (std::uint64_t b = 0; b < n; ++b) {
                for (std::uint64_t c = 0; c < n; ++c) {
                    const bool product = g.add(g.element(a), g.element(b)) == g.element(c);
                    EXPECT_EQ(p(c, a * n + b), Rational(product ? 1 : 0));
                }
            }
        }
        // The copants has two outgoing components, so its constant is |G|; the trace of the
        // handle operator is the genus-2 value |G|^3.
        const auto cp = compute_bordism(bordisms::copants(), g);
        EXPECT_EQ(cp.constant, Rational(Integer(n)));
        EXPECT_EQ(compose(p, cp.matrix).trace(), Rational(Integer(n * n * n)));
    }
}

TEST(Tqft2d, GluingLaws) {
    for (const auto& g : groups_under_test()) {
        const auto cyl = bordism_matrix(bordisms::cylinder(), g);
        const auto pants = bordism_matrix(bordisms::pants(), g);
        const auto copants = bordism_matrix(bordisms::copants(), g);
        const auto cup = bordism_matrix(bordisms::cup(), g);
        const auto cap = bordism_matrix(bordisms::cap(), g);
        EXPECT_EQ(compose(cyl, cyl), cyl);
        EXPECT_EQ(compose(pants, tensor(cyl, cyl)), pants);
        EXPECT_EQ(compose(pants, tensor(pants, cyl)), compose(pants, tensor(cyl, pants)));
        EXPECT_EQ(compose(tensor(copants, cyl), copants), compose(tensor(cyl, copants), copants));
        EXPECT_EQ(compose(pants, swap_matrix(g)), pants);
        // Unit and counit.
        EXPECT_EQ(compose(pants, tensor(cup, cyl)), cyl);
        EXPECT_EQ(compose(tensor(cap, cyl), copants), cyl);
        // Frobenius relation.
        EXPECT_EQ(compose(copants, pants), compose(tensor(pants, cyl), tensor(cyl, copants)));
        EXPECT_EQ(bordism_matrix(bordisms::cylinder(2), g), tensor(cyl, cyl));
        EXPECT_TRUE(bordism_matrix(bordisms::cylinder(2), g).is_identity());
        // Sphere.
        EXPECT_EQ(compose(cap, cup).scalar(), Rational(Integer(1), Integer(g.order())));
    }
}

TEST(Tqft2d, HandlesMatchClosedSurfaces) {
    for (const auto& g : groups_under_test()) {
        const Rational order(Integer(g.order()));
        for (std::size_t genus = 0; genus <= 2; ++genus) {
            const Rational expected = power(order, 2 * static_cast<long long>(genus) - 1);
            EXPECT_EQ(handle_composite(g, genus).scalar(), expected) << g.name() << " genus " << genus;
            EXPECT_EQ(named_bordism("surface:" + std::to_string(genus), g).scalar(), expected);
            EXPECT_EQ(em_partition(presets::surface(genus), g, 1), expected);
        }
        EXPECT_EQ(named_bordism("torus", g).scalar(), order);
    }
}

TEST(Tqft2d, TraceOfCylinders) {
    for (const auto& g : groups_under_test()) {
        for (std::size_t k = 1; k <= 2; ++k) {
            const auto tc = trace_check(k, g);
            EXPECT_TRUE(tc.pass) << g.name() << " k=" << k;
            EXPECT_EQ(tc.trace, Rational(tc.h1));
        }
    }
}

TEST(Tqft2d, ClassCountsSumToFirstCohomology) {
    for (const auto& w : {bordisms::pants(), bordisms::copants(), bordisms::cylinder(), bordisms::cup()}) {
        const auto g = FiniteAbelianGroup::cyclic(3);
        const auto comp = compute_bordism(w, g);
        std::uint64_t total = 0;
        for (const auto& row : comp.class_counts) {
            for (auto c : row) {
                total += c;
            }
        }
        EXPECT_EQ(total, comp.h1_bordism) << w.name;
        EXPECT_EQ(total, cohomology(w.complex, g, 1).order());
    }
}

TEST(Tqft2d, NamedShapes) {
    const auto z2 = FiniteAbelianGroup::cyclic(2);
    EXPECT_EQ(named_bordism("pants", z2), bordism_matrix(bordisms::pants(), z2));
    EXPECT_THROW(named_bordism("teapot", z2), InputError);
    EXPECT_THROW(named_bordism("surface:x", z2), InputError);
    EXPECT_EQ(bordism_matrix(bordisms::pants(), z2).source().basis_label(1), "|0,1>");
}

#include <gtest/gtest.h>

#include "finsym/finsym.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace finsym;

namespace {

std::uint64_t h(const ChainComplex& c, const FiniteAbelianGroup& a, std::size_t q) { return cohomology(c, a, q).order(); }

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) {
        r *= b;
    }
    return r;
}

std::uint64_t log_p(std::uint64_t order, std::int64_t p) {
    std::uint64_t k = 0;
    while (order > 1) {
        order /= static_cast<std::uint64_t>(p);
        ++k;
    }
    return k;
}

}  // namespace

TEST(ChainComplex, RejectsBadInput) {
    EXPECT_THROW(ChainComplex({1, 1}, {IntMatrix(2, 1)}), InputError);
    // d1 d2 != 0
    EXPECT_THROW(ChainComplex({2, 1, 1}, {IntMatrix{{-1}, {1}}, IntMatrix{{1}}}), InputError);
    // Not a chain map: the vertex of a circle cannot land on an edge-free pair.
    EXPECT_THROW(SubcomplexMap(presets::circle(), presets::interval(), {{0}, {0}}), InputError);
}

TEST(ChainComplex, EulerCharacteristics) {
    EXPECT_EQ(presets::sphere(2).euler_characteristic(), 2);
    EXPECT_EQ(presets::sphere(3).euler_characteristic(), 0);
    EXPECT_EQ(presets::surface(3).euler_characteristic(), -4);
    EXPECT_EQ(presets::torus(4).euler_characteristic(), 0);
    EXPECT_EQ(presets::rp(2).euler_characteristic(), 1);
    EXPECT_EQ(presets::klein().euler_characteristic(), 0);
    EXPECT_EQ(presets::pants().euler_characteristic(), -1);
    EXPECT_EQ(product(presets::sphere(2), presets::surface(2)).euler_characteristic(), -4);
}

TEST(Cohomology, KnownGroups) {
    const auto z2 = FiniteAbelianGroup::cyclic(2);
    const auto z4 = FiniteAbelianGroup::cyclic(4);
    EXPECT_EQ(h(presets::torus(5), z2, 2), 1024u);
    EXPECT_EQ(h(presets::rp(2), z2, 2), 2u);
    EXPECT_EQ(h(presets::rp(2), FiniteAbelianGroup::cyclic(3), 2), 1u);
    EXPECT_EQ(h(presets::rp(3), FiniteAbelianGroup::cyclic(3), 3), 3u);
    EXPECT_EQ(cohomology(presets::rp(2), z4, 1).group, z2);
    EXPECT_EQ(cohomology(presets::rp(2), z4, 2).group, z2);
    EXPECT_EQ(h(presets::klein(), FiniteAbelianGroup::cyclic(3), 2), 1u);
    EXPECT_EQ(h(presets::klein(), z2, 1), 4u);
    EXPECT_EQ(cohomology(presets::surface(2), z4, 1).group, FiniteAbelianGroup({4, 4, 4, 4}));
    EXPECT_EQ(h(presets::sphere(5), z2, 3), 1u);
    EXPECT_EQ(h(presets::sphere(0), z2, 0), 4u);
}

TEST(Cohomology, MatchesBruteForceCochainsOnPresets) {
    for (const auto& [name, c] : fixtures::small_presets()) {
        for (const auto& a : fixtures::small_groups()) {
            for (std::size_t q = 0; q <= c.top_dim(); ++q) {
                const auto counts = oracle::count_cochains(c, a.invariant_factors(), q);
                EXPECT_EQ(h(c, a, q), counts.cohomology()) << name << " " << a.name() << " q=" << q;
                const CocycleClasses classes(c, a, q);
                EXPECT_EQ(classes.size(), counts.cohomology()) << name;
                EXPECT_EQ(classes.cocycle_count(), counts.cocycles) << name;
                EXPECT_EQ(classes.coboundary_count(), counts.coboundaries) << name;
            }
        }
    }
}

TEST(Cohomology, KunnethOverFields) {
    const std::vector<ChainComplex> xs{presets::circle(), presets::rp(2), presets::klein(), presets::sphere(2)};
    for (std::int64_t p : {2, 3}) {
        const auto f = FiniteAbelianGroup::cyclic(p);
        for (const auto& x : xs) {
            for (const auto& y : xs) {
                const auto xy = product(x, y);
                for (std::size_t n = 0; n <= xy.top_dim(); ++n) {
                    std::uint64_t dim = 0;
                    for (std::size_t i = 0; i <= n; ++i) {
                        if (i <= x.top_dim() && n - i <= y.top_dim()) {
                            dim += log_p(h(x, f, i), p) * log_p(h(y, f, n - i), p);
                        }
                    }
                    EXPECT_EQ(h(xy, f, n), ipow(static_cast<std::uint64_t>(p), dim)) << "p=" << p << " n=" << n;
                }
            }
        }
    }
}

TEST(Cohomology, EulerCharacteristicFromBetti) {
    const auto z3 = FiniteAbelianGroup::cyclic(3);
    for (const auto& [name, c] : fixtures::small_presets()) {
        long long chi = 0;
        for (std::size_t q = 0; q <= c.top_dim(); ++q) {
            std::uint64_t order = h(c, z3, q);
            long long dim = 0;
            while (order > 1) {
                order /= 3;
                ++dim;
            }
            chi += (q % 2 ? -dim : dim);
        }
        EXPECT_EQ(chi, c.euler_characteristic()) << name;
    }
}

TEST(Cohomology, ProductTorus) {
    ChainComplex t = presets::circle();
    for (std::size_t n = 2; n <= 4; ++n) {
        t = product(t, presets::circle());
        EXPECT_EQ(t, presets::torus(n));
    }
    const auto z2 = FiniteAbelianGroup::cyclic(2);
    EXPECT_EQ(h(presets::torus(4), z2, 2), ipow(2, 6));
}

TEST(Cohomology, DisjointUnion) {
    const auto z2 = FiniteAbelianGroup::cyclic(2);
    const auto u = disjoint_union(presets::surface(1), presets::rp(2));
    EXPECT_EQ(h(u, z2, 0), 4u);
    EXPECT_EQ(h(u, z2, 1), 8u);
    EXPECT_EQ(u.labels()[0][0].rfind("L.", 0), 0u);
}

TEST(Cohomology, RelativeDiskIsSphere) {
    const auto z2 = FiniteAbelianGroup::cyclic(2);
    const SubcomplexMap boundary(presets::circle(), presets::disk(), {{0}, {0}});
    EXPECT_EQ(relative_cohomology(boundary, z2, 0).order(), 1u);
    EXPECT_EQ(relative_cohomology(boundary, z2, 1).order(), 1u);
    EXPECT_EQ(relative_cohomology(boundary, z2, 2).order(), 2u);
}

TEST(Cohomology, ClosedCheck) {
    EXPECT_TRUE(is_closed(presets::torus(3)));
    EXPECT_TRUE(is_closed(presets::rp(2)));
    EXPECT_TRUE(is_closed(presets::klein()));
    EXPECT_TRUE(is_closed(presets::sphere(0)));
    EXPECT_FALSE(is_closed(presets::disk()));
    EXPECT_FALSE(is_closed(presets::pants()));
    EXPECT_FALSE(is_closed(presets::interval()));
}

TEST(Cohomology, RestrictionToPantsBoundary) {
    const auto z2 = FiniteAbelianGroup::cyclic(2);
    const auto w = bordisms::pants();
    const auto r_in = restriction_map(w.in, z2, 1);
    const auto r_out = restriction_map(w.out, z2, 1);
    ASSERT_EQ(r_in.source.size(), 4u);  // H^1(pants; Z2)
    // Classes restrict injectively to the two incoming circles, and the outgoing holonomy is
    // their sum.
    std::set<std::size_t> seen(r_in.image.begin(), r_in.image.end());
    EXPECT_EQ(seen.size(), 4u);
    for (std::size_t i = 0; i < r_in.source.size(); ++i) {
        const auto& rep = r_in.source.representatives()[i];
        const auto a = r_in.source.value(rep, 0);
        const auto b = r_in.source.value(rep, 1);
        const auto c = r_in.source.value(rep, 2);
        EXPECT_EQ(z2.add(a, b), c);
        (void)r_out;
    }
}

TEST(Cohomology, GuardThrows) {
    EXPECT_THROW(CocycleClasses(presets::surface(4), FiniteAbelianGroup::cyclic(4), 1, EnumGuard::clamp(1000)),
                 GuardExceeded);
    EXPECT_EQ(EnumGuard::clamp(std::uint64_t{1} << 40).limit, kMaxEnumCeiling);
}

TEST(JsonIo, ComplexRoundTrip) {
    for (const auto& [name, c] : fixtures::small_presets()) {
        const auto j = json_io::to_json(c);
        const auto back = json_io::chain_complex_from_json(json_io::Json::parse(j.dump()));
        EXPECT_EQ(back, c) << name;
    }
    EXPECT_THROW(json_io::chain_complex_from_json(json_io::Json::parse(R"({"cells":[1,1],"boundaries":[]})")),
                 InputError);
}

TEST(Parse, Manifolds) {
    EXPECT_EQ(parse::manifold("torus:3"), presets::torus(3));
    EXPECT_EQ(parse::manifold("circle*circle"), presets::torus(2));
    EXPECT_EQ(parse::manifold("surface:1+rp:2"), disjoint_union(presets::surface(1), presets::rp(2)));
    EXPECT_THROW(parse::manifold("torus"), InputError);
    EXPECT_THROW(parse::manifold("donut:2"), InputError);
    EXPECT_THROW(parse::manifold("klein:2"), InputError);
    EXPECT_THROW(parse::abelian_group("Q2"), InputError);
    EXPECT_EQ(parse::abelian_group("Z2xZ4"), FiniteAbelianGroup({2, 4}));
    EXPECT_EQ(parse::abelian_group("Z6xZ4"), FiniteAbelianGroup({2, 12}));
}

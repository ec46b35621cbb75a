#include <gtest/gtest.h>

#include "finsym/finsym.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace finsym;

namespace {

// |Z^n| * |C^{n-1}|^{-1} * |C^{n-2}| * ... : the groupoid cardinality of the cochain model.
Rational cochain_partition(const ChainComplex& m, const FiniteAbelianGroup& a, std::size_t n) {
    Rational value(Integer(oracle::count_cochains(m, a.invariant_factors(), n).cocycles));
    for (std::size_t j = 0; j < n; ++j) {
        Integer size = 1;
        const std::size_t cells = j <= m.top_dim() ? m.cells(j) : 0;
        for (std::size_t c = 0; c < cells; ++c) {
            size *= a.order();
        }
        value = ((n - j) % 2 == 1) ? Rational(value / size) : Rational(value * size);
    }
    return value;
}

// sum over irreducible representations of (|G| / dim)^(2g - 2).
Rational mednykh(std::size_t order, const std::vector<std::size_t>& irrep_dims, std::size_t genus) {
    Rational total(0);
    for (auto d : irrep_dims) {
        const Rational base{Integer(order), Integer(d)};
        Rational term(1);
        if (genus == 0) {
            term = 1 / (base * base);
        } else {
            for (std::size_t i = 0; i < 2 * genus - 2; ++i) {
                term *= base;
            }
        }
        total += term;
    }
    return total;
}

}  // namespace

TEST(EmPartition, SpheresAndTori) {
    for (const auto& a : {FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup({2, 2})}) {
        EXPECT_EQ(em_partition(presets::sphere(5), a, 2), Rational(Integer(a.order())));
    }
    EXPECT_EQ(em_partition(presets::torus(5), FiniteAbelianGroup::cyclic(2), 2), Rational(64));
    EXPECT_EQ(em_partition(presets::torus(2), FiniteAbelianGroup::cyclic(2), 1), Rational(2));
    EXPECT_EQ(em_partition(presets::torus(3), FiniteAbelianGroup::cyclic(2), 2), Rational(2));
}

TEST(EmPartition, MatchesCochainGroupoidCardinality) {
    const std::vector<std::pair<std::string, ChainComplex>> closed{
        {"sphere:2", presets::sphere(2)}, {"sphere:3", presets::sphere(3)}, {"torus:2", presets::torus(2)},
        {"torus:3", presets::torus(3)},   {"rp:2", presets::rp(2)},         {"rp:3", presets::rp(3)},
        {"klein", presets::klein()},      {"surface:2", presets::surface(2)}};
    for (const auto& [name, m] : closed) {
        for (const auto& a : fixtures::small_groups()) {
            for (std::size_t n = 1; n <= 3; ++n) {
                EXPECT_EQ(em_partition(m, a, n), cochain_partition(m, a, n)) << name << " " << a.name() << " n=" << n;
            }
        }
    }
}

TEST(EmPartition, RejectsOpenManifoldsAndTwists) {
    EXPECT_THROW(em_partition(presets::disk(), FiniteAbelianGroup::cyclic(2), 2), InputError);
    EXPECT_THROW(em_partition(presets::torus(2), FiniteAbelianGroup::cyclic(2), 0), InputError);
    EXPECT_THROW(em_partition(presets::torus(2), FiniteAbelianGroup::cyclic(2), 2, TwistWeight{false}), InputError);
}

TEST(EmStateSpace, MappingSpaceComponents) {
    for (const auto& a : {FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(4),
                          FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({2, 4})}) {
        EXPECT_EQ(em_state_space_dim(presets::sphere(2), a, 2), Integer(a.order()));
    }
    EXPECT_EQ(em_state_space_dim(presets::torus(2), FiniteAbelianGroup::cyclic(3), 1), Integer(9));
    EXPECT_EQ(em_category_simple_count(presets::torus(3), FiniteAbelianGroup::cyclic(2)), Integer(64));
    EXPECT_EQ(em_category_simple_count(presets::sphere(3), FiniteAbelianGroup::cyclic(5)), Integer(1));
    EXPECT_THROW(em_category_simple_count(presets::torus(2), FiniteAbelianGroup::cyclic(2)), InputError);
}

TEST(SurfaceCount, TorusCountsConjugacyClasses) {
    for (const auto& name : {"Z2", "Z3", "Z2xZ2", "S3", "D4", "Q8"}) {
        const auto g = parse::group(name);
        EXPECT_EQ(surface_gauge_count(g, 1), Rational(Integer(conjugacy_classes(g).size()))) << name;
    }
}

TEST(SurfaceCount, MatchesDynamicProgramming) {
    for (const auto& name : groups::preset_names()) {
        const auto g = parse::group(name);
        for (std::size_t genus = 0; genus <= 3; ++genus) {
            if (genus == 3 && g.order() > 4) {
                continue;
            }
            const Rational expected{oracle::surface_hom_count(g, genus), Integer(g.order())};
            EXPECT_EQ(surface_gauge_count(g, genus), expected) << name << " genus " << genus;
        }
    }
}

TEST(SurfaceCount, CharacterFormula) {
    EXPECT_EQ(surface_gauge_count(groups::symmetric3(), 2), mednykh(6, {1, 1, 2}, 2));
    EXPECT_EQ(surface_gauge_count(groups::quaternion8(), 2), mednykh(8, {1, 1, 1, 1, 2}, 2));
    EXPECT_EQ(surface_gauge_count(groups::dihedral4(), 2), mednykh(8, {1, 1, 1, 1, 2}, 2));
    EXPECT_EQ(surface_gauge_count(groups::symmetric3(), 0), mednykh(6, {1, 1, 2}, 0));
}

TEST(SurfaceCount, ThreadsDoNotChangeResult) {
    const auto g = groups::quaternion8();
    const auto one = surface_gauge_count(g, 2, {}, 1);
    for (unsigned t : {2u, 3u, 8u, 16u}) {
        EXPECT_EQ(surface_gauge_count(g, 2, {}, t), one);
    }
}

TEST(SurfaceCount, Guard) { EXPECT_THROW(surface_gauge_count(groups::quaternion8(), 5), GuardExceeded); }

TEST(PartitionFunction, Dispatch) {
    EXPECT_EQ(partition_function(parse::target("B2:Z2"), presets::torus(5)), Rational(64));
    EXPECT_EQ(partition_function(parse::target("BG:S3"), presets::surface(1)), Rational(3));
    // Abelian BG agrees with B1.
    for (std::size_t genus = 0; genus <= 2; ++genus) {
        EXPECT_EQ(partition_function(parse::target("BG:Z2xZ2"), presets::surface(genus)),
                  partition_function(parse::target("B1:Z2xZ2"), presets::surface(genus)));
    }
    EXPECT_THROW(partition_function(parse::target("BG:S3"), presets::torus(3)), InputError);
    EXPECT_THROW(parse::target("C2:Z2"), InputError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confhom/ce_complex.hpp"

#include <random>
#include <vector>

#include "fixtures.hpp"

using namespace confhom;

namespace {

std::vector<GenId> ids(const Monomial& m) { return m.factors; }

Monomial mono(const GeneratorSet& gens, std::vector<GenId> factors) {
    return make_monomial(std::move(factors), gens.table);
}

}  // namespace

TEST_CASE("generator sets over the catalog") {
    SUBCASE("euclidean plane") {
        const ManifoldData m = builtin_catalog("R^2");
        const GeneratorSet gens = build_generators(m);
        REQUIRE(gens.table.size() == 2);
        CHECK(gens.u_count == 1);
        CHECK(gens.table[0] == Generator{0, 0, 2, 0, Family::U});
        CHECK(gens.table[1] == Generator{1, 1, 2, 0, Family::V});
        CHECK(gens.name(0) == "u0");
        CHECK(gens.name(1) == "v1");
    }
    SUBCASE("euclidean six-space") {
        const GeneratorSet gens = build_generators(builtin_catalog("R^6"));
        REQUIRE(gens.table.size() == 2);
        CHECK(gens.table[0] == Generator{0, 0, 6, 0, Family::U});
        CHECK(gens.table[1] == Generator{1, 5, 6, 0, Family::V});
        CHECK(gens.name(1) == "v5");
    }
    SUBCASE("two-sphere") {
        const GeneratorSet gens = build_generators(builtin_catalog("S^2"));
        REQUIRE(gens.table.size() == 4);
        CHECK(gens.table[0] == Generator{0, 0, 2, 0, Family::U});
        CHECK(gens.table[1] == Generator{1, 2, 0, 0, Family::U});
        CHECK(gens.table[2] == Generator{2, 1, 2, 0, Family::V});
        CHECK(gens.table[3] == Generator{3, 3, 0, 0, Family::V});
        CHECK(gens.u_id(2, 0) == 0);
        CHECK(gens.u_id(0, 0) == 1);
        CHECK(gens.v_id(2, 0) == 2);
        CHECK(gens.v_id(0, 0) == 3);
        CHECK(gens.name(0) == "u0");
        CHECK(gens.name(1) == "u2");
        CHECK(gens.name(2) == "v1");
        CHECK(gens.name(3) == "v3");
    }
    SUBCASE("open product with even classes") {
        const GeneratorSet gens = build_generators(builtin_catalog("CP2xR2"));
        REQUIRE(gens.u_count == 3);
        REQUIRE(gens.table.size() == 6);
        CHECK(gens.table[0].degree == 0);
        CHECK(gens.table[1].degree == 2);
        CHECK(gens.table[2].degree == 4);
        CHECK(gens.table[3].degree == 5);
        CHECK(gens.table[4].degree == 7);
        CHECK(gens.table[5].degree == 9);
    }
    SUBCASE("u_0 is always id zero with degree zero") {
        for (const std::string& name : catalog_names()) {
            const ManifoldData m = builtin_catalog(name);
            if (m.dim % 2 != 0) continue;
            const GeneratorSet gens = build_generators(m);
            CHECK(gens.table[0].degree == 0);
            CHECK(gens.table[0].source_degree == m.dim);
            CHECK(gens.table[0].family == Family::U);
            // U degrees lie in [0, d]; V degrees in [d - 1, 2d - 1].
            for (const Generator& g : gens.U()) {
                CHECK(g.degree >= 0);
                CHECK(g.degree <= m.dim);
            }
            for (const Generator& g : gens.V()) {
                CHECK(g.degree >= m.dim - 1);
                CHECK(g.degree <= 2 * m.dim - 1);
            }
        }
    }
}

TEST_CASE("generators for the closed product with odd classes") {
    const ManifoldData m = load_manifold(fixtures::s3xs3());
    const GeneratorSet gens = build_generators(m);
    REQUIRE(gens.u_count == 4);
    REQUIRE(gens.table.size() == 8);
    CHECK(gens.table[0].degree == 0);   // u0, source 6
    CHECK(gens.table[1].degree == 3);   // u3_0, source 3
    CHECK(gens.table[2].degree == 3);   // u3_1
    CHECK(gens.table[3].degree == 6);   // u6, source 0
    CHECK(gens.table[4].degree == 5);   // v5, source 6
    CHECK(gens.table[5].degree == 8);   // v8_0, source 3
    CHECK(gens.table[6].degree == 8);   // v8_1
    CHECK(gens.table[7].degree == 11);  // v11, source 0
    CHECK(gens.name(1) == "u3_0");
    CHECK(gens.name(2) == "u3_1");
    CHECK(gens.name(3) == "u6");
    CHECK(gens.name(6) == "v8_1");
}

TEST_CASE("generator hypotheses") {
    CHECK_THROWS_AS((void)build_generators(builtin_catalog("S^3")), hypothesis_error);
    ManifoldData disconnected;
    disconnected.name = "two-planes";
    disconnected.dim = 2;
    disconnected.open = true;
    disconnected.hc_untwisted = {{2, 2}};
    disconnected.hc_twisted = {{2, 2}};
    CHECK_THROWS_AS((void)build_generators(disconnected), hypothesis_error);
}

TEST_CASE("pair contraction values") {
    SUBCASE("two-sphere") {
        const ManifoldData m = builtin_catalog("S^2");
        const GeneratorSet gens = build_generators(m);
        using Terms = std::vector<std::pair<GenId, Rational>>;
        CHECK(pair_contraction(gens, m, 0, 1) == Terms{{2, Rational(1)}});
        CHECK(pair_contraction(gens, m, 1, 0) == Terms{{2, Rational(1)}});
        CHECK(pair_contraction(gens, m, 1, 1) == Terms{{3, Rational(1)}});
        CHECK(pair_contraction(gens, m, 0, 0).empty());
    }
    SUBCASE("complex projective plane") {
        const ManifoldData m = builtin_catalog("CP^2");
        const GeneratorSet gens = build_generators(m);
        // u_2 * u_2 lands on v_3, the V-class over the top cup square h^2.
        const auto terms = pair_contraction(gens, m, 1, 1);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].first == gens.v_id(4, 0));
        CHECK(terms[0].second == Rational(1));
    }
    SUBCASE("odd classes pick up the twist sign") {
        const ManifoldData m = load_manifold(fixtures::s3xs3());
        const GeneratorSet gens = build_generators(m);
        using Terms = std::vector<std::pair<GenId, Rational>>;
        CHECK(pair_contraction(gens, m, 1, 2) == Terms{{4, Rational(-1)}});
        CHECK(pair_contraction(gens, m, 2, 1) == Terms{{4, Rational(1)}});
        CHECK(pair_contraction(gens, m, 1, 1).empty());
        CHECK(pair_contraction(gens, m, 1, 3) == Terms{{5, Rational(1)}});
        CHECK(pair_contraction(gens, m, 2, 3) == Terms{{6, Rational(1)}});
        CHECK(pair_contraction(gens, m, 3, 3) == Terms{{7, Rational(1)}});
        CHECK(pair_contraction(gens, m, 0, 1).empty());  // degree overflow
    }
    SUBCASE("no products over euclidean space") {
        const ManifoldData m = builtin_catalog("R^6");
        const GeneratorSet gens = build_generators(m);
        CHECK(pair_contraction(gens, m, 0, 0).empty());
    }
}

TEST_CASE("theta slice bases over the two-sphere") {
    const GeneratorSet gens = build_generators(builtin_catalog("S^2"));

    SUBCASE("two points, weight zero") {
        for (int i : {0, 2, 4}) {
            const ThetaSlice slice = build_theta_slice(gens, 2, i, 0);
            REQUIRE(slice.basis.size() == 1);
            CHECK(ids(slice.basis[0]) ==
                  std::vector<GenId>{static_cast<GenId>(i > 2), static_cast<GenId>(i > 0)});
        }
        CHECK(build_theta_slice(gens, 2, 1, 0).basis.empty());
        CHECK(build_theta_slice(gens, 2, 3, 0).basis.empty());
    }
    SUBCASE("three points, weight one, degree three is ordered lexicographically") {
        const ThetaSlice slice = build_theta_slice(gens, 3, 3, 1);
        REQUIRE(slice.basis.size() == 2);
        CHECK(ids(slice.basis[0]) == std::vector<GenId>{0, 3});  // u0*v3
        CHECK(ids(slice.basis[1]) == std::vector<GenId>{1, 2});  // u2*v1
        CHECK(gens.name(slice.basis[0]) == "u0*v3");
        CHECK(gens.name(slice.basis[1]) == "u2*v1");
    }
    SUBCASE("one point reproduces the generators") {
        for (const Generator& g : gens.U()) {
            const ThetaSlice slice = build_theta_slice(gens, 1, g.degree, 0);
            REQUIRE(slice.basis.size() == 1);
            CHECK(ids(slice.basis[0]) == std::vector<GenId>{g.id});
        }
    }
    SUBCASE("zero points") {
        const ThetaSlice slice = build_theta_slice(gens, 0, 0, 0);
        REQUIRE(slice.basis.size() == 1);
        CHECK(slice.basis[0].factors.empty());
        CHECK(gens.name(slice.basis[0]) == "1");
        CHECK(build_theta_slice(gens, 0, 1, 0).basis.empty());
    }
}

TEST_CASE("slice invariants and counting") {
    for (const char* source : {"CP2xR2", "S^2"}) {
        const ManifoldData m = builtin_catalog(source);
        const GeneratorSet gens = build_generators(m);
        const int k = 4;
        for (int w = 0; 2 * w <= k; ++w) {
            for (int i = 0; i <= 20; ++i) {
                const ThetaSlice slice = build_theta_slice(gens, k, i, w);
                CHECK(static_cast<long long>(slice.basis.size()) ==
                      count_theta_slice(gens, k, i, w));
                CHECK(slice.index.size() == slice.basis.size());
                for (std::size_t j = 0; j < slice.basis.size(); ++j) {
                    const Monomial& b = slice.basis[j];
                    CHECK(monomial_valid(b, gens.table));
                    CHECK(b.degree == i);
                    CHECK(b.weight == w);
                    CHECK(b.length == k);
                    CHECK(static_cast<int>(b.factors.size()) == k - w);
                    CHECK(slice.index.at(b) == j);
                    if (j > 0) CHECK(slice.basis[j - 1] < b);
                }
            }
        }
    }
}

TEST_CASE("slice cap") {
    const GeneratorSet gens = build_generators(builtin_catalog("CP2xR2"));
    CHECK_THROWS_WITH_AS((void)build_theta_slice(gens, 2, 4, 0, 1),
                         doctest::Contains("window too large"), cap_exceeded);
    CHECK_NOTHROW((void)build_theta_slice(gens, 2, 4, 0, 16));
}

TEST_CASE("differential hand values over the two-sphere") {
    const ManifoldData m = builtin_catalog("S^2");
    const GeneratorSet gens = build_generators(m);

    SUBCASE("two points") {
        const DifferentialMatrix d1 = assemble_differential(gens, m, 2, 2, 0);
        REQUIRE(d1.entries.n_rows() == 1);
        REQUIRE(d1.entries.n_cols() == 1);
        CHECK(d1.entries.at(0, 0) == Rational(1));  // u0*u2 -> v1

        const DifferentialMatrix d2 = assemble_differential(gens, m, 2, 4, 0);
        CHECK(d2.entries.at(0, 0) == Rational(1));  // u2^2 -> v3
    }
    SUBCASE("three points: repeated factors multiply the entry") {
        const DifferentialMatrix d = assemble_differential(gens, m, 3, 2, 0);
        REQUIRE(d.source.basis.size() == 1);
        CHECK(ids(d.source.basis[0]) == std::vector<GenId>{0, 0, 1});
        REQUIRE(d.target.basis.size() == 1);
        CHECK(ids(d.target.basis[0]) == std::vector<GenId>{0, 2});
        CHECK(d.entries.at(0, 0) == Rational(2));  // u0^2*u2 -> 2 u0*v1
    }
    SUBCASE("four points, top weight-zero slice") {
        const DifferentialMatrix d = assemble_differential(gens, m, 4, 6, 0);
        REQUIRE(d.source.basis.size() == 1);
        CHECK(ids(d.source.basis[0]) == std::vector<GenId>{0, 1, 1, 1});
        REQUIRE(d.target.basis.size() == 2);
        CHECK(ids(d.target.basis[0]) == std::vector<GenId>{0, 1, 3});
        CHECK(ids(d.target.basis[1]) == std::vector<GenId>{1, 1, 2});
        CHECK(d.entries.at(0, 0) == Rational(3));  // 3 u0*u2*v3
        CHECK(d.entries.at(1, 0) == Rational(3));  // 3 u2^2*v1
    }
    SUBCASE("four points, next slice, and the square dies") {
        const DifferentialMatrix d = assemble_differential(gens, m, 4, 5, 1);
        REQUIRE(d.source.basis.size() == 2);
        REQUIRE(d.target.basis.size() == 1);
        CHECK(ids(d.target.basis[0]) == std::vector<GenId>{2, 3});
        CHECK(d.entries.at(0, 0) == Rational(1));   // u0*u2*v3 -> v1*v3
        CHECK(d.entries.at(0, 1) == Rational(-1));  // u2^2*v1 -> -v1*v3
        const DifferentialMatrix up = assemble_differential(gens, m, 4, 6, 0);
        CHECK(multiply(d.entries, up.entries).is_zero());
    }
}

TEST_CASE("differential hand values with odd classes") {
    const ManifoldData m = load_manifold(fixtures::s3xs3());
    const GeneratorSet gens = build_generators(m);
    const DifferentialMatrix d = assemble_differential(gens, m, 4, 18, 0);

    REQUIRE(d.source.basis.size() == 2);
    CHECK(ids(d.source.basis[0]) == std::vector<GenId>{0, 3, 3, 3});  // u0*u6^3
    CHECK(ids(d.source.basis[1]) == std::vector<GenId>{1, 2, 3, 3});  // u3_0*u3_1*u6^2

    const std::size_t col0 = 0, col1 = 1;
    CHECK(d.entries.at(static_cast<int>(d.target.index.at(mono(gens, {3, 3, 4}))),
                       static_cast<int>(col0)) == Rational(3));
    CHECK(d.entries.at(static_cast<int>(d.target.index.at(mono(gens, {0, 3, 7}))),
                       static_cast<int>(col0)) == Rational(3));

    CHECK(d.entries.at(static_cast<int>(d.target.index.at(mono(gens, {3, 3, 4}))),
                       static_cast<int>(col1)) == Rational(-1));
    CHECK(d.entries.at(static_cast<int>(d.target.index.at(mono(gens, {2, 3, 5}))),
                       static_cast<int>(col1)) == Rational(2));
    CHECK(d.entries.at(static_cast<int>(d.target.index.at(mono(gens, {1, 3, 6}))),
                       static_cast<int>(col1)) == Rational(-2));
    CHECK(d.entries.at(static_cast<int>(d.target.index.at(mono(gens, {1, 2, 7}))),
                       static_cast<int>(col1)) == Rational(1));

    const DifferentialMatrix next = assemble_differential(gens, m, 4, 17, 1);
    CHECK(multiply(next.entries, d.entries).is_zero());
}

TEST_CASE("square of the differential vanishes") {
    SUBCASE("catalog fixtures") {
        for (const std::string& name : catalog_names()) {
            const ManifoldData m = builtin_catalog(name);
            if (m.dim % 2 != 0) continue;
            const GeneratorSet gens = build_generators(m);
            for (int k = 0; k <= 4; ++k) {
                CAPTURE(name);
                CAPTURE(k);
                CHECK(!d2_check(gens, m, k, 12).has_value());
            }
        }
    }
    SUBCASE("hand fixtures with odd classes") {
        for (const std::string& doc : {fixtures::s3xs3(), fixtures::t2xr4()}) {
            const ManifoldData m = load_manifold(doc);
            const GeneratorSet gens = build_generators(m);
            for (int k = 0; k <= 5; ++k) {
                CAPTURE(m.name);
                CAPTURE(k);
                CHECK(!d2_check(gens, m, k, 16).has_value());
            }
        }
    }
}

TEST_CASE("square vanishes for arbitrary pairing values") {
    // The cancellation in the square is structural: it needs degree additivity
    // of the pairing, which the data model enforces, but no symmetry of the
    // values. Random tables, including asymmetric ones, must still square to
    // zero.
    std::mt19937 rng(20260816u);
    std::uniform_int_distribution<int> rank(0, 2);
    std::uniform_int_distribution<int> numerator(-2, 2);
    std::uniform_int_distribution<int> denominator(1, 2);
    std::bernoulli_distribution keep(0.6);

    for (int trial = 0; trial < 8; ++trial) {
        ManifoldData m;
        m.name = "random";
        m.dim = 6;
        m.open = trial % 2 == 0;
        m.hc_twisted = {{6, 1}};
        for (int p = 2; p <= 5; ++p) {
            const int r = rank(rng);
            if (r > 0) m.hc_twisted[p] = r;
        }
        for (int p = 0; p <= 6; ++p) {
            const int r = rank(rng);
            if (r > 0) m.hc_untwisted[p] = r;
        }
        for (const auto& [p, pr] : m.hc_twisted) {
            for (const auto& [q, qr] : m.hc_twisted) {
                if (p + q > 6) continue;
                const int target = m.hc_rank(p + q);
                if (target == 0) continue;
                for (int a = 0; a < pr; ++a) {
                    for (int b = 0; b < qr; ++b) {
                        if (!keep(rng)) continue;
                        CupTable::Value value;
                        for (int t = 0; t < target; ++t) {
                            const int num = numerator(rng);
                            if (num != 0) value.push_back({t, Rational(num, denominator(rng))});
                        }
                        m.cup.set({p, a, q, b}, value);
                    }
                }
            }
        }
        const GeneratorSet gens = build_generators(m);
        for (int k = 0; k <= 4; ++k) {
            CAPTURE(trial);
            CAPTURE(k);
            CHECK(!d2_check(gens, m, k, 12).has_value());
        }
    }
}

TEST_CASE("vanishing cup table forces a zero differential") {
    for (const char* name : {"CP2xR2", "S2xR4", "R^8"}) {
        const ManifoldData m = builtin_catalog(name);
        const GeneratorSet gens = build_generators(m);
        for (int k = 0; k <= 4; ++k) {
            for (int w = 0; 2 * (w + 1) <= k; ++w) {
                for (int i = 0; i <= 12; ++i) {
                    CHECK(assemble_differential(gens, m, k, i, w).entries.is_zero());
                }
            }
        }
    }
}

TEST_CASE("monomial names") {
    const GeneratorSet gens = build_generators(builtin_catalog("S^2"));
    CHECK(gens.name(mono(gens, {1, 1, 3})) == "u2^2*v3");
    CHECK(gens.name(mono(gens, {0, 0, 0})) == "u0^3");
    CHECK(gens.name(mono(gens, {})) == "1");
}

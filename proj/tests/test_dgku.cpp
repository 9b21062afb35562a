#include <doctest.h>

#include <algorithm>

#include "cohid/catalogue.hpp"
#include "cohid/fiber.hpp"
#include "cohid/random.hpp"
#include "helpers.hpp"

using namespace cohid;
using testing::bar;
using testing::inf;
using testing::q;
using testing::ray;

namespace {

KuCohomology h_of(const FreeCdga& a) { return cohomology_ku(to_dgku(a)); }

// K[u]/(u^c) with generator in degree s, zero differential.
DgKuModule chain(int s, int c) {
    Field f = Field::rationals();
    int top = s + 2 * c + 2;
    std::vector<std::size_t> dims(static_cast<std::size_t>(top + 1), 0);
    for (int k = 0; k < c; ++k) dims[static_cast<std::size_t>(s + 2 * k)] = 1;
    std::vector<Matrix> d, u;
    for (int n = 0; n < top; ++n) d.emplace_back(f, dims[static_cast<std::size_t>(n + 1)], dims[static_cast<std::size_t>(n)]);
    for (int n = 0; n + 2 <= top; ++n) {
        Matrix m(f, dims[static_cast<std::size_t>(n + 2)], dims[static_cast<std::size_t>(n)]);
        if (m.rows() == 1 && m.cols() == 1) m(0, 0) = FieldElement::one(f);
        u.push_back(m);
    }
    return DgKuModule(f, dims, d, u, {KuTail::zero_above, top - 2});
}

DgKuModule sum(const DgKuModule& a, const DgKuModule& b) {
    int top = std::max(a.top(), b.top());
    std::vector<std::size_t> dims;
    std::vector<Matrix> d, u;
    for (int n = 0; n <= top; ++n) dims.push_back(a.dim(n) + b.dim(n));
    for (int n = 0; n < top; ++n) d.push_back(direct_sum(a.d_at(n), b.d_at(n)));
    for (int n = 0; n + 2 <= top; ++n) u.push_back(direct_sum(a.u_at(n), b.u_at(n)));
    return DgKuModule(a.field(), dims, d, u, {KuTail::zero_above, top - 2});
}

ExtendedRational engine_to_ground(const DgKuModule& m, int k) { return d_cohI_k(m, ground_module(m.field()), k); }
ExtendedRational engine_to_ku2(const DgKuModule& m, int k) { return d_cohI_k(m, ku_mod_u2_module(m.field()), k); }

}  // namespace

TEST_SUITE_BEGIN("dgku");

TEST_CASE("module invariants") {
    Field f = Field::rationals();
    // d∘d = 0 fails on K -> K -> K with identities.
    CHECK_THROWS(DgKuModule(f, {1, 1, 1}, {Matrix::identity(f, 1), Matrix::identity(f, 1)}, {Matrix(f, 1, 1)},
                            {KuTail::zero_above, 0}));
    // u must commute with d.
    CHECK_THROWS_WITH(DgKuModule(f, {1, 0, 1, 1}, {Matrix(f, 0, 1), Matrix(f, 1, 0), Matrix::identity(f, 1)},
                                 {Matrix::identity(f, 1), Matrix(f, 1, 0)}, {KuTail::zero_above, 1}),
                      "u∘d ≠ d∘u in degree 0");
    CHECK_THROWS(DgKuModule(f, {1, 0, 0}, {Matrix(f, 0, 1), Matrix(f, 0, 0)}, {Matrix(f, 0, 1)},
                            {KuTail::zero_above, 5}));
}

TEST_CASE("cohomology") {
    auto h = cohomology_ku(chain(0, 4));
    for (int n = 0; n <= 6; n += 2) CHECK(h.dim(n) == 1);
    CHECK(split_barcode(h, 0) == Barcode{bar(0, 4)});
    Field f = Field::rationals();
    DgKuModule acyclic(f, {1, 1, 0}, {Matrix::identity(f, 1), Matrix(f, 0, 1)}, {Matrix(f, 0, 1)},
                       {KuTail::zero_above, 0});
    auto ha = cohomology_ku(acyclic);
    CHECK(ha.dim(0) == 0);
    CHECK(ha.dim(1) == 0);
}

TEST_CASE("cohomology of the M1 model") {
    auto h = h_of(m_model(1));
    // Torsion orders are the bar lengths of each split.
    auto lengths = [&](int k) {
        std::vector<Rational> out;
        Barcode b = split_barcode(h, k);
        for (const auto& x : b.bars()) out.push_back(x.length().value());
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(lengths(0) == std::vector<Rational>{1, 7});
    CHECK(lengths(1) == std::vector<Rational>{4, 4});
}

TEST_CASE("split barcodes") {
    Field f = Field::rationals();
    CHECK(split_barcode(cohomology_ku(ground_module(f)), 0) == Barcode{bar(0, 1)});
    CHECK(split_barcode(cohomology_ku(ground_module(f)), 1).empty());
    CHECK(split_barcode(h_of(m_model(0)), 1) == Barcode{bar(1, 5), bar(1, 5)});
    CHECK(split_barcode(h_of(m_model(0)), 0) == Barcode{bar(0, 4), bar(3, 7)});
    CHECK_THROWS(split_barcode(h_of(m_model(0)), 2));
}

TEST_CASE("cup length") {
    CHECK(cup_k(h_of(m_model(0)), 0) == 3);
    CHECK(cup_k(h_of(m_model(1)), 0) == 6);
    CHECK(cup_k(cohomology_ku(ground_module(Field::rationals())), 0) == 0);
    CHECK(cup_k(cohomology_ku(ground_module(Field::rationals())), 1) == -1);
    CHECK_THROWS_WITH(cup_k(cohomology_ku(loop_shape_module({})), 0), "cup undefined for infinite bars");
}

TEST_CASE("distances between catalogue models") {
    auto m0 = to_dgku(m_model(0)), m1 = to_dgku(m_model(1));
    CHECK(d_cohI_k(m0, m1, 0) == q(3));
    CHECK(d_cohI_k(m0, m1, 1) == q(0));
    CHECK(d_cohI_k(m1, m1, 0) == q(0));
    CHECK(d_cohI(to_dgku(cp_model(1, 1)), m1) == q(7, 2));
    CHECK(d_cohI(to_dgku(pt_model()), m0) == q(2));
    CHECK(d_cohI(m0, m0) == q(0));
}

TEST_CASE("distance to the ground field") {
    Field f = Field::rationals();
    CHECK(distance_to_ground(ground_module(f), 0) == q(0));
    CHECK(distance_to_ground(to_dgku(m_model(0)), 0) == q(2));
    CHECK(distance_to_ground(to_dgku(m_model(1)), 0) == q(7, 2));
    // An empty even split sits at distance 1/2 from K, not (cup + 1)/2 = 0.
    auto odd_only = regrade(chain(0, 2), 1);
    CHECK(distance_to_ground(odd_only, 0) == q(1, 2));
    CHECK(engine_to_ground(odd_only, 0) == q(1, 2));
    CHECK(distance_to_ground(ground_module(f), 1) == q(0));
    CHECK_THROWS(distance_to_ground(loop_shape_module({1}), 0));
}

TEST_CASE("distance to K[u]/(u^2)") {
    Field f = Field::rationals();
    CHECK(distance_to_ku_mod_u2(to_dgku(cp_model(1, 1)), 0) == q(0));
    CHECK(distance_to_ku_mod_u2(ground_module(f), 0) == q(1));
    CHECK(distance_to_ku_mod_u2(to_dgku(m_model(0)), 0) == q(2));
    CHECK(engine_to_ku2(to_dgku(m_model(0)), 0) == q(2));
    // A single bar of length 4 not starting at 0: the l - 1 shortcut does not apply.
    auto late = regrade(chain(0, 3), 4);
    CHECK(split_barcode(cohomology_ku(late), 0) == Barcode{bar(2, 5)});
    CHECK(engine_to_ku2(late, 0) == q(3, 2));
    CHECK(distance_to_ku_mod_u2(late, 0) == q(3, 2));
    // Two bars with a unique longest one at 0.
    auto two = sum(chain(0, 3), chain(4, 1));
    CHECK(distance_to_ku_mod_u2(two, 0) == engine_to_ku2(two, 0));
    CHECK_THROWS(distance_to_ku_mod_u2(loop_shape_module({1}), 0));
}

TEST_CASE("closed forms agree with the engine on random modules") {
    Rng rng(41);
    for (Field f : {Field::rationals(), Field::prime(2)})
        for (int trial = 0; trial < 80; ++trial) {
            auto m = trial % 2 ? random_dgku(f, rng) : random_dgku_formal(f, rng);
            for (int k = 0; k <= 1; ++k) {
                CHECK(distance_to_ground(m, k) == engine_to_ground(m, k));
                CHECK(distance_to_ku_mod_u2(m, k) == engine_to_ku2(m, k));
            }
        }
}

TEST_CASE("cup bounds") {
    auto m0 = h_of(m_model(0)), m1 = h_of(m_model(1));
    auto b = cup_bounds(m0, m1, 0);
    REQUIRE(b.lower.has_value());
    CHECK(*b.lower == Rational(3, 2));
    CHECK(b.upper == Rational(7, 2));
    auto same = cup_bounds(m0, m0, 0);
    CHECK(*same.lower == Rational(0));
    CHECK(same.upper == Rational(2));
    auto c = cup_bounds(h_of(cp_model(3, 1)), m0, 0);
    CHECK(*c.lower == Rational(0));
    CHECK(c.upper == Rational(2));
    CHECK(d_cohI_k(to_dgku(cp_model(3, 1)), to_dgku(m_model(0)), 0) == q(2));
    // Against K the lower bound is withheld.
    CHECK_FALSE(cup_bounds(cohomology_ku(ground_module(Field::rationals())), m0, 0).lower.has_value());
}

TEST_CASE("regrading") {
    auto m0 = to_dgku(m_model(0)), m1 = to_dgku(m_model(1));
    CHECK(d_cohI_k(regrade(m0, 2), regrade(m1, 2), 0) == q(3));
    CHECK(d_cohI_k(regrade(m0, 1), regrade(m1, 1), 1) == q(3));
    CHECK(d_cohI_k(regrade(m0, 1), regrade(m1, 1), 0) == q(0));
    CHECK_THROWS(regrade(m0, -1));
}

TEST_CASE("infinite bars") {
    auto loop = to_dgku(x_a_model(Rational(1)));
    CHECK(d_cohI(loop, loop_shape_module({2})) == inf);
    CHECK(d_cohI(loop_shape_module({}), loop_shape_module({})) == q(0));
    auto h = cohomology_ku(loop_shape_module({4, 1}));
    CHECK(split_barcode(h, 0) == Barcode{ray(0), bar(2, 3)});
    CHECK(split_barcode(h, 1) == Barcode{bar(0, 1)});
}

TEST_CASE("periodic extension") {
    auto m = loop_shape_module({1, 2});
    auto e = extend_periodic(m, m.top() + 6);
    CHECK(split_barcode(cohomology_ku(e), 0) == split_barcode(cohomology_ku(m), 0));
    CHECK_THROWS(extend_periodic(to_dgku(m_model(0)), 20));
}

TEST_CASE("loop shape dichotomy") {
    auto a = cohomology_ku(loop_shape_module({4}));
    auto b = cohomology_ku(loop_shape_module({10}));
    CHECK(loop_shape_distance(a, a) == q(0));
    CHECK(loop_shape_distance(a, b) == q(1, 2));
    auto no_free = cohomology_ku(regrade(ground_module(Field::rationals()), 2));
    CHECK_THROWS_WITH(loop_shape_distance(cohomology_ku(loop_shape_module({})), no_free), "not of BV-exact shape");
}

TEST_CASE("e2 collapse distance") {
    FiberSignature point{{1}}, s2{{1, 0, 1}}, s4{{1, 0, 0, 0, 1}};
    CHECK(e2_collapse_distance(s2, s4, 0) == q(1));
    CHECK(e2_collapse_distance(s2, s2, 0) == q(0));
    CHECK(e2_collapse_distance(point, s2, 0) == inf);
    CHECK(collapse_barcode(s4, 0) == Barcode{ray(0), ray(2)});
}

TEST_CASE("totalization") {
    Field f = Field::rationals();
    auto module = widen(realize(Barcode{bar(1, 3)}), 0, 2);
    // F^1 = 0 is compatible only when t vanishes, and then Tot is the module itself.
    auto units = widen(realize(Barcode{bar(1, 2), bar(2, 3), bar(2, 3)}), 0, 2);
    FilteredKtModule trivial{units, {{}, {{}}, {{}, {}}}};
    CHECK(decompose(totalize(trivial)) == decompose(units));
    CHECK_THROWS(totalize(FilteredKtModule{module, {{}, {{}}, {{}, {}}}}));

    // t maps H^1 into F^1 H^2 as required, yet the class of H^1 is not in F^1.
    // The totalization then splits the bar: containment alone does not force Tot to agree.
    Vector e{FieldElement::one(f)};
    FilteredKtModule jump{module, {{}, {{}}, {{e}, {e}}}};
    CHECK(decompose(totalize(jump)) == Barcode{bar(1, 2), bar(2, 3)});

    FilteredKtModule bad{module, {{}, {{e}}, {{}, {}}}};
    CHECK_THROWS(totalize(bad));
}

TEST_CASE("adapted filtrations totalize to the module") {
    Rng rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        Barcode b = random_integer_barcode(rng, 5, 0, 6, false);
        auto fm = random_filtration(b, rng);
        CHECK(decompose(totalize(fm)) == b);
    }
}

TEST_CASE("u-exponent filtration of the models") {
    for (const char* ref : {"m:0", "m:1", "cp:3:1"})
        for (int k = 0; k <= 1; ++k) {
            auto a = builtin(ref);
            CHECK(decompose(totalize(u_exponent_filtration(a, k))) == split_barcode(h_of(a), k));
        }
}

TEST_CASE("dbg module from a dg K[u]-module needs enough degrees") {
    CHECK_THROWS(persistence_dg(to_dgku(m_model(0)), 1, 0));
}

TEST_SUITE_END();

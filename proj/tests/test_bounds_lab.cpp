#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abelgrowth/bfs.hpp"
#include "abelgrowth/bounds.hpp"
#include "abelgrowth/errors.hpp"
#include "abelgrowth/formulas.hpp"
#include "abelgrowth/witnesses.hpp"
#include "oracles.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <random>

using namespace abelgrowth;
using oracle::el;

namespace {

const GroupSpec kZ2(2, TorsionGroup::trivial());
const GroupSpec kZ3(3, TorsionGroup::trivial());

GeneratingSet monoid_set(const GroupSpec& spec, std::vector<GroupElement> gens) {
    return GeneratingSet::create(spec, std::move(gens), SetKind::Monoid);
}

} // namespace

TEST_CASE("minimal representations over the plus-shaped set") {
    MinimalRep a = minimal_rep(std::array<std::int64_t, 2>{-2, 1});
    CHECK(a.coeffs == std::vector<std::int64_t>{0, 3});
    CHECK(a.v_count == 2);
    CHECK(a.length() == 5);

    MinimalRep b = minimal_rep(std::array<std::int64_t, 2>{-1, -3});
    CHECK(b.coeffs == std::vector<std::int64_t>{2, 0});
    CHECK(b.v_count == 3);
    CHECK(b.length() == 5);

    MinimalRep c = minimal_rep(std::array<std::int64_t, 2>{4, 0});
    CHECK(c.coeffs == std::vector<std::int64_t>{4, 0});
    CHECK(c.v_count == 0);
    CHECK(c.length() == 4);
}

TEST_CASE("minimal representations are reconstructions of minimal length") {
    // every representation x = sum c_j e_j - v(1,..,1) has c_j = x_j + v, so
    // the length is strictly increasing in v and the smallest legal v wins
    for (int x0 = -6; x0 <= 6; ++x0) {
        for (int x1 = -6; x1 <= 6; ++x1) {
            for (int x2 = -6; x2 <= 6; ++x2) {
                std::array<std::int64_t, 3> x{x0, x1, x2};
                MinimalRep rep = minimal_rep(x);
                // reconstruct
                for (int j = 0; j < 3; ++j) {
                    CHECK(rep.coeffs[j] - rep.v_count == x[j]);
                    CHECK(rep.coeffs[j] >= 0);
                }
                CHECK(rep.v_count >= 0);
                if (rep.v_count > 0) {
                    CHECK(*std::min_element(rep.coeffs.begin(), rep.coeffs.end()) == 0);
                }
                std::array<int, 3> xi{x0, x1, x2};
                CHECK(rep.length() == oracle::plus_length(xi));
            }
        }
    }
}

TEST_CASE("phi on the standard set is the identity") {
    GeneratingSet s = monoid_set(kZ2, oracle::std_monoid(2));
    PhiContext ctx = build_phi(s);
    CHECK(ctx.dim() == 2);
    CHECK(ctx.basis_indices() == std::vector<int>{0, 1});
    CHECK(ctx.minimizer_indices() == std::vector<int>{2, 2});
    for (int x0 = -5; x0 <= 5; ++x0) {
        for (int x1 = -5; x1 <= 5; ++x1) {
            std::array<std::int64_t, 2> x{x0, x1};
            CHECK(ctx.apply(x) == std::vector<std::int64_t>{x0, x1});
        }
    }
    PhiVerification v = verify_phi(ctx, 6, 6);
    CHECK(v.ok());
}

TEST_CASE("phi with a scaled basis direction") {
    GeneratingSet s = monoid_set(kZ2, {el({2, 0}), el({0, 1}), el({-1, -1})});
    PhiContext ctx = build_phi(s);
    CHECK(ctx.basis_indices() == std::vector<int>{0, 1});
    // both coordinates are minimized by the same member
    CHECK(ctx.minimizer_indices() == std::vector<int>{2, 2});
    CHECK(ctx.coordinate(0, std::array<std::int64_t, 2>{-1, 2}) == Ratio(-1, 2));
    CHECK(ctx.coordinate(1, std::array<std::int64_t, 2>{-1, 2}) == Ratio(2));

    // (-1, 2) = 0*(2,0) + 3*(0,1) + 1*(-1,-1) lands on itself
    CHECK(ctx.apply(std::array<std::int64_t, 2>{-1, 2}) == std::vector<std::int64_t>{-1, 2});
    // (1, 1) is nonnegative, so it maps through the basis alone
    CHECK(ctx.apply(std::array<std::int64_t, 2>{1, 1}) == std::vector<std::int64_t>{2, 1});

    PhiVerification v = verify_phi(ctx, 20, 25);
    CHECK(v.injective);
    CHECK(v.balls_contained);
    CHECK(v.reconstruction_ok);
    CHECK(v.beta_dominates);
    CHECK(v.failure.empty());
}

TEST_CASE("phi with distinct minimizers per coordinate") {
    GeneratingSet s = monoid_set(kZ2, {el({1, 0}), el({0, 1}), el({-3, 1}), el({1, -2})});
    PhiContext ctx = build_phi(s);
    CHECK(ctx.basis_indices() == std::vector<int>{0, 1});
    CHECK(ctx.minimizer_indices() == std::vector<int>{2, 3});

    // x = (-1,-1) has m(x) = 0, so it routes through (-3,1)
    CHECK(ctx.m_of(std::array<std::int64_t, 2>{-1, -1}) == 0);
    CHECK(ctx.apply(std::array<std::int64_t, 2>{-1, -1}) == std::vector<std::int64_t>{-3, 1});
    // and m' recovers the routing coordinate on the image
    CHECK(ctx.m_prime_of(std::array<std::int64_t, 2>{-3, 1}) == 0);

    CHECK(ctx.m_of(std::array<std::int64_t, 2>{2, -1}) == 1);
    CHECK(verify_phi(ctx, 15, 20).ok());
}

TEST_CASE("phi rejects unsuitable sets") {
    GeneratingSet sym = GeneratingSet::create(kZ2, oracle::std_symmetric(2), SetKind::Symmetric);
    CHECK_THROWS_AS(build_phi(sym), ValidationError);

    GroupSpec mixed(1, TorsionGroup::from_invariant_factors({2}));
    GeneratingSet torsion_set = GeneratingSet::unchecked(
        mixed, {el({1}, 0), el({-1}, 0), el({0}, 1)}, SetKind::Monoid);
    CHECK_THROWS_AS(build_phi(torsion_set), ValidationError);
}

TEST_CASE("phi verification bounds must be positive") {
    GeneratingSet s = monoid_set(kZ2, oracle::std_monoid(2));
    PhiContext ctx = build_phi(s);
    CHECK_THROWS_AS(verify_phi(ctx, 0, 5), ValidationError);
    CHECK_THROWS_AS(verify_phi(ctx, 5, 0), ValidationError);
}

TEST_CASE("random monoid sets of the plane and space all pass the phi checks") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::int64_t> coord(-4, 4);
    int accepted = 0;
    while (accepted < 12) {
        const int d = accepted % 2 == 0 ? 2 : 3;
        const GroupSpec& spec = d == 2 ? kZ2 : kZ3;
        std::vector<GroupElement> gens;
        const int count = d + 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i) {
            std::vector<std::int64_t> v(d);
            for (auto& c : v) c = coord(rng);
            gens.push_back(el(v));
        }
        GeneratingSet::Options opts;
        opts.require_monoid_certificate = true;
        GeneratingSet s(GeneratingSet::unchecked(spec, gens, SetKind::Monoid));
        try {
            s = GeneratingSet::create(spec, gens, SetKind::Monoid, opts);
        } catch (const Error&) {
            continue; // not a monoid generating set, try another draw
        }
        ++accepted;
        PhiContext ctx = build_phi(s);
        PhiVerification v = verify_phi(ctx, d == 2 ? 10 : 5, d == 2 ? 12 : 8);
        CHECK(v.ok());
        if (!v.ok()) {
            MESSAGE("failing set, d=", d, ", seed draw ", accepted, ": ", v.failure);
        }
    }
}

TEST_CASE("symmetric sets grow at least like the standard set") {
    GeneratingSet hex = GeneratingSet::create(
        kZ2, {el({1, 0}), el({-1, 0}), el({0, 1}), el({0, -1}), el({1, 1}), el({-1, -1})},
        SetKind::Symmetric);
    DominanceReport r = symmetric_min_growth(hex, 30);
    CHECK(r.holds);
    CHECK(r.first_violation == -1);
    CHECK(r.series.beta_at(1) == 7); // strictly more than the 5 of the standard set

    GroupSpec z(1, TorsionGroup::trivial());
    GeneratingSet gapped =
        GeneratingSet::create(z, {el({2}), el({-2}), el({3}), el({-3})}, SetKind::Symmetric);
    DominanceReport g = symmetric_min_growth(gapped, 50);
    CHECK(g.holds);

    GeneratingSet std3 = GeneratingSet::create(kZ3, oracle::std_symmetric(3), SetKind::Symmetric);
    DominanceReport e = symmetric_min_growth(std3, 25);
    CHECK(e.holds); // equality is allowed

    GeneratingSet mono = monoid_set(z, {el({1}), el({-2})});
    CHECK_THROWS_AS(symmetric_min_growth(mono, 10), ValidationError);
}

TEST_CASE("torsion reduction inequality for a symmetric witness set") {
    GroupSpec spec(1, TorsionGroup::from_invariant_factors({2}));
    GeneratingSet s = GeneratingSet::create(
        spec, {el({0}, 0), el({0}, 1), el({-1}, 0), el({1}, 0)}, SetKind::Symmetric);
    ReductionReport r = reduction_inequality(s, 50);
    CHECK(r.torsion_diameter == 1);
    CHECK(r.holds);
    CHECK(r.first_violation == -1);
    // beta = 1, 4, 8, 12, ...; the projected line gives 2*(2(r-1)+1)
    CHECK(r.beta_group.beta_at(1) == 4);
    CHECK(r.beta_group.beta_at(3) == 12);
    CHECK(r.beta_projection.beta_at(2) == 5);
    for (int r2 = 1; r2 <= 50; ++r2) {
        CHECK(r.beta_group.beta_at(r2) >= 2 * r.beta_projection.beta_at(r2 - 1));
    }
}

TEST_CASE("torsion reduction inequality for a monoid witness of a nonabelian group") {
    MonoidWitnesses m = witness_monoid({symmetric_group(3)}, 1, 6);
    ReductionReport r = reduction_inequality(m.sets[0], 40);
    CHECK(r.torsion_diameter == 1);
    CHECK(r.holds);
    // flat series 1 + 6r against 6 * (ball of {-1, 0} at r-1) = 6r: tight
    CHECK(r.beta_group.beta_at(40) == 241);
    CHECK(r.beta_projection.beta_at(39) == 40);
}

TEST_CASE("torsion reduction inequality at rank 2") {
    WitnessPair w = witness_symmetric(TorsionGroup::from_invariant_factors({4}),
                                      TorsionGroup::from_invariant_factors({2}), 2, 25);
    ReductionReport r = reduction_inequality(w.left, 25);
    CHECK(r.holds);
    CHECK(r.first_violation == -1);
}

TEST_CASE("window ratio bounds the torsion order from below") {
    // no torsion: the ratio is exactly one everywhere
    GrowthSeries line = standard_symmetric_series(1, 50);
    TorsionBoundReport flat = torsion_upper_bound(line, 1, {5, 50}, SetKind::Symmetric);
    CHECK(flat.max_ratio == Ratio(1));
    CHECK(flat.argmax_radius == 5);
    CHECK(flat.candidate_floor == 1);
    CHECK_FALSE(flat.monoid_mode);

    // Z x Z/3 with all of the torsion and one lattice step each way:
    // beta(r) = 6r - 1, so the window ratio creeps up to 3
    GroupSpec z3(1, TorsionGroup::from_invariant_factors({3}));
    GeneratingSet natural = GeneratingSet::create(
        z3, {el({1}, 0), el({-1}, 0), el({0}, 1), el({0}, 2)}, SetKind::Symmetric);
    GrowthSeries series = bfs_growth(natural, {.max_radius = 200}).series;
    CHECK(series.beta_at(200) == 1199);
    TorsionBoundReport r = torsion_upper_bound(series, 1, {10, 200}, SetKind::Symmetric);
    CHECK(r.max_ratio == Ratio(1199, 401));
    CHECK(r.argmax_radius == 200);
    CHECK(r.candidate_floor == 2);

    // a wide even witness set overshoots its torsion order of four
    WitnessPair w = witness_symmetric(TorsionGroup::from_invariant_factors({4}),
                                      TorsionGroup::from_invariant_factors({8}), 1);
    GrowthSeries wide = bfs_growth(w.left, {.max_radius = 50}).series;
    TorsionBoundReport t = torsion_upper_bound(wide, 1, {10, 50}, SetKind::Symmetric);
    CHECK(t.max_ratio > Ratio(7, 2));
    CHECK(t.argmax_radius == 50);

    // monoid mode divides by the plus-shaped ball, here 2r + 1
    GrowthSeries flat6 = family_series({6, 1, Family::Monoid}, 50);
    TorsionBoundReport m = torsion_upper_bound(flat6, 1, {10, 50}, SetKind::Monoid);
    CHECK(m.monoid_mode);
    CHECK(m.max_ratio == Ratio(301, 101));
    CHECK(m.candidate_floor == 2);

    CHECK_THROWS_AS(torsion_upper_bound(line, 1, {0, 50}, SetKind::Symmetric), ValidationError);
    CHECK_THROWS_AS(torsion_upper_bound(line, 1, {10, 51}, SetKind::Symmetric), ValidationError);
    CHECK_THROWS_AS(torsion_upper_bound(line, 1, {20, 10}, SetKind::Symmetric), ValidationError);
    CHECK_THROWS_AS(torsion_upper_bound(line, 0, {5, 50}, SetKind::Symmetric), ValidationError);
}

TEST_CASE("log-log slope recovers the rank") {
    GrowthSeries b2 = standard_symmetric_series(2, 400);
    RankEstimate r2 = rank_estimate(b2, {50, 400});
    CHECK(r2.rounded == 2);
    CHECK(std::abs(r2.slope - 2.0) <= 0.15);

    GrowthSeries b3 = standard_symmetric_series(3, 120);
    RankEstimate r3 = rank_estimate(b3, {30, 120});
    CHECK(r3.rounded == 3);
    CHECK(std::abs(r3.slope - 3.0) <= 0.15);

    WitnessPair w = witness_symmetric(TorsionGroup::from_invariant_factors({6}),
                                      TorsionGroup::from_invariant_factors({2}), 1);
    GrowthSeries bw = bfs_growth(w.left, {.max_radius = 400}).series;
    RankEstimate r1 = rank_estimate(bw, {50, 400});
    CHECK(r1.rounded == 1);
    CHECK(std::abs(r1.slope - 1.0) <= 0.15);

    CHECK_THROWS_AS(rank_estimate(b3, {1, 120}), ValidationError);
    CHECK_THROWS_AS(rank_estimate(b3, {30, 121}), ValidationError);
    CHECK_THROWS_AS(rank_estimate(b3, {30, 30}), ValidationError);
}

TEST_CASE("rank of torsion parts over the field with two elements") {
    GroupSpec spec(1, TorsionGroup::from_invariant_factors({2, 2, 2, 2}));
    // torsion index of the basis vector e_i is 2^(3-i) under mixed radix
    std::vector<GroupElement> basis = {el({0}, 8), el({0}, 4), el({0}, 2), el({0}, 1)};
    CHECK(torsion_f2_rank(spec, basis) == 4);

    std::vector<GroupElement> dependent = {el({1}, 3), el({-2}, 5), el({7}, 6)};
    // 3 = (0,0,1,1), 5 = (0,1,0,1), 6 = (0,1,1,0): the third is the sum
    CHECK(torsion_f2_rank(spec, dependent) == 2);

    std::vector<GroupElement> with_identity = {el({0}, 0), el({0}, 8)};
    CHECK(torsion_f2_rank(spec, with_identity) == 1);

    GroupSpec z4(1, TorsionGroup::from_invariant_factors({4}));
    std::vector<GroupElement> bad = {el({0}, 1)};
    CHECK_THROWS_AS(torsion_f2_rank(z4, bad), ValidationError);
}

TEST_CASE("size of the smallest generating set of a finite abelian group") {
    CHECK(minimal_abelian_generators({}) == 0);
    CHECK(minimal_abelian_generators({6}) == 1);
    CHECK(minimal_abelian_generators({2, 4}) == 2);
    CHECK(minimal_abelian_generators({2, 2, 2}) == 3);
    CHECK(minimal_abelian_generators({2, 6, 12}) == 3);
    CHECK(minimal_abelian_generators({3, 3}) == 2);
    CHECK_THROWS_AS(minimal_abelian_generators({1}), ValidationError);
}

TEST_CASE("a first-ball value realized with cyclic torsion is impossible with elementary torsion") {
    for (int d = 0; d <= 2; ++d) {
        ConverseReport r = converse_counterexample(d);
        CHECK(r.d == d);
        CHECK(r.beta_g_at_1 == d + 3);
        CHECK(r.torsion_span_requirement == d + 3);
        CHECK(r.beta_gprime_at_1_floor == d + 4);
        CHECK(r.hypotheses_match);
        CHECK(r.separated);
    }
    CHECK_THROWS_AS(converse_counterexample(-1), ValidationError);
    CHECK_THROWS_AS(converse_counterexample(9), ValidationError);
}

TEST_CASE("the converse example's first ball is a real enumeration") {
    // rebuild the d = 1 set by hand and count at radius one
    GroupSpec g(1, TorsionGroup::from_invariant_factors({16}));
    std::vector<GroupElement> s = {el({1}, 0), el({0}, 1), el({0}, 15)};
    GrowthSeries series = bfs_growth_elements(g, s, {.max_radius = 1}).series;
    CHECK(series.beta_at(1) == 4);
    CHECK(converse_counterexample(1).beta_g_at_1 == 4);

    // and the competing group really needs four torsion spanners
    GroupSpec gp(1, TorsionGroup::from_invariant_factors({2, 2, 2, 2}));
    CHECK(minimal_abelian_generators({2, 2, 2, 2}) == 4);
    std::vector<GroupElement> three = {el({0}, 8), el({1}, 4), el({-1}, 2)};
    CHECK(torsion_f2_rank(gp, three) == 3); // short of the required four
}

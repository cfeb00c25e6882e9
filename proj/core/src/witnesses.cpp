#include "abelgrowth/witnesses.hpp"

#include "abelgrowth/errors.hpp"
#include "abelgrowth/formulas.hpp"
#include "abelgrowth/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace abelgrowth {

std::string_view to_string(WitnessRegime regime) noexcept {
    switch (regime) {
        case WitnessRegime::SymmetricEven: return "symmetric-even";
        case WitnessRegime::SymmetricOdd: return "symmetric-odd";
        case WitnessRegime::Monoid: return "monoid";
    }
    return "unknown";
}

namespace {

// ({0} x F) u (width-k translates x {e}). Even regime uses the interval
// [-k, k] (its 0 collapses into the torsion block), odd regime the odd
// numbers up to 2k-1 in absolute value; both are closed under negation.
// The identity (0, e) is a member, as in the construction itself; it is
// harmless for growth and keeps emitted documents literal.
std::vector<GroupElement> symmetric_rank1_elements(const GroupSpec& spec, int k,
                                                   bool odd_translates) {
    std::vector<GroupElement> out;
    for (int f = 0; f < spec.torsion().order(); ++f) out.push_back(GroupElement{{0}, f});
    for (int j = 1; j <= k; ++j) {
        const std::int64_t t = odd_translates ? 2 * j - 1 : j;
        out.push_back(GroupElement{{t}, 0});
        out.push_back(GroupElement{{-t}, 0});
    }
    return out;
}

// {(-1, e)} u ({0, ..., k-1} x F), identity included via the x = 0 block.
std::vector<GroupElement> monoid_rank1_elements(const GroupSpec& spec, int k) {
    std::vector<GroupElement> out;
    out.push_back(GroupElement{{-1}, 0});
    for (std::int64_t x = 0; x < k; ++x) {
        for (int f = 0; f < spec.torsion().order(); ++f) {
            out.push_back(GroupElement{{x}, f});
        }
    }
    return out;
}

} // namespace

WitnessPair witness_symmetric(const TorsionGroup& f1, const TorsionGroup& f2, int rank,
                              int prediction_radius) {
    if (rank < 1) throw ValidationError("witness rank must be >= 1");
    if (prediction_radius < 1) throw ValidationError("prediction radius must be >= 1");
    const int n1 = f1.order(), n2 = f2.order();
    if (n1 % 2 != n2 % 2) {
        throw ValidationError("torsion orders " + std::to_string(n1) + " and " +
                              std::to_string(n2) + " differ in parity; no matching construction");
    }
    const bool even = n1 % 2 == 0;
    const int k1 = even ? n1 / 2 : (n1 + 1) / 2;
    const int k2 = even ? n2 / 2 : (n2 + 1) / 2;

    GroupSpec g1(1, f1), g2(1, f2);
    // Each side borrows the width parameter of the other side's torsion.
    GeneratingSet left = GeneratingSet::create(
        g1, symmetric_rank1_elements(g1, k2, !even), SetKind::Symmetric);
    GeneratingSet right = GeneratingSet::create(
        g2, symmetric_rank1_elements(g2, k1, !even), SetKind::Symmetric);

    const Family family = even ? Family::Even : Family::Odd;
    GrowthSeries series1 = family_series({n1, k2, family}, prediction_radius);
    GrowthSeries series2 = family_series({n2, k1, family}, prediction_radius);
    if (!compare_series(series1, series2, prediction_radius).equal) {
        throw InvariantViolation("witness sides disagree on the predicted series");
    }

    WitnessPair pair{std::move(left), std::move(right),
                     even ? WitnessRegime::SymmetricEven : WitnessRegime::SymmetricOdd,
                     std::move(series1)};
    if (rank > 1) {
        pair.left = extend_rank(pair.left, rank - 1);
        pair.right = extend_rank(pair.right, rank - 1);
        pair.predicted = convolve_sigma(
            pair.predicted, standard_symmetric_series(rank - 1, prediction_radius),
            prediction_radius);
    }
    return pair;
}

MonoidWitnesses witness_monoid(const std::vector<TorsionGroup>& torsions, int rank,
                               std::optional<long long> common_multiple, int prediction_radius) {
    if (rank < 1) throw ValidationError("witness rank must be >= 1");
    if (prediction_radius < 1) throw ValidationError("prediction radius must be >= 1");
    if (torsions.empty()) throw ValidationError("need at least one torsion group");

    long long k_common = 1;
    for (const TorsionGroup& f : torsions) k_common = std::lcm(k_common, (long long)f.order());
    const long long k_mult = common_multiple.value_or(k_common);
    if (k_mult < 1 || k_mult > (1 << 20)) {
        throw ValidationError("common multiple " + std::to_string(k_mult) + " out of range");
    }
    for (const TorsionGroup& f : torsions) {
        if (k_mult % f.order() != 0) {
            throw ValidationError("common multiple " + std::to_string(k_mult) +
                                  " is not divisible by torsion order " +
                                  std::to_string(f.order()));
        }
    }

    MonoidWitnesses out{
        {}, k_mult,
        family_series({static_cast<int>(torsions[0].order()),
                       static_cast<int>(k_mult / torsions[0].order()), Family::Monoid},
                      prediction_radius)};
    GeneratingSet::Options options;
    options.require_monoid_certificate = false;
    for (const TorsionGroup& f : torsions) {
        GroupSpec g(1, f);
        const int k = static_cast<int>(k_mult / f.order());
        GeneratingSet set =
            GeneratingSet::create(g, monoid_rank1_elements(g, k), SetKind::Monoid, options);
        out.sets.push_back(rank > 1 ? extend_rank(set, rank - 1) : std::move(set));
    }
    if (rank > 1) {
        out.predicted = convolve_sigma(
            out.predicted, standard_monoid_series(rank - 1, prediction_radius), prediction_radius);
    }
    return out;
}

GeneratingSet extend_rank(const GeneratingSet& set, int extra) {
    if (extra < 0) throw ValidationError("extend_rank needs extra >= 0");
    if (extra == 0) return set;

    GroupSpec flat(extra, TorsionGroup::trivial());
    std::vector<GroupElement> std_set;
    for (int i = 0; i < extra; ++i) {
        GroupElement e = flat.identity();
        e.vec[i] = 1;
        std_set.push_back(e);
        if (set.kind() == SetKind::Symmetric) {
            e.vec[i] = -1;
            std_set.push_back(e);
        }
    }
    if (set.kind() == SetKind::Monoid) {
        GroupElement diag = flat.identity();
        for (int i = 0; i < extra; ++i) diag.vec[i] = -1;
        std_set.push_back(diag);
    }
    return product_generating_set(set, GeneratingSet::unchecked(flat, std_set, set.kind()));
}

GeneratingSet product_generating_set(const GeneratingSet& a, const GeneratingSet& b) {
    if (a.kind() != b.kind()) {
        throw ValidationError("cannot combine sets of different kinds");
    }
    GroupSpec g = product_group(a.group(), b.group());
    std::vector<GroupElement> elements;
    elements.reserve(a.elements().size() + b.elements().size());
    const GroupElement ea = a.group().identity(), eb = b.group().identity();
    for (const GroupElement& s : a.elements()) {
        elements.push_back(product_element(a.group(), b.group(), s, eb));
    }
    for (const GroupElement& t : b.elements()) {
        elements.push_back(product_element(a.group(), b.group(), ea, t));
    }
    GeneratingSet::Options options;
    options.require_monoid_certificate = false;
    return GeneratingSet::create(g, std::move(elements), a.kind(), options);
}

DiophantineReport diophantine_uniqueness(long long bound) {
    if (bound < 1 || bound > 512) {
        throw ValidationError("diophantine scan bound must be in [1, 512]");
    }
    DiophantineReport report;
    report.bound = bound;
    report.tuples_scanned = (bound + 1) * (bound + 1) * (bound + 1) * (bound + 1);
    // y2 is forced by the sum equation, so three loops cover the whole box.
    for (long long x1 = 0; x1 <= bound; ++x1) {
        for (long long y1 = 0; y1 <= bound; ++y1) {
            for (long long x2 = 0; x2 <= bound; ++x2) {
                const long long y2 = x1 + y1 - x2;
                if (y2 < 0 || y2 > bound) continue;
                if (x1 * y1 != x2 * y2) continue;
                ++report.collisions_checked;
                const bool same_multiset =
                    (x1 == x2 && y1 == y2) || (x1 == y2 && y1 == x2);
                if (!same_multiset) report.violations.push_back({x1, y1, x2, y2});
            }
        }
    }
    return report;
}

} // namespace abelgrowth

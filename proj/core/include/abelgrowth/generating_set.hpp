#pragma once

#include "abelgrowth/budget.hpp"
#include "abelgrowth/group.hpp"
#include "abelgrowth/numeric.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelgrowth {

// Symmetric sets must contain the inverse of each member and induce a true
// metric; monoid sets allow only nonnegative powers, so distances may be
// asymmetric and every reachability question is directional.
enum class SetKind { Symmetric, Monoid };

std::string_view to_string(SetKind kind) noexcept;

// Outcome of testing whether a finite set generates the whole group.
//
// The subgroup side is decided exactly: the lattice projections are put in
// Smith normal form and the reachable torsion subgroup is closed off, so
// Generates and ProperSubgroup are both proofs. The monoid side is only
// semi-decidable; a certificate is a word over the set equal to the inverse
// of each member, searched up to a length cap. Absence of a certificate is
// recorded as Inconclusive, never as a disproof.
struct GenerationCheck {
    enum class Verdict { Generates, ProperSubgroup, Inconclusive };

    Verdict verdict = Verdict::Inconclusive;
    std::string detail;

    // Invariant factors of the lattice spanned by the projected generators,
    // as a witness when the subgroup test fails (and for diagnostics when it
    // passes).
    std::vector<Count> lattice_invariants;

    // For monoid certificate searches: word length realizing inv(s) for each
    // member s, in input order. Empty when the search was skipped or failed.
    std::vector<int> certificate_lengths;

    bool generates() const noexcept { return verdict == Verdict::Generates; }
};

// Decides subgroup generation exactly; if certificate_cap > 0 additionally
// searches inverse certificates up to that word length. Never throws on a
// negative verdict, only on malformed input.
GenerationCheck check_generates(const GroupSpec& spec,
                                std::span<const GroupElement> elements,
                                int certificate_cap,
                                const ResourceBudget& budget = {});

// A validated generating set. Duplicates are dropped (first occurrence kept,
// order otherwise preserved); creation runs the generation check and, for
// symmetric kind, the inverse-closure check.
class GeneratingSet {
public:
    struct Options {
        // 0 = pick max(16, 2*|F| + 2), long enough for inverse words that
        // must wind through the whole torsion part.
        int certificate_cap = 0;
        // When false, a monoid set whose certificate search comes up empty is
        // accepted with monoid_certified() == false instead of throwing.
        // Group generation is still required either way.
        bool require_monoid_certificate = true;
        ResourceBudget budget{};
    };

    static GeneratingSet create(const GroupSpec& spec, std::vector<GroupElement> elements,
                                SetKind kind);
    static GeneratingSet create(const GroupSpec& spec, std::vector<GroupElement> elements,
                                SetKind kind, const Options& options);

    // Structural checks only (conformance, dedupe, inverse closure for
    // symmetric kind); skips the generation check entirely. For callers that
    // construct sets known-good or deliberately pathological.
    static GeneratingSet unchecked(const GroupSpec& spec, std::vector<GroupElement> elements,
                                   SetKind kind);

    const GroupSpec& group() const noexcept { return group_; }
    const std::vector<GroupElement>& elements() const noexcept { return elements_; }
    SetKind kind() const noexcept { return kind_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }

    // True when every member's inverse is provably reachable by a word over
    // the set (trivially so for symmetric sets). False either because the
    // search was inconclusive or because checks were skipped.
    bool monoid_certified() const noexcept { return monoid_certified_; }

    const GenerationCheck& generation_check() const noexcept { return check_; }

    bool closed_under_inverse() const;

private:
    GeneratingSet(GroupSpec group, std::vector<GroupElement> elements, SetKind kind)
        : group_(std::move(group)), elements_(std::move(elements)), kind_(kind) {}

    GroupSpec group_;
    std::vector<GroupElement> elements_;
    SetKind kind_;
    bool monoid_certified_ = false;
    GenerationCheck check_;
};

// Union of the set with its inverses, duplicates dropped, input order first.
std::vector<GroupElement> symmetric_closure(const GroupSpec& spec,
                                            std::span<const GroupElement> elements);

} // namespace abelgrowth

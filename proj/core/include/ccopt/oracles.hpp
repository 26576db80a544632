#pragma once

/// Set families over a ground set {1..n}, their oracle presentations, and
/// the simulation chain membership -> augmentation -> linear optimization.
///
/// A family is "edge-guaranteed" when it ships an explicit set E of
/// {-1,0,1}-vectors containing a direction of every edge of its member
/// polytope conv{1_F}.  That guarantee is what makes local search by
/// direction scanning globally correct, and bit-scaling turns the local
/// search into an exact linear optimizer.

#include <functional>
#include <optional>
#include <vector>

#include "ccopt/linalg.hpp"
#include "ccopt/zonotope.hpp"

namespace ccopt {

/// A subset of {1..n}, members sorted strictly increasing (1-based).
struct Subset {
    std::size_t n = 0;
    std::vector<std::size_t> members;

    Subset() = default;
    Subset(std::size_t n_, std::vector<std::size_t> members_)
        : n(n_), members(std::move(members_)) {
        std::sort(members.begin(), members.end());
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i] < 1 || members[i] > n)
                throw std::invalid_argument("subset member out of range");
            if (i > 0 && members[i] == members[i - 1])
                throw std::invalid_argument("duplicate subset member");
        }
    }

    std::size_t size() const { return members.size(); }
    bool contains(std::size_t j) const {
        return std::binary_search(members.begin(), members.end(), j);
    }

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.n == b.n && a.members == b.members;
    }
    friend bool operator<(const Subset& a, const Subset& b) { return a.members < b.members; }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i)
                s += ", ";
            s += std::to_string(members[i]);
        }
        return s + "}";
    }
};

/// A scalar weighting b: {1..n} -> Q with b(F) = sum_{j in F} b(j).
struct ScalarWeighting {
    std::size_t n = 0;
    std::vector<Rational> values;

    ScalarWeighting() = default;
    ScalarWeighting(std::size_t n_, std::vector<Rational> values_)
        : n(n_), values(std::move(values_)) {
        if (values.size() != n)
            throw std::invalid_argument("scalar weighting length mismatch");
    }

    const Rational& of(std::size_t j) const { return values[j - 1]; }
    Rational total(const Subset& f) const {
        Rational acc;
        for (std::size_t j : f.members)
            acc += values[j - 1];
        return acc;
    }
};

/// Oracle capabilities of a family; each interface is optional but at least
/// one must be present.  Oracles declared stateless may be queried from
/// concurrent threads.
struct FamilyPresentation {
    std::size_t n = 0;
    std::function<bool(const Subset&)> membership;
    std::function<std::optional<Subset>(const Subset&, const ScalarWeighting&)> augment;
    std::function<Subset(const ScalarWeighting&)> linear;
    bool stateless = true;

    bool has_membership() const { return static_cast<bool>(membership); }
    bool has_augment() const { return static_cast<bool>(augment); }
    bool has_linear() const { return static_cast<bool>(linear); }
};

/// A presented family together with an initial member F0 and a guaranteed
/// edge-direction superset E (vectors over Q^n with entries in {-1,0,1}).
/// E may be empty only when the member polytope is a single point.
struct EdgeGuaranteedFamily {
    std::size_t n = 0;
    FamilyPresentation presentation;
    Subset f0;
    GeneratorSet edges;

    EdgeGuaranteedFamily() = default;
    EdgeGuaranteedFamily(std::size_t n_, FamilyPresentation pres, Subset f0_, GeneratorSet e);
};

/// Statistics of a simulated optimization run.
struct AugmentationStats {
    std::size_t membership_calls = 0;
    std::size_t augmentations = 0; // successful improving steps
    std::size_t phases = 0;        // bit-scaling phases executed (k+1), 0 if skipped
};

/// One improving step via the membership oracle: scans signed directions
/// +e^i, -e^i in index order and returns the first F' = supp(1_F + g) that
/// is improving (b(g) > 0), admissible (1_F + g is a 0/1 vector) and a
/// member.  Returns nothing iff no such direction exists, which certifies
/// that F maximizes b over the family (E contains all edge-directions).
std::optional<Subset> augment_via_membership(const EdgeGuaranteedFamily& fam,
                                             const Subset& f,
                                             const ScalarWeighting& b,
                                             AugmentationStats* stats = nullptr);

/// Exact linear optimization from an augmentation capability (native or
/// simulated from membership).  Denominators of b are cleared to an integer
/// weighting a; for nonnegative a the bit-scaling scheme of phases
/// a^i = floor(2^{i-k} a), i = 0..k with k = 1 + max ceil(log2 |a(j)|) is
/// run (at most n successful steps per phase); otherwise plain augmentation
/// under a itself runs until no improvement.
Subset optimize_via_augmentation(const EdgeGuaranteedFamily& fam,
                                 const ScalarWeighting& b,
                                 AugmentationStats* stats = nullptr);

/// Dispatch: native linear oracle if present, else optimization simulated
/// via augmentation / membership.
Subset linear_optimize(const EdgeGuaranteedFamily& fam,
                       const ScalarWeighting& b,
                       AugmentationStats* stats = nullptr);

} // namespace ccopt

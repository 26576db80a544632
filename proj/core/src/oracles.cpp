#include "ccopt/oracles.hpp"

#include <stdexcept>

namespace ccopt {

EdgeGuaranteedFamily::EdgeGuaranteedFamily(std::size_t n_, FamilyPresentation pres,
                                           Subset f0_, GeneratorSet e)
    : n(n_), presentation(std::move(pres)), f0(std::move(f0_)), edges(std::move(e)) {
    if (!presentation.has_membership() && !presentation.has_augment() &&
        !presentation.has_linear())
        throw std::invalid_argument("family presentation has no capability");
    if (presentation.n != n || f0.n != n)
        throw std::invalid_argument("family ground-set size mismatch");
    if (edges.size() > 0 && edges.dim != n)
        throw std::invalid_argument("edge directions must live in Q^n");
    for (const auto& e_vec : edges.generators)
        for (const auto& x : e_vec)
            if (!(x == Rational(0) || x == Rational(1) || x == Rational(-1)))
                throw std::invalid_argument("edge direction entries must be -1, 0 or 1");
    if (presentation.has_membership() && !presentation.membership(f0))
        throw std::invalid_argument("initial member F0 fails the membership oracle");
}

namespace {

// 1_F + g for g in {-1,0,1}^n: admissible iff the result is a 0/1 vector,
// i.e. g adds only non-members and removes only members.
std::optional<Subset> apply_direction(const Subset& f, const RatVector& g, bool negate) {
    std::vector<std::size_t> add, remove;
    for (std::size_t j = 1; j <= f.n; ++j) {
        int gj = g[j - 1].sign();
        if (negate)
            gj = -gj;
        if (gj == 0)
            continue;
        if (gj > 0) {
            if (f.contains(j))
                return std::nullopt;
            add.push_back(j);
        } else {
            if (!f.contains(j))
                return std::nullopt;
            remove.push_back(j);
        }
    }
    std::vector<std::size_t> members;
    members.reserve(f.size() + add.size() - remove.size());
    std::size_t ri = 0;
    for (std::size_t j : f.members) {
        if (ri < remove.size() && remove[ri] == j) {
            ++ri;
            continue;
        }
        members.push_back(j);
    }
    members.insert(members.end(), add.begin(), add.end());
    return Subset(f.n, std::move(members));
}

Rational direction_weight(const ScalarWeighting& b, const RatVector& g) {
    Rational acc;
    for (std::size_t j = 0; j < b.n; ++j) {
        const int s = g[j].sign();
        if (s > 0)
            acc += b.values[j];
        else if (s < 0)
            acc -= b.values[j];
    }
    return acc;
}

std::optional<Subset> run_augment(const EdgeGuaranteedFamily& fam, const Subset& f,
                                  const ScalarWeighting& b, AugmentationStats* stats) {
    if (fam.presentation.has_augment())
        return fam.presentation.augment(f, b);
    return augment_via_membership(fam, f, b, stats);
}

// Local search: augment until no improving admissible direction remains.
Subset ascend(const EdgeGuaranteedFamily& fam, Subset f, const ScalarWeighting& b,
              AugmentationStats* stats) {
    for (;;) {
        std::optional<Subset> next = run_augment(fam, f, b, stats);
        if (!next)
            return f;
        if (stats)
            ++stats->augmentations;
        f = std::move(*next);
    }
}

std::size_t ceil_log2(const Int& x) {
    // x >= 1; bits-1 when x is a power of two, else bits.
    const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    const bool pow2 = mpz_popcount(x.get_mpz_t()) == 1;
    return pow2 ? bits - 1 : bits;
}

} // namespace

std::optional<Subset> augment_via_membership(const EdgeGuaranteedFamily& fam,
                                             const Subset& f,
                                             const ScalarWeighting& b,
                                             AugmentationStats* stats) {
    if (!fam.presentation.has_membership())
        throw std::invalid_argument("augment_via_membership needs a membership oracle");
    if (b.n != fam.n || f.n != fam.n)
        throw std::invalid_argument("augment_via_membership: size mismatch");
    {
        AugmentationStats* s = stats;
        if (s)
            ++s->membership_calls;
        if (!fam.presentation.membership(f))
            throw std::invalid_argument("augment_via_membership: F is not a member");
    }
    for (const auto& e : fam.edges.generators) {
        for (int pass = 0; pass < 2; ++pass) {
            const bool neg = pass == 1;
            Rational gain = direction_weight(b, e);
            if (neg)
                gain = -gain;
            if (gain.sign() <= 0)
                continue;
            std::optional<Subset> cand = apply_direction(f, e, neg);
            if (!cand)
                continue;
            if (stats)
                ++stats->membership_calls;
            if (fam.presentation.membership(*cand))
                return cand;
        }
    }
    return std::nullopt;
}

Subset optimize_via_augmentation(const EdgeGuaranteedFamily& fam,
                                 const ScalarWeighting& b,
                                 AugmentationStats* stats) {
    if (!fam.presentation.has_augment() && !fam.presentation.has_membership())
        throw std::invalid_argument("optimize_via_augmentation: no augmentation path");
    if (b.n != fam.n)
        throw std::invalid_argument("optimize_via_augmentation: size mismatch");

    RatVector bvec(std::vector<Rational>(b.values));
    IntVector a = clear_denominators(bvec).first;

    bool nonneg = true;
    Int maxabs = 0;
    for (const auto& x : a) {
        if (x < 0)
            nonneg = false;
        Int ax = abs(x);
        if (ax > maxabs)
            maxabs = ax;
    }

    if (maxabs == 0)
        return fam.f0; // zero weighting: every member optimal

    if (!nonneg) {
        // Fallback: plain augmentation under the cleared weighting itself.
        std::vector<Rational> av(a.begin(), a.end());
        return ascend(fam, fam.f0, ScalarWeighting(fam.n, std::move(av)), stats);
    }

    const std::size_t k = 1 + ceil_log2(maxabs);
    Subset f = fam.f0;
    for (std::size_t i = 0; i <= k; ++i) {
        std::vector<Rational> phase(fam.n);
        for (std::size_t j = 0; j < fam.n; ++j) {
            Int scaled;
            mpz_fdiv_q_2exp(scaled.get_mpz_t(), a[j].get_mpz_t(),
                            static_cast<mp_bitcnt_t>(k - i));
            phase[j] = Rational(scaled);
        }
        if (stats)
            ++stats->phases;
        f = ascend(fam, std::move(f), ScalarWeighting(fam.n, std::move(phase)), stats);
    }
    return f;
}

Subset linear_optimize(const EdgeGuaranteedFamily& fam, const ScalarWeighting& b,
                       AugmentationStats* stats) {
    if (fam.presentation.has_linear())
        return fam.presentation.linear(b);
    return optimize_via_augmentation(fam, b, stats);
}

} // namespace ccopt

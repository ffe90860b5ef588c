#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperspace/random.hpp"
#include "hyperspace/semilink.hpp"

namespace hyperspace {

/// Tally of one semilink property over seeded random trials in one semiring.
struct PropertyOutcome {
    std::string property;
    Semiring semiring;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::optional<Witness> first_witness;

    bool passed() const noexcept { return failures == 0; }
};

/// One random trial of each semilink identity, drawn from `gen`.
///
/// Inputs are constructed to satisfy each identity's precondition: shared
/// permutation patterns for the distributivity law, covering ones or the
/// identity over col(B) for hybrid associativity, and sparse arrays over
/// small random key subsets so that the disjointness conditions trigger.
inline std::vector<SemilinkReport> semilink_trial(Generator& gen, const Semiring& s) {
    std::vector<SemilinkReport> out;

    out.push_back(check_identity_interplay(s, gen.key_subset(8, 1, 8)));

    out.push_back(check_permutation_identity(gen.permutation_array(s)));

    const AssocArray a1 = gen.permutation_array(s);
    const AssocArray a2 = gen.revalue(a1);
    out.push_back(check_perm_distributivity(a1, a2, gen.array(s), gen.array(s)));

    {
        const AssocArray b = gen.array(s);
        const AssocArray c = gen.array(s);
        const AssocArray a = ones(row_keys(b), key_union(col_keys(b), col_keys(c)), s);
        auto r = check_hybrid_associativity(a, b, c);
        r.property = "hybrid_associativity_ones";
        out.push_back(std::move(r));
    }
    {
        const AssocArray a = gen.array(s);
        const AssocArray b = gen.array(s);
        auto r = check_hybrid_associativity(a, b, identity(col_keys(b), s));
        r.property = "hybrid_associativity_identity";
        out.push_back(std::move(r));
    }

    auto sparse = [&] {
        return gen.array(s, gen.key_subset(8, 0, 3), gen.key_subset(8, 0, 3), 0.6);
    };
    const AssocArray a = sparse();
    const AssocArray b = sparse();
    const AssocArray c = sparse();
    out.push_back(check_annihilation(a, b, c));
    return out;
}

/// Runs `trials` rounds of every semilink property in every built-in
/// semiring. Deterministic for a given seed.
inline std::vector<PropertyOutcome> run_semilink_suite(std::uint64_t seed, std::size_t trials) {
    std::vector<PropertyOutcome> outcomes;
    for (auto kind : Semiring::all_kinds) {
        const Semiring s(kind);
        Generator gen(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(kind) + 1)));
        std::vector<PropertyOutcome> local;
        for (std::size_t t = 0; t < trials; ++t) {
            auto reports = semilink_trial(gen, s);
            if (local.empty()) {
                for (const auto& r : reports) {
                    PropertyOutcome o;
                    o.property = r.property;
                    o.semiring = s;
                    local.push_back(std::move(o));
                }
            }
            for (std::size_t i = 0; i < reports.size(); ++i) {
                ++local[i].trials;
                if (!reports[i].holds) {
                    if (local[i].failures++ == 0) local[i].first_witness = reports[i].witness;
                }
            }
        }
        outcomes.insert(outcomes.end(), local.begin(), local.end());
    }
    return outcomes;
}

}  // namespace hyperspace

#ifndef DIGIPLANE_AFPP_HPP
#define DIGIPLANE_AFPP_HPP

#include <cstdint>

#include "digiplane/core.hpp"
#include "digiplane/retraction.hpp"

namespace digiplane {

struct SearchStats {
    std::uint64_t nodes = 0;         // assignments explored
    std::uint64_t propagations = 0;  // arc revisions performed
};

/// Outcome of an exhaustive search over continuous self-maps.
struct SearchCertificate {
    enum class Verdict {
        Witness,         // a map with the sought property was found
        Exhausted,       // the search space was exhausted: no such map
        BudgetExceeded,  // node budget ran out; verdict unknown
    };
    Verdict verdict = Verdict::BudgetExceeded;
    std::optional<SelfMap> witness;
    SearchStats stats;

    bool has_property() const { return verdict == Verdict::Exhausted; }
};

constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Search for a continuous self-map of X with no approximate fixed point
/// (no x with f(x) adjacent-or-equal to x). Exhausted means X has the
/// AFPP. Backtracking with minimum-remaining-values ordering and
/// arc-consistency propagation; deterministic given canonical order.
SearchCertificate search_afpp_violation(const Image& X, std::uint64_t budget = kDefaultBudget);

/// Same search with the weaker constraint f(x) != x. Exhausted means X
/// has the FPP.
SearchCertificate search_fixed_point_free(const Image& X, std::uint64_t budget = kDefaultBudget);

/// True iff f is continuous on X and f(x) is never adjacent-or-equal
/// to x.
bool verify_no_approx_fixed_point(const Image& X, const SelfMap& f);

/// f = inclusion . w . r restricted to X: pull a witness on a retract
/// back to the larger image. Every r(p) must lie in w's domain.
Result<SelfMap> compose_through_retraction(const Retraction& r, const SelfMap& w, const Image& X);

}  // namespace digiplane

#endif

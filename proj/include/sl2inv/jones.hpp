#pragma once

#include <map>
#include <mutex>
#include <span>
#include <vector>

#include "sl2inv/laurent_poly.hpp"
#include "sl2inv/links.hpp"
#include "sl2inv/repr_ring.hpp"

namespace sl2inv {

// Largest tensor space a single state sum may use.
inline constexpr std::size_t kMaxStateSpace = 4096;

// Formal color of one component: sum_k c_k [V_{k+1}].
using ColorVector = ReprRingElt;

// Quantum-trace closure of the braid with component i colored V_{colors[i]+1},
// corrected from the blackboard framing to the link's target framings.  The
// 0-framed unknot colored V_{n+1} evaluates to [n+1].
LaurentPoly colored_jones(const Link& link, std::span<const int> colors);

// Multilinear extension over formal combinations of colors.
LaurentPoly colored_jones_multilinear(const Link& link, std::span<const ColorVector> colors);

// Scalar by which a positive kink (one positive self-crossing) multiplies the
// invariant of a component colored V_{n+1}: twist_scalar(n)^{-1}.
LaurentPoly kink_scalar(int n);

// Raw trace tr(K^{⊗s} · B) for the blackboard framing, with per-position
// colors.  Exposed for the Markov-move tests.
LaurentPoly braid_closure_trace(const BraidWord& braid, std::span<const int> position_colors);

// Memoizing evaluator for one link; thread-safe.
class JonesEvaluator {
public:
    explicit JonesEvaluator(Link link) : link_(std::move(link)) {}

    const Link& link() const noexcept { return link_; }
    LaurentPoly evaluate(const std::vector<int>& colors);
    LaurentPoly evaluate_multilinear(std::span<const ColorVector> colors);

private:
    Link link_;
    std::mutex mutex_;
    std::map<std::vector<int>, LaurentPoly> cache_;
};

}  // namespace sl2inv

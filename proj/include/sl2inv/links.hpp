#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sl2inv {

// Braid on `strands` strands.  Letter +i is the positive crossing of the
// strands in positions i and i+1 (1-based), -i the negative one.
struct BraidWord {
    int strands = 1;
    std::vector<int> word;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Throws RangeError unless strands ≥ 0 and every 1 ≤ |g| ≤ strands - 1.
// Zero strands is the empty link.
void validate(const BraidWord& b);

// Parses "strands:s g_1 g_2 ...".
BraidWord parse_braid(std::string_view text);

// Inverse of parse_braid.
std::string format_braid(const BraidWord& b);

// Word with every letter negated (the mirror image of the closure).
BraidWord mirror(const BraidWord& b);

// Positions of the trace closure grouped into components.  A strand leaving
// the bottom at position p exits the top at perm(p) and re-enters there.
// Components are ordered by their smallest bottom position; each cycle lists
// positions in traversal order starting from that smallest one.
std::vector<std::vector<int>> components(const BraidWord& b);

// Closure of a braid together with a target framing per component.
class Link {
public:
    Link() = default;
    // Framings default to 0 when omitted.
    explicit Link(BraidWord braid, std::vector<int> target_framings = {});

    const BraidWord& braid() const noexcept { return braid_; }
    const std::vector<std::vector<int>>& components() const noexcept { return components_; }
    const std::vector<int>& target_framings() const noexcept { return framings_; }
    std::size_t num_components() const noexcept { return components_.size(); }
    // Component index of the strand entering at bottom position p (0-based).
    int component_of_position(int p) const { return position_component_.at(static_cast<std::size_t>(p)); }

    Link with_framings(std::vector<int> framings) const { return Link(braid_, std::move(framings)); }

private:
    BraidWord braid_;
    std::vector<std::vector<int>> components_;
    std::vector<int> position_component_;
    std::vector<int> framings_;
};

// Symmetric l×l matrix: off-diagonal linking numbers, diagonal the writhe of
// each component's self-crossings (its blackboard framing).
struct LinkingMatrix {
    std::size_t size = 0;
    std::vector<int> entries;

    int operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
    int writhe(std::size_t i) const { return (*this)(i, i); }
};

// One crossing of the braid, identified by the components of its two strands.
struct CrossingInfo {
    int sign = 0;
    int left_component = 0;   // strand at position |g|-1 before the crossing
    int right_component = 0;  // strand at position |g|
};

std::vector<CrossingInfo> crossing_components(const Link& link);

LinkingMatrix linking_data(const Link& link);

// Link accepted for surgery: algebraically split with target framings ±1.
struct SurgeryLink {
    Link link;
    // Target framing minus writhe, per component.
    std::vector<int> framing_corrections;
};

SurgeryLink validate_surgery_input(const Link& link);

// Target framing minus writhe, per component; no restrictions on the link.
std::vector<int> framing_corrections(const Link& link);

}  // namespace sl2inv

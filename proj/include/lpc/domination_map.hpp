#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpc/code_model.hpp"
#include "lpc/gf2.hpp"

namespace lpc {

class DominationMapping;
using MappingPtr = std::shared_ptr<const DominationMapping>;

/// Injective map {0,1}^m -> words of weight <= w on n wires such that input bit i = 0
/// switches off every output wire of group i. Groups partition [n]; a mapping is either
/// a lookup table (leaf) or the slice-wise product of other mappings.
class DominationMapping {
public:
    static constexpr std::uint32_t kMaxLeafInputs = 14;
    static constexpr std::uint32_t kMaxLeafOutputs = 24;

    /// table[x] is the image of input mask x (bit i = input i) as an output mask (bit j =
    /// wire j). Checks shape only; verify_mapping checks the mapping properties.
    static MappingPtr leaf(std::vector<std::vector<std::uint32_t>> groups, std::uint32_t w,
                           std::vector<std::uint32_t> table);
    static MappingPtr product(std::vector<MappingPtr> factors);

    bool is_leaf() const noexcept { return factors_.empty(); }
    std::uint32_t inputs() const noexcept { return m_; }
    std::uint32_t outputs() const noexcept { return n_; }
    std::uint32_t max_weight() const noexcept { return w_; }

    const std::vector<std::vector<std::uint32_t>>& groups() const noexcept { return groups_; }
    const std::vector<std::uint32_t>& table() const noexcept { return table_; }
    const std::vector<MappingPtr>& factors() const noexcept { return factors_; }

    /// Input vertex whose group holds output wire `wire`.
    std::uint32_t group_of(std::uint32_t wire) const;

    Gf2Vector apply(const Gf2Vector& x) const;
    /// The preimage of y, or nullopt when y is not an image.
    std::optional<Gf2Vector> invert(const Gf2Vector& y) const;

    nlohmann::json to_json() const;
    /// Throws FormatError on schema violations.
    static MappingPtr from_json(const nlohmann::json& j);

private:
    DominationMapping() = default;

    std::uint32_t m_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t w_ = 0;
    std::vector<std::vector<std::uint32_t>> groups_;
    std::vector<std::uint32_t> wire_group_;
    std::vector<std::uint32_t> table_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> inverse_;  // sorted (image, input)
    std::vector<MappingPtr> factors_;
};

struct SynthesisResult {
    MappingPtr mapping;  ///< null when no mapping exists for these groups
    /// When infeasible: inputs (masks) whose admissible images number fewer than them.
    std::vector<std::uint32_t> hall_inputs;
    std::uint32_t hall_neighbourhood = 0;
};

/// Finds a mapping for the given groups by bipartite matching between inputs and admissible
/// images (support inside the switched-on groups, weight <= w). Inputs are taken in
/// increasing mask order and images in (weight, mask) order; each input first takes the
/// least free image and augmenting paths settle the rest.
SynthesisResult synthesize_mapping(const std::vector<std::vector<std::uint32_t>>& groups, std::uint32_t w);

/// Consecutive groups of sizes differing by at most one, larger groups first.
std::vector<std::vector<std::uint32_t>> balanced_groups(std::uint32_t m, std::uint32_t n);

/// Tries the balanced partition, then the other partitions of n into m parts (largest
/// part ascending). Throws ParameterError when none works.
MappingPtr synthesize_balanced(std::uint32_t m, std::uint32_t n, std::uint32_t w);

struct MappingReport {
    bool injective_ok = true;
    bool weight_ok = true;
    bool domination_ok = true;
    bool structure_ok = true;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> collision;  ///< two inputs of one leaf
    std::optional<std::uint32_t> bad_input;                            ///< weight or domination failure
    std::uint64_t leaves_checked = 0;
    std::uint64_t inputs_checked = 0;

    bool pass() const noexcept { return injective_ok && weight_ok && domination_ok && structure_ok; }
    nlohmann::json to_json() const;
};

/// Exhaustive check of every leaf table; products are checked factor by factor plus the
/// parameter sums.
MappingReport verify_mapping(const DominationMapping& mapping);

/// LPC code whose codeset i is the image of cooling codeset i. Encoding maps the hot
/// wires to their groups, cooling-encodes around those inputs and applies the mapping.
class DominatedLpcCode final : public CodeGenerator {
public:
    /// Needs a cooling code on mapping.inputs() wires.
    static std::shared_ptr<const DominatedLpcCode> build(LpcCode cooling, MappingPtr mapping,
                                                         nlohmann::json descriptor = nullptr);

    const LpcCode& cooling() const noexcept { return cooling_; }
    const DominationMapping& mapping() const noexcept { return *mapping_; }
    /// Input vertices adjacent to the given output wires; never larger than the input.
    HotSet input_hot_set(const HotSet& hot) const;

    CodeParams params() const override;
    std::uint64_t size() const override { return cooling_.size(); }
    Codeset codeset(std::uint64_t index) const override;
    Codeword encode(std::uint64_t index, const HotSet& hot) const override;
    std::uint64_t decode(const Codeword& word) const override;
    nlohmann::json descriptor() const override { return descriptor_; }

private:
    DominatedLpcCode(LpcCode cooling, MappingPtr mapping) : cooling_(std::move(cooling)), mapping_(std::move(mapping)) {}

    LpcCode cooling_;
    MappingPtr mapping_;
    nlohmann::json descriptor_;
};

Gf2Vector word_to_bits(const Codeword& word);
Codeword bits_to_word(const Gf2Vector& bits);

}  // namespace lpc

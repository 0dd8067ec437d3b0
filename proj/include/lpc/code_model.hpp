#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpc/finite_field.hpp"

namespace lpc {

using Wire = std::uint32_t;

/// Binary word on n wires, stored as its sorted support.
class Codeword {
public:
    Codeword() = default;
    /// Sorts the support; throws ParameterError on repeated or out-of-range wires.
    Codeword(std::uint32_t n, std::vector<Wire> support);

    std::uint32_t length() const noexcept { return n_; }
    std::uint32_t weight() const noexcept { return static_cast<std::uint32_t>(support_.size()); }
    const std::vector<Wire>& support() const noexcept { return support_; }
    bool contains(Wire wire) const noexcept;

    friend bool operator==(const Codeword&, const Codeword&) = default;
    friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
    std::uint32_t n_ = 0;
    std::vector<Wire> support_;
};

/// Wires on which no transition may happen in the current transmission.
class HotSet {
public:
    HotSet() = default;
    explicit HotSet(std::vector<Wire> wires);

    std::size_t size() const noexcept { return wires_.size(); }
    bool empty() const noexcept { return wires_.empty(); }
    const std::vector<Wire>& wires() const noexcept { return wires_; }
    bool contains(Wire wire) const noexcept;
    /// Throws ParameterError if |S| > t or a wire is >= n.
    void check(std::uint32_t n, std::uint32_t t) const;

private:
    std::vector<Wire> wires_;
};

/// supp(word) and hot are disjoint.
bool avoids(const Codeword& word, const HotSet& hot);
std::uint32_t hamming_distance(const Codeword& a, const Codeword& b);

using Codeset = std::vector<Codeword>;

/// Every weight-w word on n wires, supports in lexicographic order.
Codeset all_words_of_weight(std::uint32_t n, std::uint32_t w);

/// Binary code families handled by the library. `cooling` codes carry no weight
/// restriction (their w equals n).
enum class CodeKind { lpc, cpc, cpecc, cooling };

std::string to_string(CodeKind kind);
CodeKind parse_code_kind(const std::string& s);

struct CodeParams {
    std::uint32_t n = 0;
    std::uint32_t t = 0;
    std::uint32_t w = 0;
    CodeKind kind = CodeKind::lpc;
    std::uint32_t e = 0;

    /// Throws ParameterError when t + w > n (non-cooling) or e is set on a non-CPECC code.
    void check() const;
    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Lazily materialized code: codesets, encoder and decoder computed on demand from a
/// construction descriptor.
class CodeGenerator {
public:
    virtual ~CodeGenerator() = default;
    virtual CodeParams params() const = 0;
    virtual std::uint64_t size() const = 0;
    virtual Codeset codeset(std::uint64_t index) const = 0;
    /// Member of codeset `index` avoiding `hot`.
    virtual Codeword encode(std::uint64_t index, const HotSet& hot) const = 0;
    /// Codeset index of `word`; throws DecodeError when no codeset can be recovered.
    virtual std::uint64_t decode(const Codeword& word) const = 0;
    /// {"construction": name, "params": {...}}
    virtual nlohmann::json descriptor() const = 0;
    /// Non-fatal remarks about the parameters (printed by the CLI).
    virtual std::vector<std::string> warnings() const { return {}; }
};

/// An (n,t,w) LPC/CPC/CPECC or (n,t) cooling code: either an explicit list of codesets
/// or a generator handle. Immutable; copies share state.
class LpcCode {
public:
    /// Validates lengths, weights, nonempty codesets and t + w <= n; disjointness is left
    /// to the verifier.
    static LpcCode from_codesets(CodeParams params, std::vector<Codeset> codesets);
    static LpcCode from_generator(std::shared_ptr<const CodeGenerator> generator);

    const CodeParams& params() const noexcept { return params_; }
    std::uint64_t size() const;
    bool is_explicit() const noexcept { return generator_ == nullptr; }
    const std::vector<Codeset>& codesets() const;
    const std::shared_ptr<const CodeGenerator>& generator() const noexcept { return generator_; }

    Codeset codeset(std::uint64_t index) const;
    /// Throws ParameterError when the hot set is too large or the codeset has no
    /// avoiding member (the code is not a valid cooling code for this S).
    Codeword encode(std::uint64_t index, const HotSet& hot) const;
    std::uint64_t decode(const Codeword& word) const;
    std::vector<std::string> warnings() const;

    /// True when every codeword has the same weight within each codeset.
    bool uniform_weight_codesets() const;
    /// Every codeset materialized; throws BudgetExceeded above `max_words` codewords.
    std::vector<Codeset> materialize(std::uint64_t max_words) const;

private:
    CodeParams params_;
    std::shared_ptr<const std::vector<Codeset>> codesets_;
    std::shared_ptr<const std::map<std::vector<Wire>, std::uint64_t>> index_;
    std::shared_ptr<const CodeGenerator> generator_;
};

/// Point (x, column) of F_q x [columns]; wire = column * q + ord(x).
struct GridPoint {
    Elem x = 0;
    std::uint32_t column = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

inline Wire grid_wire(std::uint32_t q, GridPoint p) { return p.column * q + p.x; }
inline GridPoint grid_point(std::uint32_t q, Wire wire) { return {wire % q, wire / q}; }

/// Lit wires of a word grouped per grid column.
std::vector<std::vector<Elem>> grid_columns(std::uint32_t q, std::uint32_t columns, const Codeword& word);

}  // namespace lpc

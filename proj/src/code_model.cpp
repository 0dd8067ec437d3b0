#include "lpc/code_model.hpp"

#include <algorithm>

#include "lpc/errors.hpp"

namespace lpc {

Codeword::Codeword(std::uint32_t n, std::vector<Wire> support) : n_(n), support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
        throw ParameterError("codeword support repeats a wire");
    if (!support_.empty() && support_.back() >= n_)
        throw ParameterError("codeword wire " + std::to_string(support_.back()) + " outside [0, " +
                             std::to_string(n_) + ")");
}

bool Codeword::contains(Wire wire) const noexcept {
    return std::binary_search(support_.begin(), support_.end(), wire);
}

HotSet::HotSet(std::vector<Wire> wires) : wires_(std::move(wires)) {
    std::sort(wires_.begin(), wires_.end());
    wires_.erase(std::unique(wires_.begin(), wires_.end()), wires_.end());
}

bool HotSet::contains(Wire wire) const noexcept { return std::binary_search(wires_.begin(), wires_.end(), wire); }

void HotSet::check(std::uint32_t n, std::uint32_t t) const {
    if (wires_.size() > t)
        throw ParameterError("hot set has " + std::to_string(wires_.size()) + " wires, more than t = " +
                             std::to_string(t));
    if (!wires_.empty() && wires_.back() >= n)
        throw ParameterError("hot wire " + std::to_string(wires_.back()) + " outside [0, " + std::to_string(n) + ")");
}

bool avoids(const Codeword& word, const HotSet& hot) {
    const auto& a = word.support();
    const auto& b = hot.wires();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

std::uint32_t hamming_distance(const Codeword& a, const Codeword& b) {
    std::vector<Wire> common;
    std::set_intersection(a.support().begin(), a.support().end(), b.support().begin(), b.support().end(),
                          std::back_inserter(common));
    return a.weight() + b.weight() - 2 * static_cast<std::uint32_t>(common.size());
}

std::string to_string(CodeKind kind) {
    switch (kind) {
        case CodeKind::lpc: return "lpc";
        case CodeKind::cpc: return "cpc";
        case CodeKind::cpecc: return "cpecc";
        case CodeKind::cooling: return "cooling";
    }
    return "lpc";
}

CodeKind parse_code_kind(const std::string& s) {
    if (s == "lpc") return CodeKind::lpc;
    if (s == "cpc") return CodeKind::cpc;
    if (s == "cpecc") return CodeKind::cpecc;
    if (s == "cooling") return CodeKind::cooling;
    throw FormatError("unknown code kind '" + s + "'");
}

void CodeParams::check() const {
    if (n == 0) throw ParameterError("code length n must be positive");
    if (kind == CodeKind::cooling) {
        if (t >= n) throw ParameterError("cooling code needs t < n");
        return;
    }
    if (t + w > n)
        throw ParameterError("t + w <= n violated: t = " + std::to_string(t) + ", w = " + std::to_string(w) +
                             ", n = " + std::to_string(n));
    if (kind == CodeKind::cpecc && e == 0) throw ParameterError("a CPECC code needs e >= 1");
    if (kind != CodeKind::cpecc && e != 0) throw ParameterError("only CPECC codes carry e");
}

LpcCode LpcCode::from_codesets(CodeParams params, std::vector<Codeset> codesets) {
    params.check();
    auto index = std::make_shared<std::map<std::vector<Wire>, std::uint64_t>>();
    for (std::size_t i = 0; i < codesets.size(); ++i) {
        if (codesets[i].empty()) throw ParameterError("codeset " + std::to_string(i) + " is empty");
        for (const auto& word : codesets[i]) {
            if (word.length() != params.n)
                throw ParameterError("codeset " + std::to_string(i) + " holds a word of length " +
                                     std::to_string(word.length()) + ", expected n = " + std::to_string(params.n));
            if (params.kind == CodeKind::cpc || params.kind == CodeKind::cpecc) {
                if (word.weight() != params.w)
                    throw ParameterError("constant-power code has a codeword of weight " +
                                         std::to_string(word.weight()) + " != w = " + std::to_string(params.w));
            } else if (params.kind == CodeKind::lpc && word.weight() > params.w) {
                throw ParameterError("LPC codeword weight " + std::to_string(word.weight()) + " exceeds w = " +
                                     std::to_string(params.w));
            }
            index->emplace(word.support(), i);
        }
    }
    if (codesets.empty()) throw ParameterError("a code needs at least one codeset");
    LpcCode code;
    code.params_ = params;
    code.codesets_ = std::make_shared<const std::vector<Codeset>>(std::move(codesets));
    code.index_ = std::move(index);
    return code;
}

LpcCode LpcCode::from_generator(std::shared_ptr<const CodeGenerator> generator) {
    if (!generator) throw ParameterError("null code generator");
    LpcCode code;
    code.params_ = generator->params();
    code.params_.check();
    code.generator_ = std::move(generator);
    return code;
}

std::uint64_t LpcCode::size() const { return generator_ ? generator_->size() : codesets_->size(); }

const std::vector<Codeset>& LpcCode::codesets() const {
    if (!codesets_) throw ParameterError("generator-backed code has no explicit codeset list");
    return *codesets_;
}

Codeset LpcCode::codeset(std::uint64_t index) const {
    if (index >= size()) throw ParameterError("codeset index " + std::to_string(index) + " out of range");
    if (generator_) return generator_->codeset(index);
    return (*codesets_)[index];
}

Codeword LpcCode::encode(std::uint64_t index, const HotSet& hot) const {
    if (index >= size()) throw ParameterError("codeset index " + std::to_string(index) + " out of range");
    hot.check(params_.n, params_.t);
    if (generator_) return generator_->encode(index, hot);
    for (const auto& word : (*codesets_)[index])
        if (avoids(word, hot)) return word;
    throw ParameterError("codeset " + std::to_string(index) + " has no codeword avoiding the hot set");
}

std::uint64_t LpcCode::decode(const Codeword& word) const {
    if (word.length() != params_.n) throw MalformedCodeword("word length differs from n");
    if (generator_) return generator_->decode(word);
    auto it = index_->find(word.support());
    if (it == index_->end()) throw MalformedCodeword("word is not a codeword of this code");
    return it->second;
}

std::vector<std::string> LpcCode::warnings() const { return generator_ ? generator_->warnings() : std::vector<std::string>{}; }

bool LpcCode::uniform_weight_codesets() const {
    for (const auto& cs : codesets())
        for (const auto& word : cs)
            if (word.weight() != cs.front().weight()) return false;
    return true;
}

std::vector<Codeset> LpcCode::materialize(std::uint64_t max_words) const {
    if (!generator_) return *codesets_;
    std::vector<Codeset> all;
    std::uint64_t words = 0;
    const std::uint64_t m = size();
    for (std::uint64_t i = 0; i < m; ++i) {
        all.push_back(generator_->codeset(i));
        words += all.back().size();
        if (words > max_words)
            throw BudgetExceeded("materializing the code needs more than " + std::to_string(max_words) + " codewords");
    }
    return all;
}

Codeset all_words_of_weight(std::uint32_t n, std::uint32_t w) {
    Codeset out;
    if (w > n) return out;
    std::vector<Wire> idx(w);
    for (std::uint32_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        out.emplace_back(n, idx);
        std::uint32_t i = w;
        while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
        if (i == 0) return out;
        ++idx[i - 1];
        for (std::uint32_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::vector<Elem>> grid_columns(std::uint32_t q, std::uint32_t columns, const Codeword& word) {
    std::vector<std::vector<Elem>> out(columns);
    for (Wire wire : word.support()) {
        const GridPoint p = grid_point(q, wire);
        if (p.column >= columns) throw MalformedCodeword("wire outside the grid");
        out[p.column].push_back(p.x);
    }
    return out;
}

}  // namespace lpc

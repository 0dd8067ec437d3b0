#include "lpc/domination_map.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "lpc/code_io.hpp"
#include "lpc/errors.hpp"

namespace lpc {

namespace {

std::uint32_t to_mask(const Gf2Vector& bits, std::size_t offset, std::size_t len) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < len; ++i)
        if (bits[offset + i]) mask |= std::uint32_t{1} << i;
    return mask;
}

void put_mask(Gf2Vector& bits, std::size_t offset, std::size_t len, std::uint32_t mask) {
    for (std::size_t i = 0; i < len; ++i) bits[offset + i] = (mask >> i) & 1u;
}

// Output wire -> group index; throws unless the groups partition [0, n).
std::vector<std::uint32_t> partition_lookup(const std::vector<std::vector<std::uint32_t>>& groups) {
    std::uint32_t n = 0;
    for (const auto& g : groups) {
        if (g.empty()) throw ParameterError("domination groups must be nonempty");
        n += static_cast<std::uint32_t>(g.size());
    }
    std::vector<std::uint32_t> owner(n, UINT32_MAX);
    for (std::uint32_t i = 0; i < groups.size(); ++i)
        for (std::uint32_t wire : groups[i]) {
            if (wire >= n || owner[wire] != UINT32_MAX)
                throw ParameterError("domination groups must partition the output wires 0..n-1");
            owner[wire] = i;
        }
    return owner;
}

std::vector<std::uint32_t> union_masks(const std::vector<std::vector<std::uint32_t>>& groups) {
    const std::uint32_t m = static_cast<std::uint32_t>(groups.size());
    std::vector<std::uint32_t> group_mask(m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t wire : groups[i]) group_mask[i] |= std::uint32_t{1} << wire;
    std::vector<std::uint32_t> allowed(std::size_t{1} << m, 0);
    for (std::uint32_t x = 1; x < allowed.size(); ++x) {
        const std::uint32_t low = static_cast<std::uint32_t>(std::countr_zero(x));
        allowed[x] = allowed[x & (x - 1)] | group_mask[low];
    }
    return allowed;
}

}  // namespace

MappingPtr DominationMapping::leaf(std::vector<std::vector<std::uint32_t>> groups, std::uint32_t w,
                                   std::vector<std::uint32_t> table) {
    const std::uint32_t m = static_cast<std::uint32_t>(groups.size());
    if (m == 0 || m > kMaxLeafInputs) throw ParameterError("leaf mapping needs 1 <= m <= 14");
    std::shared_ptr<DominationMapping> map(new DominationMapping());
    map->wire_group_ = partition_lookup(groups);
    map->m_ = m;
    map->n_ = static_cast<std::uint32_t>(map->wire_group_.size());
    if (map->n_ > kMaxLeafOutputs) throw ParameterError("leaf mapping needs n <= 24");
    if (table.size() != (std::size_t{1} << m)) throw ParameterError("leaf table must have 2^m entries");
    for (std::uint32_t y : table)
        if (y >> map->n_) throw ParameterError("leaf table image has a wire outside [0, n)");
    map->w_ = w;
    map->groups_ = std::move(groups);
    for (std::uint32_t x = 0; x < table.size(); ++x) map->inverse_.emplace_back(table[x], x);
    std::sort(map->inverse_.begin(), map->inverse_.end());
    map->table_ = std::move(table);
    return map;
}

MappingPtr DominationMapping::product(std::vector<MappingPtr> factors) {
    if (factors.empty()) throw ParameterError("a product mapping needs at least one factor");
    std::shared_ptr<DominationMapping> map(new DominationMapping());
    for (const auto& f : factors) {
        if (!f) throw ParameterError("null mapping factor");
        map->m_ += f->m_;
        map->n_ += f->n_;
        map->w_ += f->w_;
    }
    map->factors_ = std::move(factors);
    return map;
}

std::uint32_t DominationMapping::group_of(std::uint32_t wire) const {
    if (wire >= n_) throw ParameterError("output wire out of range");
    if (is_leaf()) return wire_group_[wire];
    std::uint32_t m_off = 0;
    for (const auto& f : factors_) {
        if (wire < f->n_) return m_off + f->group_of(wire);
        wire -= f->n_;
        m_off += f->m_;
    }
    return m_off;  // unreachable
}

Gf2Vector DominationMapping::apply(const Gf2Vector& x) const {
    if (x.size() != m_) throw ParameterError("mapping input length mismatch");
    Gf2Vector y(n_);
    if (is_leaf()) {
        put_mask(y, 0, n_, table_[to_mask(x, 0, m_)]);
        return y;
    }
    std::size_t in = 0;
    std::size_t out = 0;
    for (const auto& f : factors_) {
        Gf2Vector slice(f->m_);
        for (std::size_t i = 0; i < f->m_; ++i) slice[i] = x[in + i];
        const Gf2Vector img = f->apply(slice);
        for (std::size_t j = 0; j < f->n_; ++j) y[out + j] = img[j];
        in += f->m_;
        out += f->n_;
    }
    return y;
}

std::optional<Gf2Vector> DominationMapping::invert(const Gf2Vector& y) const {
    if (y.size() != n_) throw ParameterError("mapping output length mismatch");
    Gf2Vector x(m_);
    if (is_leaf()) {
        const std::uint32_t mask = to_mask(y, 0, n_);
        const auto it = std::lower_bound(inverse_.begin(), inverse_.end(), std::make_pair(mask, std::uint32_t{0}));
        if (it == inverse_.end() || it->first != mask) return std::nullopt;
        put_mask(x, 0, m_, it->second);
        return x;
    }
    std::size_t in = 0;
    std::size_t out = 0;
    for (const auto& f : factors_) {
        Gf2Vector slice(f->n_);
        for (std::size_t j = 0; j < f->n_; ++j) slice[j] = y[out + j];
        const auto pre = f->invert(slice);
        if (!pre) return std::nullopt;
        for (std::size_t i = 0; i < f->m_; ++i) x[in + i] = (*pre)[i];
        in += f->m_;
        out += f->n_;
    }
    return x;
}

nlohmann::json DominationMapping::to_json() const {
    if (is_leaf()) return {{"kind", "leaf"}, {"groups", groups_}, {"w", w_}, {"table", table_}};
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : factors_) fs.push_back(f->to_json());
    return {{"kind", "product"}, {"factors", fs}};
}

MappingPtr DominationMapping::from_json(const nlohmann::json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "leaf")
            return leaf(j.at("groups").get<std::vector<std::vector<std::uint32_t>>>(), j.at("w").get<std::uint32_t>(),
                        j.at("table").get<std::vector<std::uint32_t>>());
        if (kind == "product") {
            std::vector<MappingPtr> fs;
            for (const auto& f : j.at("factors")) fs.push_back(from_json(f));
            return product(std::move(fs));
        }
        throw FormatError("mapping kind must be 'leaf' or 'product'");
    } catch (const nlohmann::json::exception& err) {
        throw FormatError(std::string("mapping file: ") + err.what());
    } catch (const ParameterError& err) {
        throw FormatError(std::string("mapping file: ") + err.what());
    }
}

SynthesisResult synthesize_mapping(const std::vector<std::vector<std::uint32_t>>& groups, std::uint32_t w) {
    const std::uint32_t m = static_cast<std::uint32_t>(groups.size());
    if (m == 0 || m > DominationMapping::kMaxLeafInputs) throw ParameterError("synthesis needs 1 <= m <= 14");
    const std::uint32_t n = static_cast<std::uint32_t>(partition_lookup(groups).size());
    if (n > DominationMapping::kMaxLeafOutputs) throw ParameterError("synthesis needs n <= 24");

    std::vector<std::uint32_t> images;
    for (std::uint32_t y = 0; y < (std::uint32_t{1} << n); ++y)
        if (static_cast<std::uint32_t>(std::popcount(y)) <= w) images.push_back(y);
    std::stable_sort(images.begin(), images.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

    const std::vector<std::uint32_t> allowed = union_masks(groups);
    const std::uint32_t inputs = std::uint32_t{1} << m;
    std::vector<std::vector<std::uint32_t>> adj(inputs);
    for (std::uint32_t x = 0; x < inputs; ++x)
        for (std::uint32_t k = 0; k < images.size(); ++k)
            if ((images[k] & ~allowed[x]) == 0) adj[x].push_back(k);

    std::vector<std::int64_t> match_left(inputs, -1);
    std::vector<std::int64_t> match_right(images.size(), -1);
    for (std::uint32_t x = 0; x < inputs; ++x)
        for (std::uint32_t k : adj[x])
            if (match_right[k] < 0) {
                match_left[x] = k;
                match_right[k] = x;
                break;
            }

    std::vector<char> seen_right(images.size());
    std::vector<char> seen_left(inputs);
    std::function<bool(std::uint32_t)> augment = [&](std::uint32_t x) -> bool {
        seen_left[x] = 1;
        for (std::uint32_t k : adj[x]) {
            if (seen_right[k]) continue;
            seen_right[k] = 1;
            if (match_right[k] < 0 || augment(static_cast<std::uint32_t>(match_right[k]))) {
                match_left[x] = k;
                match_right[k] = x;
                return true;
            }
        }
        return false;
    };

    SynthesisResult result;
    for (std::uint32_t x = 0; x < inputs; ++x) {
        if (match_left[x] >= 0) continue;
        std::fill(seen_right.begin(), seen_right.end(), 0);
        std::fill(seen_left.begin(), seen_left.end(), 0);
        if (augment(x)) continue;
        // Everything reachable from x by alternating paths: its images are all matched
        // inside the set, one short of the set's size.
        for (std::uint32_t u = 0; u < inputs; ++u)
            if (seen_left[u]) result.hall_inputs.push_back(u);
        result.hall_neighbourhood = static_cast<std::uint32_t>(std::count(seen_right.begin(), seen_right.end(), 1));
        return result;
    }
    std::vector<std::uint32_t> table(inputs);
    for (std::uint32_t x = 0; x < inputs; ++x) table[x] = images[static_cast<std::size_t>(match_left[x])];
    result.mapping = DominationMapping::leaf(groups, w, std::move(table));
    return result;
}

std::vector<std::vector<std::uint32_t>> balanced_groups(std::uint32_t m, std::uint32_t n) {
    if (m == 0 || m > n) throw ParameterError("balanced groups need 1 <= m <= n");
    std::vector<std::vector<std::uint32_t>> groups(m);
    std::uint32_t wire = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        const std::uint32_t size = n / m + (i < n % m ? 1 : 0);
        for (std::uint32_t k = 0; k < size; ++k) groups[i].push_back(wire++);
    }
    return groups;
}

namespace {

void partitions_into(std::uint32_t n, std::uint32_t parts, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                     std::vector<std::vector<std::uint32_t>>& out) {
    if (parts == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    for (std::uint32_t p = std::min(max_part, n - (parts - 1)); p >= 1; --p) {
        if (p * parts < n) break;
        cur.push_back(p);
        partitions_into(n - p, parts - 1, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::uint32_t>> groups_from_sizes(const std::vector<std::uint32_t>& sizes) {
    std::vector<std::vector<std::uint32_t>> groups(sizes.size());
    std::uint32_t wire = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::uint32_t k = 0; k < sizes[i]; ++k) groups[i].push_back(wire++);
    return groups;
}

}  // namespace

MappingPtr synthesize_balanced(std::uint32_t m, std::uint32_t n, std::uint32_t w) {
    const auto balanced = balanced_groups(m, n);
    SynthesisResult first = synthesize_mapping(balanced, w);
    if (first.mapping) return first.mapping;

    std::vector<std::vector<std::uint32_t>> all;
    std::vector<std::uint32_t> cur;
    partitions_into(n, m, n, cur, all);
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& sizes : all) {
        const auto groups = groups_from_sizes(sizes);
        if (groups == balanced) continue;
        SynthesisResult r = synthesize_mapping(groups, w);
        if (r.mapping) return r.mapping;
    }
    throw ParameterError("no (" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(w) +
                         ")-domination mapping over any partition; balanced partition fails Hall's condition on " +
                         std::to_string(first.hall_inputs.size()) + " inputs with " +
                         std::to_string(first.hall_neighbourhood) + " admissible images");
}

nlohmann::json MappingReport::to_json() const {
    nlohmann::json j{{"pass", pass()},
                     {"injective", injective_ok},
                     {"weight_bound", weight_ok},
                     {"domination", domination_ok},
                     {"structure", structure_ok},
                     {"leaves_checked", leaves_checked},
                     {"inputs_checked", inputs_checked}};
    if (collision) j["collision"] = {collision->first, collision->second};
    if (bad_input) j["bad_input"] = *bad_input;
    return j;
}

MappingReport verify_mapping(const DominationMapping& mapping) {
    MappingReport rep;
    if (!mapping.is_leaf()) {
        std::uint32_t m = 0, n = 0, w = 0;
        for (const auto& f : mapping.factors()) {
            const MappingReport sub = verify_mapping(*f);
            rep.injective_ok &= sub.injective_ok;
            rep.weight_ok &= sub.weight_ok;
            rep.domination_ok &= sub.domination_ok;
            rep.structure_ok &= sub.structure_ok;
            if (!rep.collision) rep.collision = sub.collision;
            if (!rep.bad_input) rep.bad_input = sub.bad_input;
            rep.leaves_checked += sub.leaves_checked;
            rep.inputs_checked += sub.inputs_checked;
            m += f->inputs();
            n += f->outputs();
            w += f->max_weight();
        }
        rep.structure_ok &= m == mapping.inputs() && n == mapping.outputs() && w == mapping.max_weight();
        return rep;
    }
    const std::vector<std::uint32_t> allowed = union_masks(mapping.groups());
    const auto& table = mapping.table();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
    seen.reserve(table.size());
    for (std::uint32_t x = 0; x < table.size(); ++x) {
        const std::uint32_t y = table[x];
        if (static_cast<std::uint32_t>(std::popcount(y)) > mapping.max_weight()) {
            rep.weight_ok = false;
            if (!rep.bad_input) rep.bad_input = x;
        }
        if ((y & ~allowed[x]) != 0) {
            rep.domination_ok = false;
            if (!rep.bad_input) rep.bad_input = x;
        }
        seen.emplace_back(y, x);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first) {
            rep.injective_ok = false;
            rep.collision = std::make_pair(seen[i - 1].second, seen[i].second);
            break;
        }
    rep.leaves_checked = 1;
    rep.inputs_checked = table.size();
    return rep;
}

Gf2Vector word_to_bits(const Codeword& word) {
    Gf2Vector bits(word.length());
    for (Wire wire : word.support()) bits.set(wire);
    return bits;
}

Codeword bits_to_word(const Gf2Vector& bits) {
    std::vector<Wire> support;
    for (auto i = bits.find_first(); i != Gf2Vector::npos; i = bits.find_next(i)) support.push_back(static_cast<Wire>(i));
    return Codeword(static_cast<std::uint32_t>(bits.size()), std::move(support));
}

std::shared_ptr<const DominatedLpcCode> DominatedLpcCode::build(LpcCode cooling, MappingPtr mapping,
                                                                nlohmann::json descriptor) {
    if (!mapping) throw ParameterError("null domination mapping");
    if (cooling.params().kind != CodeKind::cooling) throw ParameterError("the transform needs a cooling code");
    if (cooling.params().n != mapping->inputs())
        throw ParameterError("cooling code length " + std::to_string(cooling.params().n) +
                             " differs from the mapping input length " + std::to_string(mapping->inputs()));
    std::shared_ptr<DominatedLpcCode> code(new DominatedLpcCode(cooling, mapping));
    code->params().check();
    if (descriptor.is_null())
        descriptor = {{"construction", "domination_lpc"},
                      {"params", {{"cooling", code_to_json(cooling)}, {"mapping", mapping->to_json()}}}};
    code->descriptor_ = std::move(descriptor);
    return code;
}

CodeParams DominatedLpcCode::params() const {
    return CodeParams{mapping_->outputs(), cooling_.params().t, mapping_->max_weight(), CodeKind::lpc, 0};
}

HotSet DominatedLpcCode::input_hot_set(const HotSet& hot) const {
    std::vector<Wire> inputs;
    for (Wire wire : hot.wires()) inputs.push_back(mapping_->group_of(wire));
    return HotSet(std::move(inputs));
}

Codeset DominatedLpcCode::codeset(std::uint64_t index) const {
    Codeset out;
    for (const auto& u : cooling_.codeset(index)) out.push_back(bits_to_word(mapping_->apply(word_to_bits(u))));
    return out;
}

Codeword DominatedLpcCode::encode(std::uint64_t index, const HotSet& hot) const {
    const CodeParams p = params();
    hot.check(p.n, p.t);
    const Codeword u = cooling_.encode(index, input_hot_set(hot));
    Codeword word = bits_to_word(mapping_->apply(word_to_bits(u)));
    if (!avoids(word, hot)) throw std::logic_error("domination mapping lit a wire of a switched-off group");
    return word;
}

std::uint64_t DominatedLpcCode::decode(const Codeword& word) const {
    if (word.length() != mapping_->outputs()) throw MalformedCodeword("word length does not match the code");
    const auto x = mapping_->invert(word_to_bits(word));
    if (!x) throw MalformedCodeword("word is not an image of the domination mapping");
    return cooling_.decode(bits_to_word(*x));
}

}  // namespace lpc

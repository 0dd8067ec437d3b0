#pragma once

#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace lpc {

using Gf2Vector = boost::dynamic_bitset<>;

/// Basis of {c : sum_i c_i * rows[i] = 0}, each basis vector of length rows.size().
std::vector<Gf2Vector> gf2_left_kernel(std::span<const Gf2Vector> rows);

/// A nonzero combination c with sum_i c_i * rows[i] = 0, or nullopt when the rows are
/// independent. Among several candidates the least one is returned, comparing c as a
/// binary number with c_0 as the least significant bit.
std::optional<Gf2Vector> gf2_kernel_vector(std::span<const Gf2Vector> rows);

/// Reduces `basis` to echelon form keyed on the highest set bit and returns the least
/// nonzero element of the span (as a binary number), or nullopt if the span is {0}.
std::optional<Gf2Vector> gf2_span_minimum(std::vector<Gf2Vector> basis);

}  // namespace lpc

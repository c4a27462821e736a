#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace umf {

/// The 16 typological dimensions, in the fixed canonical order used by every
/// 16-entry vector in the engine.
enum class DimensionId : std::uint8_t {
  word_order = 0,
  case_marking,
  morphology,
  agreement,
  tam,
  classifiers,
  honorifics,
  evidentiality,
  serial_verbs,
  definiteness,
  animacy,
  info_structure,
  negation,
  pro_drop,
  relative_clauses,
  copula,
};

inline constexpr std::size_t kDimensionCount = 16;

constexpr std::size_t index_of(DimensionId id) {
  return static_cast<std::size_t>(id);
}

constexpr std::array<DimensionId, kDimensionCount> all_dimensions() {
  std::array<DimensionId, kDimensionCount> out{};
  for (std::size_t i = 0; i < kDimensionCount; ++i) {
    out[i] = static_cast<DimensionId>(i);
  }
  return out;
}

std::string_view to_string(DimensionId id);
std::optional<DimensionId> dimension_from_string(std::string_view name);

/// Fixed-size container indexed by DimensionId.
template <typename T>
using DimensionArray = std::array<T, kDimensionCount>;

template <typename T>
const T& at(const DimensionArray<T>& a, DimensionId id) {
  return a[index_of(id)];
}

template <typename T>
T& at(DimensionArray<T>& a, DimensionId id) {
  return a[index_of(id)];
}

}  // namespace umf

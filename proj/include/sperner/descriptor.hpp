#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sperner/construction.hpp"
#include "sperner/qbf.hpp"

namespace sperner {

inline constexpr const char* kBrouwerSchema = "qbf2brouwer/v1";
inline constexpr const char* kSpernerSchema = "qbf2sperner/v1";

/// Complete identity of a constructed instance: formula plus layout parameters.
struct InstanceDescriptor {
  QbfFormula formula;
  LayoutParams params;
};

/// {"schema":"qbf2brouwer/v1","layout":"layout v1","formula":<QDIMACS>,
///  "params":{"LW":..,"LH":..,"M":..,"G":..}}
std::string descriptor_to_json(const InstanceDescriptor& d);
InstanceDescriptor descriptor_from_json(std::string_view text);

/// Any instance the tools accept: a descriptor, a reduced descriptor, or dense
/// grid text. For Sperner instances `brouwer` holds the base when one exists.
struct LoadedInstance {
  std::optional<InstanceDescriptor> descriptor;
  std::optional<BrouwerInstance> brouwer;
  std::optional<SpernerInstance> sperner;
  bool is_sperner() const { return sperner.has_value(); }
};

/// Dispatches on content: JSON (qbf2brouwer/v1 or qbf2sperner/v1) or the dense
/// text format. Throws ParseError on malformed or unknown input.
LoadedInstance load_instance(std::string_view text);

/// {"schema":"qbf2sperner/v1","base":<descriptor object or dense Brouwer text>}
std::string reduced_to_json(const InstanceDescriptor& base);
std::string reduced_to_json(std::string_view dense_brouwer_text);

}  // namespace sperner

#pragma once

// Instance (de)serialization: JSON files describing an algebra, a group,
// and one of a partial ring action, a global action, or a set partial
// action, plus optional guards.

#include <string>
#include <variant>

#include "json.hpp"

#include "psg/action.hpp"
#include "psg/setact.hpp"

namespace psg {

using json = nlohmann::json;

// A malformed file: bad JSON syntax (line-anchored) or a missing /
// ill-typed field (anchored by field path).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A well-formed file referencing an out-of-range index or residue.
struct RangeError : std::runtime_error {
  std::string field;
  RangeError(const std::string& field_, const std::string& what)
      : std::runtime_error(field_ + ": " + what), field(field_) {}
};

using ParsedInstance = std::variant<PartialRingAction, GlobalAction, SetPartialAction>;

struct InstanceFile {
  ParsedInstance instance;
  Guards guards;
};

// Parses an instance description. Throws ParseError / RangeError.
InstanceFile parse_instance_text(const std::string& text);
InstanceFile parse_instance(const std::string& path);

// Inverse of parsing, up to basis order: emits the same schema.
json serialize_instance(const InstanceFile& file);

// Semantic equality of two parsed instances (same group table, same
// structure constants, same domains and maps).
bool instances_equal(const ParsedInstance& a, const ParsedInstance& b);

}  // namespace psg

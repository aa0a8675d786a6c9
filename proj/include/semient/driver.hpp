#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semient/format.hpp"

namespace semient {

/// "name@first,second,key=value": positional arguments are object names in the
/// file, keyed arguments are scalars or flags.
struct Expression {
  std::string name;
  std::vector<std::string> positional;
  std::map<std::string, std::string> keyed;
};

/// Throws InputError on malformed text.
Expression parse_expression(const std::string &text);
bool is_expression(const std::string &text);

/// Built-in construction names accepted by resolve_object and construct.
std::vector<std::string> construction_names();

/// Object named `ref` in `file`, or the result of a built-in construction.
/// Construction preconditions throw PreconditionError.
Object resolve_object(const StructureFile &file, const std::string &ref);

/// The constructed object under `name`, plus derived objects under "name/role".
std::vector<std::pair<std::string, Object>> construct(const StructureFile &file, const std::string &expr,
                                                      const std::string &name);

/// Check names applicable to an object, in a fixed order.
std::vector<std::string> check_names(const Object &o);
/// Runs one check. Unknown names throw InputError. A failed construction
/// precondition inside the check is reported as a failing "precondition" entry.
Report run_check(const Object &o, const std::string &check);

} // namespace semient

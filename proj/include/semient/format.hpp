#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "semient/tambara.hpp"

namespace semient {

/// Malformed files, unknown names, bad arguments. Maps to exit status 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// Named maps of a Yang-Baxter system; family is "semi", "wxz" or "type2".
struct SystemObject {
  std::string family;
  std::map<std::string, LinearMap> maps;
  const LinearMap &at(const std::string &role) const;
};

struct MeasuredObject {
  MeasuredModule module;
  std::optional<EntwiningData> entwining;
};

struct DerivationObject {
  Algebra algebra;
  LinearMap delta;
};

struct IntegralObject {
  Bialgebra bialgebra;
  Vector element;
};

struct BraidedObject {
  Algebra algebra;
  LinearMap psi;
};

/// Tambara (over an algebra) or co-Tambara (over a coalgebra) generator action.
struct GeneratorObject {
  bool co = false;
  GeneratorAction action;
};

using Object = std::variant<Space, Algebra, Coalgebra, Bialgebra, LinearMap, ModuleAction, ComoduleCoaction,
                            EntwiningData, SystemObject, MeasuredObject, DerivationObject, IntegralObject,
                            BraidedObject, GeneratorObject>;

/// The "type" field written for an object.
std::string type_name(const Object &o);

/// Named objects over one field, stored as JSON and built on demand.
///
/// A reference to another object is either its name or an inline object.
/// Canonical text is the JSON dump with sorted keys, two-space indent and a
/// trailing newline; parse then dump is the identity on canonical text.
class StructureFile {
public:
  static constexpr int format_version = 1;

  explicit StructureFile(Field field = Field::rationals()) : field_(field) {}

  /// `field` overrides the file's own field spec.
  static StructureFile parse(const std::string &text, const std::optional<Field> &field = std::nullopt);
  static StructureFile load(const std::filesystem::path &path, const std::optional<Field> &field = std::nullopt);
  /// Every *.json in `dir`, merged in name order.
  static StructureFile load_directory(const std::filesystem::path &dir,
                                      const std::optional<Field> &field = std::nullopt);

  const Field &field() const { return field_; }
  /// Throws InputError on a duplicate name.
  void merge(const StructureFile &other);
  void put(const std::string &name, Json object);
  void put(const std::string &name, const Object &object);

  bool contains(const std::string &name) const { return objects_.contains(name); }
  std::vector<std::string> names() const;
  std::string type_of(const std::string &name) const;
  const Json &raw(const std::string &name) const;

  Object object(const std::string &name) const;
  /// Builds every object; throws InputError describing the first failure.
  void validate() const;

  Space space(const Json &ref) const;
  Algebra algebra(const Json &ref) const;
  Coalgebra coalgebra(const Json &ref) const;
  Bialgebra bialgebra(const Json &ref) const;
  Carrier carrier(const Json &ref) const;
  LinearMap map(const Json &ref) const;
  ModuleAction module(const Json &ref) const;
  ComoduleCoaction comodule(const Json &ref) const;
  EntwiningData entwining(const Json &ref) const;

  Json to_json() const;
  std::string dump() const;

private:
  const Json &resolve(const Json &ref) const;
  Object build(const Json &j) const;

  Field field_;
  Json objects_ = Json::object();
};

Json emit(const Object &o);
Json emit_matrix(const LinearMap &f);
Json emit_vector(const Vector &v);

/// Canonical rendering of a JSON value.
std::string canonical(const Json &j);

Json report_to_json(const Report &r);

} // namespace semient

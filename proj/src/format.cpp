#include "semient/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace semient {
namespace {

const Json &field_of(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json &j, const char *key) {
  const Json &v = field_of(j, key);
  if (!v.is_string())
    throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> labels_of(const Json &j) {
  if (!j.is_array() || j.empty())
    throw InputError("a basis must be a nonempty array of labels");
  std::vector<std::string> out;
  for (const auto &l : j) {
    if (!l.is_string())
      throw InputError("basis labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

Scalar scalar_of(const Json &j, const Field &k) {
  if (!j.is_string())
    throw InputError("scalars must be strings such as \"-3/2\"");
  try {
    return k.parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }
}

Vector vector_of(const Json &j, std::size_t n, const Field &k) {
  if (!j.is_array() || j.size() != n)
    throw InputError("expected a vector of length " + std::to_string(n));
  Vector v;
  for (const auto &x : j)
    v.push_back(scalar_of(x, k));
  return v;
}

/// Row-major: one row per codomain basis vector.
LinearMap matrix_of(const Json &j, const Space &dom, const Space &cod, const Field &k) {
  if (!j.is_array() || j.size() != cod.dim())
    throw InputError("expected " + std::to_string(cod.dim()) + " matrix rows");
  LinearMap f(dom, cod, k);
  for (std::size_t r = 0; r < cod.dim(); ++r) {
    const Json &row = j[r];
    if (!row.is_array() || row.size() != dom.dim())
      throw InputError("matrix row " + std::to_string(r) + " needs " + std::to_string(dom.dim()) + " entries");
    for (std::size_t c = 0; c < dom.dim(); ++c)
      f.at(r, c) = scalar_of(row[c], k);
  }
  return f;
}

Json labels_json(const Space &s) { return Json(s.labels()); }

Json factors_json(const Space &s) {
  Json out = Json::array();
  for (const auto &leaf : s.leaves())
    out.push_back(labels_json(leaf));
  return out;
}

Json emit_carrier(const Carrier &c) {
  if (c.algebra && c.coalgebra)
    return emit(Bialgebra(*c.algebra, *c.coalgebra));
  if (c.algebra)
    return emit(*c.algebra);
  if (c.coalgebra)
    return emit(*c.coalgebra);
  return emit(c.space);
}

void require_type(const Json &j, std::initializer_list<const char *> allowed, const char *wanted) {
  const std::string t = string_field(j, "type");
  for (const char *a : allowed)
    if (t == a)
      return;
  throw InputError("expected " + std::string(wanted) + ", found " + t);
}

} // namespace

const LinearMap &SystemObject::at(const std::string &role) const {
  const auto it = maps.find(role);
  if (it == maps.end())
    throw InputError(family + " system has no map '" + role + "'");
  return it->second;
}

std::string type_name(const Object &o) {
  static const char *names[] = {"space",     "algebra",    "coalgebra",  "bialgebra", "map",
                                "module",    "comodule",   "entwining",  "system",    "measured",
                                "derivation", "integral",  "braided",    "generator-action"};
  return names[o.index()];
}

StructureFile StructureFile::parse(const std::string &text, const std::optional<Field> &field) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw InputError("a structure file is a JSON object");
  const Json &version = field_of(doc, "format");
  if (!version.is_number_integer() || version.get<int>() != format_version)
    throw InputError("unsupported format version");
  Field k;
  try {
    k = field ? *field : Field::parse(string_field(doc, "field"));
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }
  StructureFile out(k);
  const Json &objects = field_of(doc, "objects");
  if (!objects.is_object())
    throw InputError("'objects' must map names to objects");
  for (const auto &[name, obj] : objects.items())
    out.put(name, obj);
  return out;
}

StructureFile StructureFile::load(const std::filesystem::path &path, const std::optional<Field> &field) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str(), field);
  } catch (const InputError &e) {
    throw InputError(path.filename().string() + ": " + e.what());
  }
}

StructureFile StructureFile::load_directory(const std::filesystem::path &dir, const std::optional<Field> &field) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto &entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.path().extension() == ".json")
      files.push_back(entry.path());
  if (ec)
    throw InputError("cannot list " + dir.string());
  std::sort(files.begin(), files.end());
  std::optional<StructureFile> out;
  for (const auto &f : files) {
    StructureFile part = load(f, field);
    if (!out)
      out = std::move(part);
    else if (!(part.field() == out->field()))
      throw InputError(f.filename().string() + " declares a different field");
    else
      out->merge(part);
  }
  return out ? *out : StructureFile(field.value_or(Field::rationals()));
}

void StructureFile::merge(const StructureFile &other) {
  for (const auto &[name, obj] : other.objects_.items())
    put(name, obj);
}

void StructureFile::put(const std::string &name, Json object) {
  if (objects_.contains(name))
    throw InputError("duplicate object '" + name + "'");
  if (!object.is_object() || !object.contains("type"))
    throw InputError("object '" + name + "' has no type");
  objects_[name] = std::move(object);
}

void StructureFile::put(const std::string &name, const Object &object) { put(name, emit(object)); }

std::vector<std::string> StructureFile::names() const {
  std::vector<std::string> out;
  for (const auto &[name, obj] : objects_.items())
    out.push_back(name);
  return out;
}

std::string StructureFile::type_of(const std::string &name) const { return string_field(raw(name), "type"); }

const Json &StructureFile::raw(const std::string &name) const {
  const auto it = objects_.find(name);
  if (it == objects_.end())
    throw InputError("unknown object '" + name + "'");
  return *it;
}

const Json &StructureFile::resolve(const Json &ref) const {
  if (ref.is_string())
    return raw(ref.get<std::string>());
  if (ref.is_object())
    return ref;
  throw InputError("a reference is an object name or an inline object");
}

Object StructureFile::object(const std::string &name) const {
  try {
    return build(raw(name));
  } catch (const InputError &e) {
    throw InputError("object '" + name + "': " + e.what());
  } catch (const std::invalid_argument &e) {
    throw InputError("object '" + name + "': " + e.what());
  } catch (const std::out_of_range &e) {
    throw InputError("object '" + name + "': " + e.what());
  }
}

void StructureFile::validate() const {
  for (const auto &name : names())
    (void)object(name);
}

Space StructureFile::space(const Json &ref) const {
  if (ref.is_array())
    return Space(labels_of(ref));
  const Json &j = resolve(ref);
  const std::string t = string_field(j, "type");
  if (t == "space" || t == "algebra" || t == "coalgebra" || t == "bialgebra")
    return Space(labels_of(field_of(j, "basis")));
  if (t == "module" || t == "comodule")
    return j.contains("basis") ? Space(labels_of(j.at("basis"))) : space(field_of(j, "space"));
  throw InputError("a " + t + " has no carrier space");
}

namespace {

Space tensor_of(const StructureFile &file, const Json &factors) {
  if (!factors.is_array())
    throw InputError("a domain or codomain is an array of factors");
  if (factors.empty())
    return Space::ground();
  Space out = file.space(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = tensor(out, file.space(factors[i]));
  return out;
}

} // namespace

Algebra StructureFile::algebra(const Json &ref) const {
  const Json &j = resolve(ref);
  require_type(j, {"algebra", "bialgebra"}, "an algebra");
  const Space s(labels_of(field_of(j, "basis")));
  return Algebra(s, matrix_of(field_of(j, "mult"), tensor(s, s), s, field_),
                 vector_of(field_of(j, "unit"), s.dim(), field_));
}

Coalgebra StructureFile::coalgebra(const Json &ref) const {
  const Json &j = resolve(ref);
  require_type(j, {"coalgebra", "bialgebra"}, "a coalgebra");
  const Space s(labels_of(field_of(j, "basis")));
  return Coalgebra(s, matrix_of(field_of(j, "comult"), s, tensor(s, s), field_),
                   vector_of(field_of(j, "counit"), s.dim(), field_));
}

Bialgebra StructureFile::bialgebra(const Json &ref) const {
  const Json &j = resolve(ref);
  require_type(j, {"bialgebra"}, "a bialgebra");
  return Bialgebra(algebra(j), coalgebra(j));
}

Carrier StructureFile::carrier(const Json &ref) const {
  if (ref.is_array())
    return Carrier::plain(space(ref));
  const Json &j = resolve(ref);
  const std::string t = string_field(j, "type");
  if (t == "algebra")
    return Carrier::of(algebra(j));
  if (t == "coalgebra")
    return Carrier::of(coalgebra(j));
  if (t == "bialgebra")
    return Carrier::of(bialgebra(j));
  return Carrier::plain(space(j));
}

LinearMap StructureFile::map(const Json &ref) const {
  const Json &j = resolve(ref);
  require_type(j, {"map"}, "a map");
  return matrix_of(field_of(j, "matrix"), tensor_of(*this, field_of(j, "domain")),
                   tensor_of(*this, field_of(j, "codomain")), field_);
}

ModuleAction StructureFile::module(const Json &ref) const {
  const Json &j = resolve(ref);
  require_type(j, {"module"}, "a module");
  const Algebra a = algebra(field_of(j, "algebra"));
  const Space m = space(j);
  return ModuleAction(m, a, matrix_of(field_of(j, "action"), tensor(m, a.space()), m, field_));
}

ComoduleCoaction StructureFile::comodule(const Json &ref) const {
  const Json &j = resolve(ref);
  require_type(j, {"comodule"}, "a comodule");
  const Coalgebra c = coalgebra(field_of(j, "coalgebra"));
  const Space m = space(j);
  const std::string side = string_field(j, "side");
  if (side != "left" && side != "right")
    throw InputError("comodule side is 'left' or 'right'");
  const Side sd = side == "left" ? Side::left : Side::right;
  const Space cod = sd == Side::left ? tensor(c.space(), m) : tensor(m, c.space());
  return ComoduleCoaction(m, c, matrix_of(field_of(j, "coaction"), m, cod, field_), sd);
}

EntwiningData StructureFile::entwining(const Json &ref) const {
  const Json &j = resolve(ref);
  require_type(j, {"entwining"}, "an entwining");
  EntwiningKind kind;
  try {
    kind = parse_entwining_kind(string_field(j, "kind"));
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }
  Carrier left = carrier(field_of(j, "left"));
  Carrier right = carrier(field_of(j, "right"));
  const LinearMap psi = matrix_of(field_of(j, "psi"), tensor(left.space, right.space),
                                  tensor(right.space, left.space), field_);
  return EntwiningData(std::move(left), std::move(right), psi, kind);
}

Object StructureFile::build(const Json &j) const {
  const std::string t = string_field(j, "type");
  if (t == "space")
    return space(j);
  if (t == "algebra")
    return algebra(j);
  if (t == "coalgebra")
    return coalgebra(j);
  if (t == "bialgebra")
    return bialgebra(j);
  if (t == "map")
    return map(j);
  if (t == "module")
    return module(j);
  if (t == "comodule")
    return comodule(j);
  if (t == "entwining")
    return entwining(j);
  if (t == "system") {
    SystemObject s{string_field(j, "family"), {}};
    if (s.family != "semi" && s.family != "wxz" && s.family != "type2")
      throw InputError("system family is semi, wxz or type2");
    const Json &maps = field_of(j, "maps");
    if (!maps.is_object())
      throw InputError("'maps' must map roles to maps");
    for (const auto &[role, ref] : maps.items())
      s.maps.emplace(role, map(ref));
    return s;
  }
  if (t == "measured") {
    MeasuredVariant v;
    try {
      v = parse_measured_variant(string_field(j, "variant"));
    } catch (const std::invalid_argument &e) {
      throw InputError(e.what());
    }
    const Space vee = space(field_of(j, "vee"));
    const Json &measuring = field_of(j, "measuring");
    MeasuredObject out;
    if (v == MeasuredVariant::semi_module || v == MeasuredVariant::semi_comodule) {
      const ModuleAction m = module(field_of(j, "base"));
      out.module = v == MeasuredVariant::semi_module
                       ? MeasuredModule::semi_module(m, vee, matrix_of(measuring, tensor(m.module(), vee), m.module(), field_))
                       : MeasuredModule::semi_comodule(m, vee, matrix_of(measuring, m.module(), tensor(m.module(), vee), field_));
    } else {
      const ComoduleCoaction m = comodule(field_of(j, "base"));
      out.module = v == MeasuredVariant::cosemi_module
                       ? MeasuredModule::cosemi_module(m, vee, matrix_of(measuring, tensor(vee, m.comodule()), m.comodule(), field_))
                       : MeasuredModule::cosemi_comodule(m, vee, matrix_of(measuring, m.comodule(), tensor(vee, m.comodule()), field_));
    }
    if (j.contains("entwining"))
      out.entwining = entwining(j.at("entwining"));
    return out;
  }
  if (t == "derivation") {
    const Algebra a = algebra(field_of(j, "algebra"));
    return DerivationObject{a, matrix_of(field_of(j, "matrix"), a.space(), a.space(), field_)};
  }
  if (t == "integral") {
    const Bialgebra h = bialgebra(field_of(j, "bialgebra"));
    return IntegralObject{h, vector_of(field_of(j, "element"), h.space().dim(), field_)};
  }
  if (t == "braided") {
    const Algebra a = algebra(field_of(j, "algebra"));
    const Space aa = tensor(a.space(), a.space());
    return BraidedObject{a, matrix_of(field_of(j, "psi"), aa, aa, field_)};
  }
  if (t == "generator-action") {
    const std::string side = string_field(j, "side");
    if (side != "tambara" && side != "cotambara")
      throw InputError("generator action side is 'tambara' or 'cotambara'");
    Carrier base = carrier(field_of(j, "base"));
    Carrier on = carrier(field_of(j, "carrier"));
    const Json &rho = field_of(j, "rho");
    if (!rho.is_array())
      throw InputError("'rho' is an array of matrices");
    std::vector<LinearMap> mats;
    for (const auto &m : rho)
      mats.push_back(matrix_of(m, on.space, on.space, field_));
    return GeneratorObject{side == "cotambara", GeneratorAction(std::move(base), std::move(on), std::move(mats))};
  }
  throw InputError("unknown object type '" + t + "'");
}

Json StructureFile::to_json() const {
  return Json{{"format", format_version}, {"field", field_.name()}, {"objects", objects_}};
}

std::string StructureFile::dump() const { return canonical(to_json()); }

Json emit_vector(const Vector &v) {
  Json out = Json::array();
  for (const auto &s : v)
    out.push_back(s.to_string());
  return out;
}

Json emit_matrix(const LinearMap &f) {
  Json out = Json::array();
  for (std::size_t r = 0; r < f.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < f.cols(); ++c)
      row.push_back(f.at(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

Json body(const Space &x) { return {{"basis", labels_json(x)}}; }
Json body(const Algebra &x) {
  return {{"basis", labels_json(x.space())}, {"mult", emit_matrix(x.mult())}, {"unit", emit_vector(x.unit())}};
}
Json body(const Coalgebra &x) {
  return {{"basis", labels_json(x.space())}, {"comult", emit_matrix(x.comult())}, {"counit", emit_vector(x.counit())}};
}
Json body(const Bialgebra &x) {
  Json j = body(x.algebra());
  j["comult"] = emit_matrix(x.coalgebra().comult());
  j["counit"] = emit_vector(x.coalgebra().counit());
  return j;
}
Json body(const LinearMap &x) {
  return {{"domain", factors_json(x.domain())}, {"codomain", factors_json(x.codomain())}, {"matrix", emit_matrix(x)}};
}
Json body(const ModuleAction &x) {
  return {{"algebra", emit(x.algebra())}, {"basis", labels_json(x.module())}, {"action", emit_matrix(x.action())}};
}
Json body(const ComoduleCoaction &x) {
  return {{"coalgebra", emit(x.coalgebra())},
          {"basis", labels_json(x.comodule())},
          {"side", x.side() == Side::left ? "left" : "right"},
          {"coaction", emit_matrix(x.coaction())}};
}
Json body(const EntwiningData &x) {
  return {{"kind", to_string(x.kind())},
          {"left", emit_carrier(x.left())},
          {"right", emit_carrier(x.right())},
          {"psi", emit_matrix(x.psi())}};
}
Json body(const SystemObject &x) {
  Json maps = Json::object();
  for (const auto &[role, f] : x.maps)
    maps[role] = emit(f);
  return {{"family", x.family}, {"maps", std::move(maps)}};
}
Json body(const MeasuredObject &x) {
  const MeasuredModule &m = x.module;
  Json j{{"variant", to_string(m.variant)}, {"vee", labels_json(m.vee)}, {"measuring", emit_matrix(m.measuring)}};
  j["base"] = m.action ? emit(*m.action) : emit(*m.coaction);
  if (x.entwining)
    j["entwining"] = emit(*x.entwining);
  return j;
}
Json body(const DerivationObject &x) { return {{"algebra", emit(x.algebra)}, {"matrix", emit_matrix(x.delta)}}; }
Json body(const IntegralObject &x) { return {{"bialgebra", emit(x.bialgebra)}, {"element", emit_vector(x.element)}}; }
Json body(const BraidedObject &x) { return {{"algebra", emit(x.algebra)}, {"psi", emit_matrix(x.psi)}}; }
Json body(const GeneratorObject &x) {
  Json rho = Json::array();
  for (const auto &m : x.action.matrices())
    rho.push_back(emit_matrix(m));
  return {{"side", x.co ? "cotambara" : "tambara"},
          {"base", emit_carrier(x.action.base())},
          {"carrier", emit_carrier(x.action.carrier())},
          {"rho", std::move(rho)}};
}

} // namespace

Json emit(const Object &o) {
  Json j = std::visit([](const auto &x) { return body(x); }, o);
  j["type"] = type_name(o);
  return j;
}

std::string canonical(const Json &j) { return j.dump(2) + "\n"; }

Json report_to_json(const Report &r) {
  Json checks = Json::array();
  for (const auto &c : r.checks()) {
    Json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.note.empty())
      cj["note"] = c.note;
    if (!c.passed && !c.witness.empty()) {
      cj["witness"] = c.witness;
      Json residual = Json::array();
      for (std::size_t i = 0; i < c.residual.size(); ++i)
        if (c.residual[i] != "0")
          residual.push_back(Json{{"basis", c.residual_labels[i]}, {"value", c.residual[i]}});
      cj["residual"] = std::move(residual);
    }
    checks.push_back(std::move(cj));
  }
  return Json{{"suite", r.suite()}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

} // namespace semient

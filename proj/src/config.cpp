#include "tnet/config.hpp"

#include <cmath>
#include <json.hpp>

namespace tnet {

using nlohmann::json;

namespace {

std::string position_text(int line, int column) {
  return line > 0 ? " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")" : "";
}

}  // namespace

ConfigError::ConfigError(std::string field, const std::string& message, int line, int column)
    : std::runtime_error((field.empty() ? std::string("config") : field) + ": " + message +
                         position_text(line, column)),
      field_(std::move(field)),
      line_(line),
      column_(column) {}

namespace {

// Cursor into the document that remembers its path for diagnostics.
class Node {
 public:
  Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& message) const { throw ConfigError(path_, message); }

  Node at(const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    const auto it = j_.find(key);
    if (it == j_.end()) throw ConfigError(child_path(key), "missing required field");
    return Node(*it, child_path(key));
  }
  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  std::vector<Node> items() const {
    if (!j_.is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_.size(); ++i) out.emplace_back(j_[i], path_ + "[" + std::to_string(i) + "]");
    return out;
  }

  double number() const {
    if (!j_.is_number()) fail("expected a number");
    const double x = j_.get<double>();
    if (!std::isfinite(x)) fail("expected a finite number");
    return x;
  }
  double positive() const {
    const double x = number();
    if (!(x > 0.0)) fail("must be positive, got " + j_.dump());
    return x;
  }
  double non_negative() const {
    const double x = number();
    if (!(x >= 0.0)) fail("must be >= 0, got " + j_.dump());
    return x;
  }
  int integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<int>();
  }
  std::string text() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  // Rejects keys outside `allowed` so typos do not pass silently.
  void only(std::initializer_list<const char*> allowed) const {
    if (!j_.is_object()) fail("expected an object");
    for (const auto& [key, value] : j_.items()) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) throw ConfigError(child_path(key), "unknown field");
    }
  }

 private:
  std::string child_path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json& j_;
  std::string path_;
};

ModelSpec parse_model(const Node& n) {
  const std::string type = n.at("type").text();
  ModelSpec m;
  if (type == "neo-hookean") {
    n.only({"type", "lambda", "mu"});
    m = CompNeoHookean{n.at("lambda").number(), n.at("mu").number()};
  } else if (type == "blatz-ko") {
    n.only({"type", "f", "mu", "beta"});
    m = BlatzKo{n.at("f").number(), n.at("mu").number(), n.at("beta").number()};
  } else if (type == "ogden-hill") {
    n.only({"type", "terms"});
    OgdenHill o;
    for (const Node& t : n.at("terms").items()) {
      t.only({"mu", "alpha", "beta"});
      o.terms.push_back({t.at("mu").number(), t.at("alpha").number(), t.at("beta").number()});
    }
    m = o;
  } else if (type == "yeoh") {
    n.only({"type", "c1", "c2", "c3"});
    m = YeohIso{n.at("c1").number(), n.at("c2").number(), n.at("c3").number()};
  } else {
    n.at("type").fail("unknown model '" + type + "' (neo-hookean, blatz-ko, ogden-hill, yeoh)");
  }
  try {
    validate(m);
  } catch (const std::invalid_argument& e) {
    n.fail(e.what());
  }
  return m;
}

KineticsSpec parse_kinetics(const Node& n) {
  const std::string type = n.at("type").text();
  if (type == "permanent") {
    n.only({"type"});
    return Permanent{};
  }
  if (type == "constant") {
    n.only({"type", "k"});
    return ConstantRate{n.at("k").non_negative()};
  }
  if (type == "arrhenius") {
    n.only({"type", "A", "EA"});
    return Arrhenius{n.at("A").non_negative(), n.at("EA").non_negative()};
  }
  n.at("type").fail("unknown kinetics '" + type + "' (permanent, constant, arrhenius)");
}

Tensor2 parse_tensor(const Node& n) {
  const std::vector<Node> v = n.items();
  if (v.size() != 9) n.fail("expected 9 components in row-major order");
  Tensor2 F;
  for (int i = 0; i < 9; ++i) F.v[i] = v[i].number();
  if (!(det(F) > 0.0)) n.fail("deformation gradient must have a positive determinant");
  return F;
}

Control parse_control(const Node& n) {
  const std::string type = n.at("type").text();
  if (type == "uniaxial") {
    n.only({"type", "stretch"});
    return UniaxialStretch{n.at("stretch").positive()};
  }
  if (type == "full-F") {
    n.only({"type", "F"});
    return FullF{parse_tensor(n.at("F"))};
  }
  if (type == "stress-free") {
    n.only({"type"});
    return StressFree{};
  }
  n.at("type").fail("unknown control '" + type + "' (uniaxial, full-F, stress-free)");
}

TemperatureSchedule parse_temperature(const Node& n, double current) {
  if (!n.has("temperature")) return ConstantTemperature{current};
  const Node t = n.at("temperature");
  if (t.has("T")) {
    t.only({"T"});
    return ConstantTemperature{t.at("T").positive()};
  }
  t.only({"start", "end"});
  return TemperatureRamp{t.at("start").positive(), t.at("end").positive()};
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // convert the byte offset into a line and column
    int line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, column = 1;
      else ++column;
    }
    throw ConfigError("", "syntax error", line, column);
  }

  const Node root(doc, "");
  root.only({"version", "unit", "initial_temperature", "material", "program", "options"});
  if (root.at("version").integer() != 1) root.at("version").fail("unsupported version (expected 1)");

  RunConfig c;
  if (root.has("unit")) {
    c.unit = root.at("unit").text();
    if (c.unit != "s" && c.unit != "yr") root.at("unit").fail("must be \"s\" or \"yr\"");
  }
  if (root.has("initial_temperature")) c.initial_temperature = root.at("initial_temperature").positive();

  const Node mat = root.at("material");
  mat.only({"networks", "volumetric"});
  for (const Node& n : mat.at("networks").items()) {
    n.only({"model", "kinetics"});
    c.material.networks.push_back({parse_model(n.at("model")), parse_kinetics(n.at("kinetics"))});
  }
  if (mat.has("volumetric")) {
    const Node v = mat.at("volumetric");
    v.only({"K"});
    c.material.volumetric = VolumetricSpec{v.at("K").positive()};
  }
  try {
    validate(c.material);
  } catch (const std::invalid_argument& e) {
    mat.fail(e.what());
  }

  double T = c.initial_temperature;
  for (const Node& s : root.at("program").items()) {
    s.only({"duration", "substeps", "control", "temperature"});
    LoadStep step;
    step.duration = s.at("duration").positive();
    step.substeps = s.at("substeps").integer();
    if (step.substeps < 1) s.at("substeps").fail("must be at least 1");
    step.control = parse_control(s.at("control"));
    step.temperature = parse_temperature(s, T);
    if (const auto* r = std::get_if<TemperatureRamp>(&step.temperature)) T = r->end;
    else T = std::get<ConstantTemperature>(step.temperature).T;
    c.program.push_back(step);
  }
  if (c.program.empty()) root.at("program").fail("needs at least one step");

  if (root.has("options")) {
    const Node o = root.at("options");
    o.only({"tangent", "rtol", "max_iterations"});
    if (o.has("tangent")) {
      const std::string t = o.at("tangent").text();
      if (t == "frozen") c.options.tangent = TangentMode::Frozen;
      else if (t == "algorithmic") c.options.tangent = TangentMode::Algorithmic;
      else o.at("tangent").fail("must be \"frozen\" or \"algorithmic\"");
    }
    if (o.has("rtol")) c.options.rtol = o.at("rtol").positive();
    if (o.has("max_iterations")) {
      c.options.max_iterations = o.at("max_iterations").integer();
      if (c.options.max_iterations < 1) o.at("max_iterations").fail("must be at least 1");
    }
  }
  return c;
}

}  // namespace tnet

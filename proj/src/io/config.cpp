#include "ldm/io/config.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "ldm/error.hpp"
#include "ldm/io/artifacts.hpp"
#include "ldm/io/csv.hpp"

namespace ldm::io {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = [] {
    std::set<std::string> k{"grid.n", "grid.dealias", "grid.dealias_fraction",
                            "model.kind", "model.delta", "model.N", "model.filter_forcing",
                            "model.filter_ic", "model.advection", "model.deconv",
                            "fluid.nu", "time.dt", "time.t_end", "time.snapshot_every",
                            "output.dir", "output.formats"};
    for (const char* s : {"ic", "forcing"}) {
      for (const char* f : {"kind", "amplitude", "k", "slope", "kmax", "seed", "expression"}) {
        k.insert(std::string(s) + "." + f);
      }
    }
    return k;
  }();
  return keys;
}

class Reader {
 public:
  explicit Reader(const ConfigDocument& doc) : doc_(doc) {}

  bool has(const std::string& key) const { return doc_.has(key); }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    const auto it = doc_.entries().find(key);
    const int line = it == doc_.entries().end() ? 0 : it->second.line;
    const std::string where = line > 0 ? doc_.source() + ":" + std::to_string(line) + ": " : "";
    throw ValidationError(where + key + ": " + what);
  }

  const std::string& raw(const std::string& key) const {
    const auto it = doc_.entries().find(key);
    if (it == doc_.entries().end()) throw ValidationError("missing required key " + key);
    return it->second.value;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    return has(key) ? raw(key) : fallback;
  }

  double real(const std::string& key, std::optional<double> fallback = std::nullopt) const {
    if (!has(key)) {
      if (fallback) return *fallback;
      raw(key);
    }
    const std::string& v = raw(key);
    double out = 0.0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) fail(key, "expected a number, got '" + v + "'");
    return out;
  }

  long long integer(const std::string& key, std::optional<long long> fallback = std::nullopt) const {
    if (!has(key)) {
      if (fallback) return *fallback;
      raw(key);
    }
    const std::string& v = raw(key);
    long long out = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) fail(key, "expected an integer, got '" + v + "'");
    return out;
  }

  bool boolean(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string& v = raw(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(key, "expected true or false, got '" + v + "'");
  }

  std::array<int, 3> triple(const std::string& key, std::array<int, 3> fallback) const {
    if (!has(key)) return fallback;
    std::array<int, 3> out{};
    std::stringstream ss(raw(key));
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
      if (i == 3) fail(key, "expected three comma-separated integers");
      part = trim(part);
      const auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), out[i]);
      if (ec != std::errc() || p != part.data() + part.size()) fail(key, "expected integers, got '" + raw(key) + "'");
      ++i;
    }
    if (i != 3) fail(key, "expected three comma-separated integers");
    return out;
  }

 private:
  const ConfigDocument& doc_;
};

FieldSpec read_field(const Reader& r, const std::string& section, FieldSpec::Kind default_kind) {
  FieldSpec f;
  try {
    f.kind = r.has(section + ".kind") ? parse_field_kind(r.raw(section + ".kind")) : default_kind;
  } catch (const ValidationError& e) {
    r.fail(section + ".kind", e.what());
  }
  f.amplitude = r.real(section + ".amplitude", 1.0);
  f.k = r.triple(section + ".k", f.k);
  f.spectrum_slope = r.real(section + ".slope", f.spectrum_slope);
  f.kmax = int(r.integer(section + ".kmax", 0));
  const long long seed = r.integer(section + ".seed", 1);
  if (seed < 0) r.fail(section + ".seed", "must be >= 0");
  f.seed = std::uint64_t(seed);
  f.expression = r.text(section + ".expression", f.expression);
  if (f.kmax < 0) r.fail(section + ".kmax", "must be >= 0");
  return f;
}

std::string num(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string flag(bool b) { return b ? "true" : "false"; }

void field_text(std::ostringstream& o, const std::string& section, const FieldSpec& f) {
  o << "\n[" << section << "]\n"
    << "kind = " << to_string(f.kind) << "\n"
    << "amplitude = " << num(f.amplitude) << "\n"
    << "k = " << f.k[0] << "," << f.k[1] << "," << f.k[2] << "\n"
    << "slope = " << num(f.spectrum_slope) << "\n"
    << "kmax = " << f.kmax << "\n"
    << "seed = " << f.seed << "\n"
    << "expression = " << f.expression << "\n";
}

}  // namespace

ConfigDocument ConfigDocument::parse(const std::string& text, const std::string& source) {
  ConfigDocument doc;
  doc.source_ = source;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ValidationError(source + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    std::string s = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (s.empty() || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail("unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section.empty()) fail("empty section name");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    if (section.empty()) fail("key outside of any [section]");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail("empty key");
    const std::string full = section + "." + key;
    if (!known_keys().count(full)) fail("unknown key '" + full + "'");
    if (doc.entries_.count(full)) fail("duplicate key '" + full + "'");
    doc.entries_[full] = {value, lineno};
  }
  return doc;
}

ConfigDocument ConfigDocument::load(const std::string& path) { return parse(read_file(path), path); }

void ConfigDocument::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ValidationError("override '" + assignment + "' is not key=value");
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void ConfigDocument::set(const std::string& key, const std::string& value) {
  if (!known_keys().count(key)) throw ValidationError("unknown key '" + key + "'");
  entries_[key] = {value, 0};
}

RunConfig to_run_config(const ConfigDocument& doc) {
  const Reader r(doc);
  RunConfig rc;
  SolverConfig& c = rc.solver;

  const long long n = r.integer("grid.n");
  const double frac = r.real("grid.dealias_fraction", 2.0 / 3.0);
  try {
    c.grid = Grid::make(int(n), frac);
  } catch (const ValidationError& e) {
    r.fail(n < 4 || n % 2 ? "grid.n" : "grid.dealias_fraction", e.what());
  }
  c.dealias = r.boolean("grid.dealias", true);

  const std::string kind = r.raw("model.kind");
  if (kind == "nse") {
    c.model = ModelKind::nse();
  } else if (kind == "leray_deconv" || kind == "leray_alpha") {
    const long long order = kind == "leray_alpha" ? 0 : r.integer("model.N", 0);
    if (kind == "leray_alpha" && r.has("model.N") && r.integer("model.N") != 0) {
      r.fail("model.N", "leray_alpha fixes N = 0");
    }
    if (!r.has("model.delta")) throw ValidationError("model.delta is required for model.kind = " + kind);
    const double delta = r.real("model.delta");
    if (order < 0 || order > kDefaultMaxOrder) r.fail("model.N", "must lie in [0, 64]");
    if (!(delta > 0.0)) r.fail("model.delta", "must be positive");
    c.model = ModelKind::leray_deconv(int(order));
    c.filter = FilterSpec::make(delta, int(order));
  } else {
    r.fail("model.kind", "expected nse, leray_deconv or leray_alpha, got '" + kind + "'");
  }
  c.filter_forcing = r.boolean("model.filter_forcing", true);
  c.filter_ic = r.boolean("model.filter_ic", true);
  const std::string adv = r.text("model.advection", "advective");
  if (adv == "advective") c.advection = AdvectionForm::advective;
  else if (adv == "divergence") c.advection = AdvectionForm::divergence;
  else r.fail("model.advection", "expected advective or divergence");
  const std::string dec = r.text("model.deconv", "closed_form");
  if (dec == "closed_form") c.deconv = DeconvMode::closed_form;
  else if (dec == "iterative") c.deconv = DeconvMode::iterative;
  else r.fail("model.deconv", "expected closed_form or iterative");

  c.nu = r.real("fluid.nu");
  if (!(c.nu >= 0.0)) r.fail("fluid.nu", "must be >= 0");
  c.dt = r.real("time.dt");
  if (!(c.dt > 0.0)) r.fail("time.dt", "must be positive");
  c.t_end = r.real("time.t_end");
  if (!(c.t_end >= c.dt)) r.fail("time.t_end", "must be >= time.dt");
  const long long every = r.integer("time.snapshot_every", 0);
  if (every < 0) r.fail("time.snapshot_every", "must be >= 0");
  c.snapshot_every = int(every);

  c.ic = read_field(r, "ic", FieldSpec::Kind::taylor_green);
  c.forcing = read_field(r, "forcing", FieldSpec::Kind::zero);

  rc.output_dir = r.text("output.dir", rc.output_dir);
  if (r.has("output.formats")) {
    rc.write_csv = rc.write_snapshots = false;
    std::stringstream ss(r.raw("output.formats"));
    std::string part;
    while (std::getline(ss, part, ',')) {
      part = trim(part);
      if (part == "csv") rc.write_csv = true;
      else if (part == "snapshot") rc.write_snapshots = true;
      else if (!part.empty()) r.fail("output.formats", "unknown format '" + part + "' (expected csv, snapshot)");
    }
  }
  c.validate();
  return rc;
}

std::string effective_config_text(const RunConfig& rc) {
  const SolverConfig& c = rc.solver;
  std::ostringstream o;
  o << "[grid]\n"
    << "n = " << c.grid.n << "\n"
    << "dealias = " << flag(c.dealias) << "\n"
    << "dealias_fraction = " << num(c.grid.dealias_fraction) << "\n"
    << "\n[model]\n"
    << "kind = " << (c.model.is_model() ? "leray_deconv" : "nse") << "\n";
  if (c.model.is_model()) {
    o << "delta = " << num(c.filter.delta) << "\n"
      << "N = " << c.model.order << "\n";
  }
  o << "filter_forcing = " << flag(c.filter_forcing) << "\n"
    << "filter_ic = " << flag(c.filter_ic) << "\n"
    << "advection = " << (c.advection == AdvectionForm::advective ? "advective" : "divergence") << "\n"
    << "deconv = " << (c.deconv == DeconvMode::closed_form ? "closed_form" : "iterative") << "\n"
    << "\n[fluid]\n"
    << "nu = " << num(c.nu) << "\n"
    << "\n[time]\n"
    << "dt = " << num(c.dt) << "\n"
    << "t_end = " << num(c.t_end) << "\n"
    << "snapshot_every = " << c.snapshot_every << "\n";
  field_text(o, "ic", c.ic);
  field_text(o, "forcing", c.forcing);
  std::string formats;
  if (rc.write_csv) formats = "csv";
  if (rc.write_snapshots) formats += formats.empty() ? "snapshot" : ",snapshot";
  o << "\n[output]\n"
    << "dir = " << rc.output_dir << "\n"
    << "formats = " << formats << "\n";
  return o.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ldm::io

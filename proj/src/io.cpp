#include "psc/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace psc::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

}  // namespace

NamedSpectrum parse_spectrum(const std::string& json_text, const std::string& where) {
  json j = parse_json(json_text, where);
  NamedSpectrum out;
  try {
    out.name = j.at("name").get<std::string>();
    out.source = j.value("source", std::string{});
    auto orders = j.at("orders").get<std::vector<std::int64_t>>();
    if (orders.empty()) throw ParseError(where + ": field 'orders' is empty");
    std::vector<u64> os;
    for (auto v : orders) {
      if (v <= 0) throw ParseError(where + ": field 'orders' has a non-positive entry");
      os.push_back(u64(v));
    }
    out.spectrum = Spectrum::from_orders(std::move(os));
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  return out;
}

NamedSpectrum load_spectrum(const std::filesystem::path& path) {
  return parse_spectrum(slurp(path), path.string());
}

std::string spectrum_json(const NamedSpectrum& s) {
  json j;
  j["name"] = s.name;
  j["orders"] = s.spectrum.orders;
  j["source"] = s.source;
  return j.dump(2) + "\n";
}

void save_spectrum(const std::filesystem::path& path, const NamedSpectrum& s) {
  spill(path, spectrum_json(s));
}

PrimeComplex parse_complex(const std::string& json_text, bool* reduced,
                           const std::string& where) {
  json j = parse_json(json_text, where);
  try {
    auto vertices = j.at("vertices").get<std::vector<u64>>();
    std::vector<PrimeSimplex> faces;
    for (const auto& f : j.at("maximal")) faces.emplace_back(f.get<std::vector<u64>>());
    return PrimeComplex::from_vertices_and_faces(std::move(vertices), std::move(faces), reduced);
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

PrimeComplex load_complex(const std::filesystem::path& path, bool* reduced) {
  return parse_complex(slurp(path), reduced, path.string());
}

std::string complex_json(const PrimeComplex& c) {
  json j;
  j["vertices"] = c.vertices();
  auto& ms = j["maximal"] = json::array();
  for (const auto& s : c.maximal()) ms.push_back(s.primes);
  return j.dump(2) + "\n";
}

void save_complex(const std::filesystem::path& path, const PrimeComplex& c) {
  spill(path, complex_json(c));
}

std::string complex_text(const PrimeComplex& c) {
  std::ostringstream ss;
  ss << "vertices:";
  for (u64 v : c.vertices()) ss << ' ' << v;
  ss << "\nmaximal:";
  for (const auto& s : c.maximal()) ss << ' ' << to_string(s);
  ss << '\n';
  return ss.str();
}

std::string emit_dot(const PrimeGraph& g) {
  std::ostringstream ss;
  ss << "graph prime_graph {\n";
  for (u64 v : g.vertices) ss << "  " << v << ";\n";
  for (const auto& [p, r] : g.edges) ss << "  " << p << " -- " << r << ";\n";
  ss << "}\n";
  return ss.str();
}

FixtureStore::FixtureStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (dir_.empty()) {
    if (const char* env = std::getenv("PSC_FIXTURES"))
      dir_ = env;
    else
      dir_ = "data/fixtures";
  }
}

std::vector<std::string> FixtureStore::names() const {
  std::vector<std::string> out;
  if (!std::filesystem::is_directory(dir_)) return out;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

NamedSpectrum FixtureStore::load(const std::string& name) const {
  auto path = dir_ / (name + ".json");
  if (!std::filesystem::is_regular_file(path))
    throw MissingFixture("fixture not found: " + path.string());
  return load_spectrum(path);
}

groups::FixtureResolver FixtureStore::resolver() const {
  FixtureStore copy = *this;
  return [copy](const std::string& name) { return copy.load(name).spectrum; };
}

}  // namespace psc::io

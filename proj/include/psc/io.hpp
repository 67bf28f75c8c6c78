#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "psc/complexes.hpp"
#include "psc/groups.hpp"

namespace psc::io {

struct NamedSpectrum {
  std::string name;
  std::string source;
  Spectrum spectrum;
};

NamedSpectrum parse_spectrum(const std::string& json_text, const std::string& where = "<input>");
NamedSpectrum load_spectrum(const std::filesystem::path& path);
std::string spectrum_json(const NamedSpectrum& s);
void save_spectrum(const std::filesystem::path& path, const NamedSpectrum& s);

/// reduced is set when the maximal list needed antichain reduction.
PrimeComplex parse_complex(const std::string& json_text, bool* reduced = nullptr,
                           const std::string& where = "<input>");
PrimeComplex load_complex(const std::filesystem::path& path, bool* reduced = nullptr);
std::string complex_json(const PrimeComplex& c);
void save_complex(const std::filesystem::path& path, const PrimeComplex& c);

std::string complex_text(const PrimeComplex& c);
std::string emit_dot(const PrimeGraph& g);

/// Directory-backed fixture spectra; honours PSC_FIXTURES, falling back to
/// data/fixtures next to the current working directory.
class FixtureStore {
 public:
  explicit FixtureStore(std::filesystem::path dir = {});

  const std::filesystem::path& dir() const { return dir_; }
  std::vector<std::string> names() const;  // sorted
  NamedSpectrum load(const std::string& name) const;
  groups::FixtureResolver resolver() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace psc::io

namespace psc {

/// Full command-line surface; returns the process exit code
/// (0 success, 1 domain error, 2 usage error).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psc

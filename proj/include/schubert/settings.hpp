#pragma once

// Layered option lookup for the command-line tool.  Precedence, highest
// first: command-line flag, environment variable, config file, built-in
// default.  A key such as "max-lattice" maps to the environment variable
// SCHUBERT_MAX_LATTICE and to the config-file member "max-lattice".

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "schubert/birkhoff.hpp"
#include "schubert/lattice.hpp"
#include "schubert/monomials.hpp"

namespace schubert {

struct Budgets {
  LatticeOptions lattice;
  IdealOptions ideals;
  MonomialOptions monomials;
  StructureLimits structure;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

EnvLookup process_environment();

std::string env_name(std::string_view key);  // "max-lattice" -> "SCHUBERT_MAX_LATTICE"

class SettingLayers {
 public:
  SettingLayers() : env_(process_environment()) {}
  explicit SettingLayers(EnvLookup env) : env_(std::move(env)) {}

  // Reads a flat JSON object of scalars.  Throws Error(invalid_argument) on a
  // missing file, malformed JSON or a non-scalar member.
  void load_config_file(const std::string& path);
  void set_config_value(std::string key, std::string value) { file_[std::move(key)] = std::move(value); }

  // Environment, then config file.
  std::optional<std::string> lookup(std::string_view key) const;

  long long integer(std::string_view key, std::optional<long long> flag, long long fallback) const;
  std::string text(std::string_view key, std::optional<std::string> flag, std::string fallback) const;
  bool boolean(std::string_view key, bool flag_given, bool fallback) const;

 private:
  EnvLookup env_;
  std::map<std::string, std::string, std::less<>> file_;
};

// Fills the budget fields from the layers: max-lattice, max-ideals,
// max-multichains, max-triples, relational-cover-limit.  `flags` carries any
// values given on the command line.
Budgets resolve_budgets(const SettingLayers& layers,
                        const std::map<std::string, long long, std::less<>>& flags = {});

}  // namespace schubert

#include "schubert/settings.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace schubert {

EnvLookup process_environment() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

std::string env_name(std::string_view key) {
  std::string out = "SCHUBERT_";
  for (char c : key) out.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return out;
}

void SettingLayers::load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open config file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::invalid_argument, "config file " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::invalid_argument, "config file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (value.is_string()) {
      file_[key] = value.get<std::string>();
    } else if (value.is_boolean() || value.is_number()) {
      file_[key] = value.dump();
    } else {
      throw Error(ErrorKind::invalid_argument, "config member '" + key + "' is not a scalar");
    }
  }
}

std::optional<std::string> SettingLayers::lookup(std::string_view key) const {
  if (env_) {
    if (auto v = env_(env_name(key))) return v;
  }
  if (auto it = file_.find(key); it != file_.end()) return it->second;
  return std::nullopt;
}

long long SettingLayers::integer(std::string_view key, std::optional<long long> flag, long long fallback) const {
  if (flag) return *flag;
  auto v = lookup(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    long long parsed = std::stoll(*v, &used);
    if (used != v->size()) throw std::invalid_argument("trailing characters");
    return parsed;
  } catch (const std::exception&) {
    throw Error(ErrorKind::invalid_argument, "setting '" + std::string(key) + "' is not an integer: " + *v);
  }
}

std::string SettingLayers::text(std::string_view key, std::optional<std::string> flag, std::string fallback) const {
  if (flag) return *flag;
  if (auto v = lookup(key)) return *v;
  return fallback;
}

bool SettingLayers::boolean(std::string_view key, bool flag_given, bool fallback) const {
  if (flag_given) return true;
  auto v = lookup(key);
  if (!v) return fallback;
  if (*v == "1" || *v == "true" || *v == "yes" || *v == "on") return true;
  if (*v == "0" || *v == "false" || *v == "no" || *v == "off") return false;
  throw Error(ErrorKind::invalid_argument, "setting '" + std::string(key) + "' is not a boolean: " + *v);
}

Budgets resolve_budgets(const SettingLayers& layers,
                        const std::map<std::string, long long, std::less<>>& flags) {
  auto get = [&](std::string_view key, std::size_t fallback) -> std::size_t {
    std::optional<long long> flag;
    if (auto it = flags.find(key); it != flags.end()) flag = it->second;
    const long long v = layers.integer(key, flag, static_cast<long long>(fallback));
    if (v <= 0) throw Error(ErrorKind::invalid_argument, "setting '" + std::string(key) + "' must be positive");
    return static_cast<std::size_t>(v);
  };
  Budgets b;
  b.lattice.max_elements = get("max-lattice", b.lattice.max_elements);
  b.ideals.max_ideals = get("max-ideals", b.ideals.max_ideals);
  b.monomials.max_multichains = get("max-multichains", b.monomials.max_multichains);
  b.structure.exhaustive_triples = get("max-triples", b.structure.exhaustive_triples);
  b.structure.relational_cover_limit = get("relational-cover-limit", b.structure.relational_cover_limit);
  return b;
}

}  // namespace schubert

#include "dpsbp/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dpsbp {

namespace {
std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}
}  // namespace

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str());
}

Config Config::from_string(const std::string& text) {
  Config c;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: expected 'key = value', got '" + line + "'");
    c.kv_[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return c;
}

void Config::apply_override(const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("override must be key=value, got '" + assignment + "'");
  kv_[trim(assignment.substr(0, eq))] = trim(assignment.substr(eq + 1));
}

std::string Config::get(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) throw std::runtime_error("config: missing required key '" + key + "'");
  return it->second;
}

std::string Config::get(const std::string& key, const std::string& fallback) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  return std::stod(it->second);
}

double Config::require_double(const std::string& key) const { return std::stod(get(key)); }

int Config::get_int(const std::string& key, int fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  return std::stoi(it->second);
}

long Config::get_long(const std::string& key, long fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  return std::stol(it->second);
}

std::vector<std::string> Config::get_list(const std::string& key) const {
  std::vector<std::string> out;
  auto it = kv_.find(key);
  if (it == kv_.end()) return out;
  std::string item;
  std::istringstream is(it->second);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> Config::get_int_list(const std::string& key) const {
  std::vector<int> out;
  for (const auto& s : get_list(key)) out.push_back(std::stoi(s));
  return out;
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& s : get_list(key)) out.push_back(std::stod(s));
  return out;
}

}  // namespace dpsbp

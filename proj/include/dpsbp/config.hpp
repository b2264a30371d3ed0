#ifndef DPSBP_CONFIG_HPP
#define DPSBP_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

namespace dpsbp {

// Flat key-value configuration. Lines are `key = value`, '#' starts a
// comment, nested scenario parameters use dotted keys (scenario.g = 5).
class Config {
 public:
  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text);

  void set(const std::string& key, const std::string& value) { kv_[key] = value; }
  // "key=value" as passed on the command line
  void apply_override(const std::string& assignment);

  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  std::string get(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  double require_double(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  long get_long(const std::string& key, long fallback) const;
  std::vector<int> get_int_list(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<std::string> get_list(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace dpsbp

#endif

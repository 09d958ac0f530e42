#ifndef GEOPHASE_CONFIG_HPP
#define GEOPHASE_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace geophase {

// Flat sectioned key-value configuration:
//   [section]
//   key = value      # comment
// Keys are addressed as "section.key". CLI --set overrides replace values.
class KeyValueConfig {
  public:
    static KeyValueConfig parse_file(const std::string& path);
    static KeyValueConfig parse_string(const std::string& text);

    void set(const std::string& dotted_key, const std::string& value);
    bool has(const std::string& dotted_key) const;

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    // "inf" (any case) means the zero-temperature branch.
    bool get_beta_is_infinite(const std::string& key) const;

    std::vector<std::string> keys() const;

  private:
    std::map<std::string, std::string> values_;
};

}  // namespace geophase

#endif

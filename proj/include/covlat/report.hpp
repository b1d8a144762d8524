#pragma once

#include <memory>
#include <string>
#include <vector>

namespace covlat {

/// Ordered tree of labeled exact values; serializes deterministically as
/// indented text or as a JSON object tree with stable key order.
class Report {
  public:
    void put(const std::string& key, const std::string& value);
    void put(const std::string& key, long value);
    template <typename T>
    void put_str(const std::string& key, const T& v) {
        put(key, v.get_str());
    }
    Report& section(const std::string& key);

    std::string to_text(int indent = 0) const;
    std::string to_json() const;

  private:
    struct Node {
        std::string key;
        std::string value;                // leaf payload
        std::shared_ptr<Report> child;    // subtree payload
    };
    std::vector<Node> items_;
    void json_into(std::string& out) const;
};

}  // namespace covlat

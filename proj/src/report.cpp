#include "covlat/report.hpp"

#include <sstream>

namespace covlat {

void Report::put(const std::string& key, const std::string& value) {
    items_.push_back(Node{key, value, nullptr});
}

void Report::put(const std::string& key, long value) { put(key, std::to_string(value)); }

Report& Report::section(const std::string& key) {
    auto child = std::make_shared<Report>();
    items_.push_back(Node{key, "", child});
    return *child;
}

std::string Report::to_text(int indent) const {
    std::ostringstream os;
    std::string pad(size_t(indent) * 2, ' ');
    for (auto& n : items_) {
        if (n.child) {
            os << pad << n.key << ":\n" << n.child->to_text(indent + 1);
        } else {
            os << pad << n.key << " = " << n.value << "\n";
        }
    }
    return os.str();
}

namespace {

void json_escape(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

}  // namespace

void Report::json_into(std::string& out) const {
    out += '{';
    bool first = true;
    for (auto& n : items_) {
        if (!first) out += ',';
        first = false;
        json_escape(n.key, out);
        out += ':';
        if (n.child) {
            n.child->json_into(out);
        } else {
            json_escape(n.value, out);
        }
    }
    out += '}';
}

std::string Report::to_json() const {
    std::string out;
    json_into(out);
    out += '\n';
    return out;
}

}  // namespace covlat

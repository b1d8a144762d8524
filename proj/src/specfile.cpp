#include "covlat/specfile.hpp"

#include <algorithm>
#include <sstream>

namespace covlat {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Family parse_family(const std::string& v, int line) {
    if (v == "GL") return Family::GL;
    if (v == "SL") return Family::SL;
    if (v == "Sp") return Family::Sp;
    if (v == "GSp-I" || v == "GSpI") return Family::GSpI;
    if (v == "GSp-II" || v == "GSpII") return Family::GSpII;
    if (v == "SO3") return Family::SO3;
    if (v == "Spin") return Family::SpinOdd;
    if (v == "GSpin") return Family::GSpinOdd;
    throw parse_error(line, "unknown family: " + v);
}

long parse_long(const std::string& v, int line) {
    try {
        size_t pos = 0;
        long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (std::exception&) {
        throw parse_error(line, "bad integer: " + v);
    }
}

Int parse_int(const std::string& v, int line) {
    try {
        return Int(v);
    } catch (std::exception&) {
        throw parse_error(line, "bad integer: " + v);
    }
}

// "(j1,c1),(j2,c2),..."
std::vector<std::pair<long, long>> parse_chi(const std::string& v, int line) {
    std::vector<std::pair<long, long>> out;
    size_t i = 0;
    while (i < v.size()) {
        while (i < v.size() && (v[i] == ' ' || v[i] == ',')) ++i;
        if (i >= v.size()) break;
        if (v[i] != '(') throw parse_error(line, "chi: expected '('");
        size_t close = v.find(')', i);
        if (close == std::string::npos) throw parse_error(line, "chi: missing ')'");
        std::string pair = v.substr(i + 1, close - i - 1);
        size_t comma = pair.find(',');
        if (comma == std::string::npos) throw parse_error(line, "chi: expected (j,c)");
        out.emplace_back(parse_long(trim(pair.substr(0, comma)), line),
                         parse_long(trim(pair.substr(comma + 1)), line));
        i = close + 1;
    }
    return out;
}

std::vector<int> parse_partition(const std::string& v, int line) {
    std::vector<int> out;
    std::string cur;
    for (char ch : v + ",") {
        if (ch == ',' || ch == ';' || ch == ' ') {
            if (!cur.empty()) {
                out.push_back(int(parse_long(cur, line)));
                cur.clear();
            }
        } else {
            cur += ch;
        }
    }
    return out;
}

}  // namespace

CoverSpec parse_cover_spec(const std::string& text) {
    CoverSpec spec;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool family_seen = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw parse_error(lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "family") {
            spec.params.family = parse_family(value, lineno);
            family_seen = true;
        } else if (key == "rank") {
            spec.params.rank = int(parse_long(value, lineno));
        } else if (key == "n") {
            spec.params.n = parse_long(value, lineno);
        } else if (key == "p") {
            spec.params.p = parse_int(value, lineno);
        } else if (key == "q") {
            spec.params.q = parse_int(value, lineno);
        } else if (key == "Q_e0") {
            spec.params.q_e0 = parse_int(value, lineno);
        } else if (key == "Q_coroot") {
            spec.params.q_coroot = parse_int(value, lineno);
        } else if (key == "epsilon") {
            long e = parse_long(value, lineno);
            if (e != 1 && e != -1) throw parse_error(lineno, "epsilon must be +1 or -1");
            spec.params.epsilon = int(e);
        } else if (key == "chi") {
            spec.chi = parse_chi(value, lineno);
            spec.has_chi = true;
        } else if (key == "partition") {
            spec.partition = parse_partition(value, lineno);
        } else if (key == "cap") {
            spec.cap = parse_int(value, lineno);
        } else {
            throw parse_error(lineno, "unknown key: " + key);
        }
    }
    if (!family_seen) throw parse_error(0, "missing family");
    if (spec.params.family == Family::GSpinOdd && spec.params.p == 0) spec.params.p = 1;
    return spec;
}

CoverDatum cover_from_spec(const CoverSpec& spec) { return make_cover(spec.params); }

GenuineCharacter character_from_spec(const CoverSpec& spec, const CoverDatum& c) {
    if (!spec.has_chi) return trivial_character(c);
    return make_character(c, spec.chi);
}

std::vector<int> levi_subset_from_partition(const RootDatum& d, const std::vector<int>& partition) {
    // GL_r: partition (r_1, ..., r_k); GSp/GSpin: (r_1, ..., r_k; m) with the
    // last entry the symplectic block. Kept simple roots are those inside the
    // blocks.
    std::vector<int> subset;
    int pos = 0;
    int total = 0;
    for (int p : partition) total += p;
    bool has_tail = (d.family == Family::GSpI || d.family == Family::GSpII ||
                     d.family == Family::GSpinOdd);
    int r = d.family_rank;
    if (total != r) throw compute_error("partition does not sum to the rank");
    for (size_t b = 0; b < partition.size(); ++b) {
        int len = partition[b];
        bool last = (b + 1 == partition.size());
        for (int i = 0; i + 1 < len; ++i) subset.push_back(pos + i);
        if (last && has_tail && len >= 1) {
            // symplectic block keeps its internal roots plus the long root
            for (int i = pos; i < r; ++i)
                if (std::find(subset.begin(), subset.end(), i) == subset.end() && i < d.nsimple())
                    subset.push_back(i);
        }
        pos += len;
    }
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    return subset;
}

}  // namespace covlat

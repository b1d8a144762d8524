#pragma once

#include "covlat/genchar.hpp"

namespace covlat {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};

/// Parsed `key = value` cover specification.
struct CoverSpec {
    CoverParams params;
    std::vector<std::pair<long, long>> chi;  // character tuples (j, c)
    bool has_chi = false;
    std::vector<int> partition;  // Levi partition for the tensor command
    Int cap = 1000000;
};

CoverSpec parse_cover_spec(const std::string& text);

CoverDatum cover_from_spec(const CoverSpec& spec);
GenuineCharacter character_from_spec(const CoverSpec& spec, const CoverDatum& c);

// simple-root indices of the Levi attached to a GL/GSp partition
std::vector<int> levi_subset_from_partition(const RootDatum& d, const std::vector<int>& partition);

}  // namespace covlat

#pragma once

#include "covlat/packets.hpp"
#include "covlat/report.hpp"
#include "covlat/specfile.hpp"

namespace covlat {

struct RunOptions {
    std::string format = "text";  // text | structured
    std::optional<int> epsilon;   // override
    std::optional<Int> cap;
    std::vector<int> partition;   // override for tensor
};

Report cmd_show(const CoverSpec& spec, const RunOptions& opt);
Report cmd_restrict(const CoverSpec& spec, const RunOptions& opt);
Report cmd_whittaker(const CoverSpec& spec, const RunOptions& opt);
Report cmd_scattering(const CoverSpec& spec, const RunOptions& opt);
Report cmd_packets(const CoverSpec& spec, const RunOptions& opt);
Report cmd_tensor(const CoverSpec& spec, const RunOptions& opt);

std::string render(const Report& r, const std::string& format);

// Runs one of the commands above by name ("show", "restrict", ...).
std::string run_command(const std::string& command, const CoverSpec& spec, const RunOptions& opt);

}  // namespace covlat

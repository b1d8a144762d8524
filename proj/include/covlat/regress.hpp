#pragma once

#include "covlat/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace covlat {

struct RegressEntry {
    std::string id;
    std::string citation;
    std::function<bool(int epsilon)> run;
};

const std::vector<RegressEntry>& regress_corpus();

struct RegressOutcome {
    std::vector<std::string> passed;
    std::vector<std::pair<std::string, std::string>> failed;         // id, detail
    std::vector<std::string> eps_sensitive;                          // failed at eps, pass at +1
    bool ok() const { return failed.empty(); }
};

RegressOutcome run_regress(int epsilon);
Report regress_report(const RegressOutcome& o);

}  // namespace covlat

// covlat command line: parses a cover spec file and runs one report command
// through the shared-library C API.

#include "covlat.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int fail(int code, const std::string& msg) {
    std::cerr << "covlat: " << msg << "\n";
    return code;
}

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path);
    if (!in) {
        ok = false;
        return "";
    }
    std::ostringstream os;
    os << in.rdbuf();
    ok = true;
    return os.str();
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) return 1;
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of Brylinski-Deligne covering groups"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string epsilon;
    std::string cap;
    std::string partition;
    std::string out_path;
    app.add_option("--format", format, "output format: text or structured");
    app.add_option("--epsilon", epsilon, "override the cover's epsilon (+1 or -1)");
    app.add_option("--cap", cap, "enumeration cap");
    app.add_option("--partition", partition, "Levi partition for the tensor command");
    app.add_option("--out", out_path, "write the report to a file");

    std::vector<std::string> commands{"show", "restrict", "whittaker", "scattering", "packets",
                                      "tensor"};
    std::map<std::string, std::string> spec_paths;
    for (auto& c : commands) {
        auto* sub = app.add_subcommand(c, c + " report for a cover spec file");
        sub->add_option("spec", spec_paths[c], "cover spec file")->required();
        sub->fallthrough();
    }
    auto* regress = app.add_subcommand("regress", "run the built-in golden corpus");
    regress->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (regress->parsed()) {
        char* out = nullptr;
        int eps = epsilon == "-1" ? -1 : 1;
        int code = covlat_regress(eps, format.c_str(), &out);
        if (out) {
            write_output(out, out_path);
            covlat_free(out);
        }
        return code;
    }

    for (auto& c : commands) {
        auto* sub = app.get_subcommand(c);
        if (!sub->parsed()) continue;
        bool ok = false;
        std::string text = read_file(spec_paths[c], ok);
        if (!ok) return fail(COVLAT_ERR_PARSE, "cannot read " + spec_paths[c]);
        char* err = nullptr;
        covlat_session* s = covlat_open(text.c_str(), &err);
        if (!s) {
            std::string msg = err ? err : "parse failure";
            covlat_free(err);
            return fail(COVLAT_ERR_PARSE, msg);
        }
        auto set = [&](const char* k, const std::string& v) {
            if (v.empty()) return true;
            if (covlat_set_option(s, k, v.c_str()) != COVLAT_OK) {
                fail(COVLAT_ERR_COMPUTE, covlat_error(s));
                return false;
            }
            return true;
        };
        if (!set("format", format) || !set("epsilon", epsilon) || !set("cap", cap) ||
            !set("partition", partition)) {
            covlat_close(s);
            return COVLAT_ERR_COMPUTE;
        }
        char* out = nullptr;
        int code = covlat_run(s, c.c_str(), &out);
        if (code != COVLAT_OK) {
            std::string msg = covlat_error(s);
            covlat_close(s);
            return fail(code, msg);
        }
        int wcode = write_output(out, out_path);
        covlat_free(out);
        covlat_close(s);
        if (wcode) return fail(COVLAT_ERR_COMPUTE, "cannot write " + out_path);
        return 0;
    }
    return fail(COVLAT_ERR_COMPUTE, "no command");
}

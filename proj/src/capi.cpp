#include "covlat.h"

#include "covlat/commands.hpp"
#include "covlat/regress.hpp"

#include <cstring>
#include <string>

using namespace covlat;

struct covlat_session {
    CoverSpec spec;
    RunOptions options;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(malloc(s.size() + 1));
    if (p) memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

}  // namespace

extern "C" {

unsigned covlat_abi_version(void) { return 1; }

covlat_session* covlat_open(const char* spec_text, char** err_out) {
    if (err_out) *err_out = nullptr;
    if (!spec_text) {
        if (err_out) *err_out = dup_string("null spec text");
        return nullptr;
    }
    try {
        auto* s = new covlat_session;
        s->spec = parse_cover_spec(spec_text);
        return s;
    } catch (parse_error& e) {
        if (err_out)
            *err_out = dup_string("parse error (line " + std::to_string(e.line) + "): " + e.what());
    } catch (std::exception& e) {
        if (err_out) *err_out = dup_string(e.what());
    }
    return nullptr;
}

void covlat_close(covlat_session* s) { delete s; }

int covlat_set_option(covlat_session* s, const char* key, const char* value) {
    if (!s || !key || !value) return COVLAT_ERR_COMPUTE;
    std::string k = key, v = value;
    try {
        if (k == "format") {
            if (v != "text" && v != "structured") throw compute_error("format must be text|structured");
            s->options.format = v;
        } else if (k == "epsilon") {
            long e = std::stol(v);
            if (e != 1 && e != -1) throw compute_error("epsilon must be +1 or -1");
            s->options.epsilon = int(e);
        } else if (k == "cap") {
            s->options.cap = Int(v);
        } else if (k == "partition") {
            std::vector<int> part;
            std::string cur;
            for (char ch : v + ",") {
                if (ch == ',' || ch == ';' || ch == ' ') {
                    if (!cur.empty()) {
                        part.push_back(std::stoi(cur));
                        cur.clear();
                    }
                } else {
                    cur += ch;
                }
            }
            s->options.partition = part;
        } else {
            throw compute_error("unknown option: " + k);
        }
    } catch (std::exception& e) {
        s->last_error = e.what();
        return COVLAT_ERR_COMPUTE;
    }
    return COVLAT_OK;
}

int covlat_run(covlat_session* s, const char* command, char** out) {
    if (out) *out = nullptr;
    if (!s || !command || !out) return COVLAT_ERR_COMPUTE;
    try {
        std::string text = run_command(command, s->spec, s->options);
        *out = dup_string(text);
        return COVLAT_OK;
    } catch (parse_error& e) {
        s->last_error = e.what();
        return COVLAT_ERR_PARSE;
    } catch (std::exception& e) {
        s->last_error = e.what();
        return COVLAT_ERR_COMPUTE;
    }
}

const char* covlat_error(const covlat_session* s) { return s ? s->last_error.c_str() : ""; }

int covlat_regress(int epsilon, const char* format, char** out) {
    if (out) *out = nullptr;
    try {
        RegressOutcome o = run_regress(epsilon == -1 ? -1 : 1);
        Report rep = regress_report(o);
        std::string fmt = format ? format : "text";
        if (out) *out = dup_string(render(rep, fmt));
        return o.ok() ? COVLAT_OK : COVLAT_ERR_REGRESS;
    } catch (std::exception& e) {
        if (out) *out = dup_string(std::string("regress error: ") + e.what() + "\n");
        return COVLAT_ERR_COMPUTE;
    }
}

void covlat_free(char* p) { free(p); }

}  // extern "C"

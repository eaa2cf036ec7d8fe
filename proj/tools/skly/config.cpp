// SPDX-License-Identifier: Apache-2.0
#include "config.hpp"

#include <cstdlib>
#include <fstream>

#include "skly/errors.hpp"
#include "util.hpp"

namespace skly::tool {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

void apply_config_env(RunConfig& cfg) {
    const char* path = std::getenv("SKLY_CONFIG");
    if (!path) return;
    std::ifstream in(path);
    if (!in) throw InvalidInput(std::string("cannot open SKLY_CONFIG file: ") + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw InvalidInput("SKLY_CONFIG line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        try {
            if (key == "tau")
                cfg.tau = parse_complex(val);
            else if (key == "tol")
                cfg.tol = std::stod(val);
            else if (key == "seed")
                cfg.seed = std::stoull(val);
            else if (key == "samples")
                cfg.samples = std::stoi(val);
            else if (key == "max_size")
                cfg.max_size = std::stoi(val);
            else if (key == "json")
                cfg.json = (val == "1" || val == "true" || val == "yes");
            else
                throw InvalidInput("SKLY_CONFIG line " + std::to_string(lineno) + ": unknown key '" +
                                   key + "'");
        } catch (const InvalidInput&) {
            throw;
        } catch (const std::exception&) {
            throw InvalidInput("SKLY_CONFIG line " + std::to_string(lineno) + ": bad value for '" +
                               key + "'");
        }
    }
}

} // namespace skly::tool

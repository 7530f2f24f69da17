#include "stit/config.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stit {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// strip a trailing comment that is not inside a quoted string
std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

// minimal TOML subset: [section] headers, key = value with quoted strings,
// booleans, numbers and flat numeric arrays
std::map<std::string, std::string> parse_toml(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("bad section header at line " +
                                         std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2)) + ".";
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("expected key = value at line " +
                                     std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::runtime_error("empty key or value at line " +
                                     std::to_string(lineno));
        kv[section + key] = val;
    }
    return kv;
}

std::string unquote(const std::string& v) {
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
        return v.substr(1, v.size() - 2);
    return v;
}

double to_number(const std::string& v) {
    size_t used = 0;
    double x = std::stod(v, &used);
    if (used != v.size()) throw std::runtime_error("bad number: " + v);
    return x;
}

std::vector<double> to_array(const std::string& v) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw std::runtime_error("expected array: " + v);
    std::vector<double> out;
    std::string body = v.substr(1, v.size() - 2);
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_number(item));
    }
    return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_toml(const std::string& text) {
    auto kv = parse_toml(text);
    ExperimentConfig c;
    std::set<std::string> seen;
    auto str = [&](const char* k, std::string& out) {
        seen.insert(k);
        auto it = kv.find(k);
        if (it != kv.end()) out = unquote(it->second);
    };
    auto num = [&](const char* k, auto& out) {
        seen.insert(k);
        auto it = kv.find(k);
        if (it != kv.end())
            out = static_cast<std::decay_t<decltype(out)>>(
                to_number(it->second));
    };
    auto arr = [&](const char* k, std::vector<double>& out) {
        seen.insert(k);
        auto it = kv.find(k);
        if (it != kv.end()) out = to_array(it->second);
    };
    auto flag = [&](const char* k, bool& out) {
        seen.insert(k);
        auto it = kv.find(k);
        if (it == kv.end()) return;
        if (it->second == "true") out = true;
        else if (it->second == "false") out = false;
        else throw std::runtime_error("expected boolean for " +
                                      std::string(k));
    };
    str("name", c.name);
    num("dim", c.dim);
    str("measure", c.measure);
    str("window", c.window);
    num("window_size", c.window_size);
    str("functional", c.functional);
    num("t", c.t);
    num("s0", c.s0);
    arr("time_grid", c.time_grid);
    arr("r_list", c.r_list);
    num("replications", c.replications);
    num("seed", c.seed);
    num("workers", c.workers);
    num("alpha", c.alpha);
    flag("dump_csv", c.dump_csv);
    str("out_dir", c.out_dir);
    num("integrator.n_points", c.integrator.n_points);
    num("integrator.shifts", c.integrator.shifts);
    num("integrator.singularity_shell", c.integrator.singularity_shell);
    flag("integrator.shell_correction", c.integrator.shell_correction);
    for (const auto& [k, v] : kv)
        if (!seen.count(k))
            throw std::runtime_error("unknown config key: " + k);
    c.validate();
    return c;
}

ExperimentConfig ExperimentConfig::from_toml_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_toml(buf.str());
}

void ExperimentConfig::validate() const {
    if (dim < 2 || dim > 3) throw std::runtime_error("dim must be 2 or 3");
    if (replications < 2) throw std::runtime_error("need replications >= 2");
    if (window_size <= 0) throw std::runtime_error("window_size must be > 0");
    if (t < 0) throw std::runtime_error("t must be >= 0");
    if (s0 <= 0) throw std::runtime_error("s0 must be > 0");
    if (workers < 1) throw std::runtime_error("workers must be >= 1");
    for (size_t i = 0; i + 1 < r_list.size(); ++i)
        if (r_list[i] >= r_list[i + 1])
            throw std::runtime_error("r_list must be strictly ascending");
    if (measure != "isotropic" && measure != "axis_aligned")
        throw std::runtime_error("unknown measure: " + measure);
    if (window != "box" && window != "ball")
        throw std::runtime_error("unknown window: " + window);
}

HyperplaneMeasureSpec ExperimentConfig::make_spec() const {
    if (measure == "axis_aligned") return HyperplaneMeasureSpec::axis_aligned(dim);
    return HyperplaneMeasureSpec::isotropic(dim);
}

ConvexPolytope ExperimentConfig::make_window() const {
    return make_window(1.0);
}

ConvexPolytope ExperimentConfig::make_window(double r) const {
    double size = window_size * r;
    if (window == "ball") {
        if (dim == 2) return ConvexPolytope::regular_polygon(256, size);
        return ConvexPolytope::icosphere(3, size);
    }
    Vec lo(dim), hi(dim);
    for (int i = 0; i < dim; ++i) hi[i] = size;
    return ConvexPolytope::box(lo, hi);
}

FaceFunctional ExperimentConfig::make_functional() const {
    return FaceFunctional::by_name(functional, dim);
}

}  // namespace stit

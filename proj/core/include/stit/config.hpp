#ifndef STIT_CONFIG_HPP
#define STIT_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stit/exact.hpp"
#include "stit/functionals.hpp"
#include "stit/measures.hpp"

namespace stit {

// experiment-level configuration, loadable from a small TOML subset
// (sections, key = value with strings, numbers, booleans and flat arrays)
struct ExperimentConfig {
    std::string name;
    int dim = 2;
    std::string measure = "isotropic";  // isotropic | axis_aligned
    std::string window = "box";         // box | ball
    double window_size = 1.0;           // box side length or ball radius
    std::string functional = "total_surface";
    double t = 1.0;
    double s0 = 0.5;
    std::vector<double> time_grid;  // checkpoint times in construction time
    std::vector<double> r_list;     // window dilation factors, ascending
    int replications = 1000;
    uint64_t seed = 1;
    int workers = 1;
    double alpha = 0.01;  // test level
    bool dump_csv = false;
    std::string out_dir;
    IntegratorConfig integrator;

    static ExperimentConfig from_toml(const std::string& text);
    static ExperimentConfig from_toml_file(const std::string& path);

    void validate() const;

    HyperplaneMeasureSpec make_spec() const;
    ConvexPolytope make_window() const;          // unit-size shape
    ConvexPolytope make_window(double r) const;  // dilated by r
    FaceFunctional make_functional() const;
};

}  // namespace stit

#endif

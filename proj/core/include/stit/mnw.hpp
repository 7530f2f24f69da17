#ifndef STIT_MNW_HPP
#define STIT_MNW_HPP

#include <queue>
#include <vector>

#include "stit/geometry.hpp"
#include "stit/measures.hpp"
#include "stit/rng.hpp"

namespace stit {

// One cell-separating facet created by a split event.
struct MaxPolytopeRecord {
    ConvexPolytope facet;  // intrinsic dim d-1, with carrier
    double birth_time;
    Vec normal;
    double measure;   // cached (d-1)-volume of the facet
    int parent_cell;  // index of the cell that split
};

// State of the MNW cell-division construction inside a window, up to a
// time horizon.  Carries its pending death queue so a run can be resumed.
class Tessellation {
  public:
    const ConvexPolytope& window() const { return window_; }
    const HyperplaneMeasureSpec& spec() const { return spec_; }
    double horizon() const { return horizon_; }
    const std::vector<ConvexPolytope>& cells() const { return cells_; }
    const std::vector<MaxPolytopeRecord>& maximal_polytopes() const {
        return max_polytopes_;
    }
    // degenerate hitting draws that were re-drawn
    long redraw_count() const { return redraws_; }

    double total_cell_volume() const;

  private:
    struct Pending {
        double death;
        int cell;
        bool operator>(const Pending& o) const { return death > o.death; }
    };

    ConvexPolytope window_;
    HyperplaneMeasureSpec spec_;
    double horizon_ = 0;
    std::vector<ConvexPolytope> cells_;
    std::vector<MaxPolytopeRecord> max_polytopes_;
    std::priority_queue<Pending, std::vector<Pending>, std::greater<Pending>>
        pending_;
    long redraws_ = 0;

    friend Tessellation run_mnw(const ConvexPolytope&,
                                const HyperplaneMeasureSpec&, double,
                                RngStream&);
    friend Tessellation continue_mnw(Tessellation, double, RngStream&);
    friend std::vector<Tessellation> run_with_checkpoints(
        const ConvexPolytope&, const HyperplaneMeasureSpec&,
        const std::vector<double>&, RngStream&);
    friend Tessellation rescale_tessellation(const Tessellation&, double);
    friend void advance_to(Tessellation&, double, RngStream&);
};

Tessellation run_mnw(const ConvexPolytope& window,
                     const HyperplaneMeasureSpec& spec, double horizon,
                     RngStream& rng);

Tessellation continue_mnw(Tessellation state, double new_horizon,
                          RngStream& rng);

std::vector<Tessellation> run_with_checkpoints(
    const ConvexPolytope& window, const HyperplaneMeasureSpec& spec,
    const std::vector<double>& times, RngStream& rng);

// scales all geometry by the factor; birth times are unchanged
Tessellation rescale_tessellation(const Tessellation& state, double factor);

}  // namespace stit

#endif

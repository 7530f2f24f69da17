#include "stit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace stit {

namespace {

// segment-capacity direction coefficient: E|<u,e>|/2 for u uniform on the
// sphere equals kappa_{d-1}/(d kappa_d); used for box mean widths
double unit_ball_volume(int d) {
    return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double direction_coefficient(int d) {
    return unit_ball_volume(d - 1) / (d * unit_ball_volume(d));
}

// orthonormal basis of the plane {<x,n>=c} in 3D
void plane_basis(const Vec& n, Vec& t1, Vec& t2) {
    Vec a = std::abs(n[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
    t1 = cross(n, a).normalized();
    t2 = cross(n, t1);
}

std::vector<Vec> order_planar_loop(std::vector<Vec> pts, const Hyperplane& h,
                                   double merge_tol) {
    Vec t1, t2;
    plane_basis(h.normal, t1, t2);
    Vec c(3);
    for (const Vec& p : pts) c += p;
    c *= 1.0 / static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
        return std::atan2(dot(a - c, t2), dot(a - c, t1)) <
               std::atan2(dot(b - c, t2), dot(b - c, t1));
    });
    std::vector<Vec> out;
    for (const Vec& p : pts) {
        if (out.empty() || distance(out.back(), p) > merge_tol) out.push_back(p);
    }
    if (out.size() > 2 && distance(out.front(), out.back()) <= merge_tol)
        out.pop_back();
    return out;
}

}  // namespace

int Hyperplane::axis_index(double tol) const {
    int best = 0;
    for (int i = 1; i < normal.dim; ++i)
        if (std::abs(normal[i]) > std::abs(normal[best])) best = i;
    return std::abs(std::abs(normal[best]) - 1.0) < tol ? best : -1;
}

double polygon_area(const std::vector<Vec>& loop) {
    double a = 0;
    for (size_t i = 0; i < loop.size(); ++i) {
        const Vec& p = loop[i];
        const Vec& q = loop[(i + 1) % loop.size()];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * a;
}

double planar_polygon_area(const std::vector<Vec>& loop) {
    Vec n(3);
    for (size_t i = 0; i < loop.size(); ++i) {
        const Vec& p = loop[i];
        const Vec& q = loop[(i + 1) % loop.size()];
        n += cross(p, q);
    }
    return 0.5 * n.norm();
}

ConvexPolytope ConvexPolytope::box(const Vec& lo, const Vec& hi) {
    ConvexPolytope p;
    p.kind_ = Kind::Box;
    p.ambient_dim_ = lo.dim;
    p.intrinsic_dim_ = lo.dim;
    p.box_lo_ = lo;
    p.box_hi_ = hi;
    return p;
}

ConvexPolytope ConvexPolytope::polygon(std::vector<Vec> loop) {
    if (polygon_area(loop) < 0) std::reverse(loop.begin(), loop.end());
    ConvexPolytope p;
    p.kind_ = Kind::Polygon2;
    p.ambient_dim_ = 2;
    p.intrinsic_dim_ = 2;
    p.vertices_ = std::move(loop);
    return p;
}

ConvexPolytope ConvexPolytope::polyhedron(std::vector<Vec> vertices,
                                          std::vector<std::vector<int>> faces) {
    ConvexPolytope p;
    p.kind_ = Kind::Polyhedron3;
    p.ambient_dim_ = 3;
    p.intrinsic_dim_ = 3;
    p.vertices_ = std::move(vertices);
    p.faces_ = std::move(faces);
    return p;
}

ConvexPolytope ConvexPolytope::segment(const Vec& a, const Vec& b,
                                       const Hyperplane& carrier) {
    ConvexPolytope p;
    p.kind_ = Kind::Segment;
    p.ambient_dim_ = a.dim;
    p.intrinsic_dim_ = 1;
    p.vertices_ = {a, b};
    p.carrier_ = carrier;
    p.has_carrier_ = true;
    return p;
}

ConvexPolytope ConvexPolytope::planar_facet(std::vector<Vec> loop,
                                            const Hyperplane& carrier) {
    ConvexPolytope p;
    p.kind_ = Kind::Facet3;
    p.ambient_dim_ = 3;
    p.intrinsic_dim_ = 2;
    p.vertices_ = std::move(loop);
    p.carrier_ = carrier;
    p.has_carrier_ = true;
    return p;
}

ConvexPolytope ConvexPolytope::box_facet(const Vec& lo, const Vec& hi,
                                         int flat_axis,
                                         const Hyperplane& carrier) {
    ConvexPolytope p;
    p.kind_ = Kind::BoxFacet;
    p.ambient_dim_ = lo.dim;
    p.intrinsic_dim_ = lo.dim - 1;
    p.box_lo_ = lo;
    p.box_hi_ = hi;
    p.flat_axis_ = flat_axis;
    p.carrier_ = carrier;
    p.has_carrier_ = true;
    return p;
}

ConvexPolytope ConvexPolytope::regular_polygon(int n, double radius) {
    std::vector<Vec> loop;
    loop.reserve(n);
    for (int k = 0; k < n; ++k) {
        double a = 2.0 * M_PI * k / n;
        loop.push_back(Vec{radius * std::cos(a), radius * std::sin(a)});
    }
    return polygon(std::move(loop));
}

ConvexPolytope ConvexPolytope::icosphere(int subdivisions, double radius) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec> v = {
        {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
    std::vector<std::vector<int>> f = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    for (int it = 0; it < subdivisions; ++it) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto found = midpoint.find(key);
            if (found != midpoint.end()) return found->second;
            v.push_back(((v[a] + v[b]) * 0.5).normalized() *
                        v[a].norm());  // keep on current shell
            midpoint[key] = static_cast<int>(v.size()) - 1;
            return midpoint[key];
        };
        std::vector<std::vector<int>> nf;
        for (const auto& tri : f) {
            int a = tri[0], b = tri[1], c = tri[2];
            int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
            nf.push_back({a, ab, ca});
            nf.push_back({b, bc, ab});
            nf.push_back({c, ca, bc});
            nf.push_back({ab, bc, ca});
        }
        f = std::move(nf);
    }
    for (Vec& p : v) p = p.normalized() * radius;
    return polyhedron(std::move(v), std::move(f));
}

const Hyperplane& ConvexPolytope::carrier() const {
    if (!has_carrier_) throw std::runtime_error("polytope has no carrier");
    return carrier_;
}

double ConvexPolytope::support(const Vec& u) const {
    if (kind_ == Kind::Box || kind_ == Kind::BoxFacet) {
        double s = 0;
        for (int i = 0; i < ambient_dim_; ++i)
            s += u[i] * (u[i] > 0 ? box_hi_[i] : box_lo_[i]);
        return s;
    }
    if (vertices_.empty()) throw std::runtime_error("empty polytope");
    double best = dot(vertices_[0], u);
    for (size_t i = 1; i < vertices_.size(); ++i)
        best = std::max(best, dot(vertices_[i], u));
    return best;
}

double ConvexPolytope::extent(int axis) const {
    if (kind_ == Kind::Box || kind_ == Kind::BoxFacet)
        return box_hi_[axis] - box_lo_[axis];
    return width(unit_axis(ambient_dim_, axis));
}

double ConvexPolytope::volume() const {
    switch (kind_) {
        case Kind::Box: {
            double v = 1;
            for (int i = 0; i < ambient_dim_; ++i)
                v *= box_hi_[i] - box_lo_[i];
            return std::max(0.0, v);
        }
        case Kind::BoxFacet: {
            double v = 1;
            for (int i = 0; i < ambient_dim_; ++i)
                if (i != flat_axis_) v *= box_hi_[i] - box_lo_[i];
            return std::max(0.0, v);
        }
        case Kind::Polygon2:
            return vertices_.size() < 3 ? 0.0 : std::abs(polygon_area(vertices_));
        case Kind::Segment:
            return distance(vertices_[0], vertices_[1]);
        case Kind::Facet3:
            return vertices_.size() < 3 ? 0.0
                                        : planar_polygon_area(vertices_);
        case Kind::Polyhedron3: {
            // divergence theorem about the vertex centroid
            Vec c = centroid();
            const auto& planes = face_planes();
            double v = 0;
            for (size_t fi = 0; fi < faces_.size(); ++fi) {
                std::vector<Vec> loop;
                loop.reserve(faces_[fi].size());
                for (int id : faces_[fi]) loop.push_back(vertices_[id] - c);
                double area = planar_polygon_area(loop);
                v += area * (dot(planes[fi].normal, vertices_[faces_[fi][0]]) -
                             dot(planes[fi].normal, c));
            }
            return std::max(0.0, v / 3.0);
        }
    }
    return 0;
}

double ConvexPolytope::diameter() const {
    if (kind_ == Kind::Box || kind_ == Kind::BoxFacet)
        return (box_hi_ - box_lo_).norm();
    double best = 0;
    for (size_t i = 0; i < vertices_.size(); ++i)
        for (size_t j = i + 1; j < vertices_.size(); ++j)
            best = std::max(best, distance(vertices_[i], vertices_[j]));
    return best;
}

double ConvexPolytope::mean_width() const {
    switch (kind_) {
        case Kind::Box:
        case Kind::BoxFacet: {
            double s = 0;
            for (int i = 0; i < ambient_dim_; ++i)
                s += box_hi_[i] - box_lo_[i];
            return 2.0 * direction_coefficient(ambient_dim_) * s;
        }
        case Kind::Polygon2: {
            double per = 0;
            for (size_t i = 0; i < vertices_.size(); ++i)
                per += distance(vertices_[i],
                                vertices_[(i + 1) % vertices_.size()]);
            return per / M_PI;
        }
        case Kind::Segment: {
            double len = distance(vertices_[0], vertices_[1]);
            return ambient_dim_ == 2 ? 2.0 * len / M_PI : len / 2.0;
        }
        case Kind::Facet3: {
            double per = 0;
            for (size_t i = 0; i < vertices_.size(); ++i)
                per += distance(vertices_[i],
                                vertices_[(i + 1) % vertices_.size()]);
            return per / 4.0;
        }
        case Kind::Polyhedron3: {
            // sum of edge length times exterior dihedral angle over 4 pi
            const auto& planes = face_planes();
            std::map<std::pair<int, int>, std::vector<int>> edge_faces;
            for (size_t fi = 0; fi < faces_.size(); ++fi) {
                const auto& loop = faces_[fi];
                for (size_t k = 0; k < loop.size(); ++k) {
                    auto key = std::minmax(loop[k], loop[(k + 1) % loop.size()]);
                    edge_faces[key].push_back(static_cast<int>(fi));
                }
            }
            double s = 0;
            for (const auto& [edge, fs] : edge_faces) {
                if (fs.size() != 2) continue;
                double cosang = std::clamp(
                    dot(planes[fs[0]].normal, planes[fs[1]].normal), -1.0, 1.0);
                s += distance(vertices_[edge.first], vertices_[edge.second]) *
                     std::acos(cosang);
            }
            return s / (4.0 * M_PI);
        }
    }
    return 0;
}

Vec ConvexPolytope::centroid() const {
    if (kind_ == Kind::Box || kind_ == Kind::BoxFacet)
        return (box_lo_ + box_hi_) * 0.5;
    Vec c(ambient_dim_);
    for (const Vec& v : vertices_) c += v;
    return c * (1.0 / static_cast<double>(vertices_.size()));
}

bool ConvexPolytope::contains(const Vec& x, double tol) const {
    switch (kind_) {
        case Kind::Box:
            for (int i = 0; i < ambient_dim_; ++i)
                if (x[i] < box_lo_[i] - tol || x[i] > box_hi_[i] + tol)
                    return false;
            return true;
        case Kind::Polygon2:
            for (size_t i = 0; i < vertices_.size(); ++i) {
                const Vec& a = vertices_[i];
                const Vec& b = vertices_[(i + 1) % vertices_.size()];
                double crossz =
                    (b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]);
                if (crossz < -tol * distance(a, b)) return false;
            }
            return true;
        case Kind::Polyhedron3:
            for (const Hyperplane& h : face_planes())
                if (h.side(x) > tol) return false;
            return true;
        default:
            throw std::runtime_error("contains: unsupported for facets");
    }
}

const std::vector<Hyperplane>& ConvexPolytope::face_planes() const {
    if (!face_planes_cache_.empty() ||
        kind_ != Kind::Polyhedron3)
        return face_planes_cache_;
    face_planes_cache_.reserve(faces_.size());
    for (const auto& loop : faces_) {
        Vec n(3);
        for (size_t k = 0; k < loop.size(); ++k)
            n += cross(vertices_[loop[k]], vertices_[loop[(k + 1) % loop.size()]]);
        n = n.normalized();
        Vec fc(3);
        for (int id : loop) fc += vertices_[id];
        fc *= 1.0 / static_cast<double>(loop.size());
        double off = dot(n, fc);
        // orient outward: the face must be supporting
        double worst = 0;
        for (const Vec& v : vertices_) worst = std::max(worst, dot(n, v) - off);
        double worst_neg = 0;
        for (const Vec& v : vertices_)
            worst_neg = std::max(worst_neg, off - dot(n, v));
        if (worst > worst_neg) {
            n *= -1.0;
            off = -off;
        }
        face_planes_cache_.push_back(Hyperplane{n, off});
    }
    return face_planes_cache_;
}

std::vector<std::pair<int, int>> ConvexPolytope::edge_list() const {
    std::map<std::pair<int, int>, bool> seen;
    for (const auto& loop : faces_)
        for (size_t k = 0; k < loop.size(); ++k)
            seen[std::minmax(loop[k], loop[(k + 1) % loop.size()])] = true;
    std::vector<std::pair<int, int>> out;
    out.reserve(seen.size());
    for (const auto& [e, _] : seen) out.push_back(e);
    return out;
}

ConvexPolytope ConvexPolytope::to_explicit() const {
    if (kind_ != Kind::Box) return *this;
    if (ambient_dim_ == 2) {
        return polygon({Vec{box_lo_[0], box_lo_[1]}, Vec{box_hi_[0], box_lo_[1]},
                        Vec{box_hi_[0], box_hi_[1]},
                        Vec{box_lo_[0], box_hi_[1]}});
    }
    if (ambient_dim_ == 3) {
        std::vector<Vec> v;
        for (int k = 0; k < 8; ++k)
            v.push_back(Vec{k & 1 ? box_hi_[0] : box_lo_[0],
                            k & 2 ? box_hi_[1] : box_lo_[1],
                            k & 4 ? box_hi_[2] : box_lo_[2]});
        std::vector<std::vector<int>> f = {{0, 2, 3, 1}, {4, 5, 7, 6},
                                           {0, 1, 5, 4}, {2, 6, 7, 3},
                                           {0, 4, 6, 2}, {1, 3, 7, 5}};
        return polyhedron(std::move(v), std::move(f));
    }
    throw std::runtime_error("explicit combinatorics only for d<=3");
}

SplitResult ConvexPolytope::split(const Hyperplane& h) const {
    switch (kind_) {
        case Kind::Box: {
            int axis = h.axis_index();
            if (axis >= 0) return split_box(h, axis);
            return to_explicit().split(h);
        }
        case Kind::Polygon2:
            return split_polygon(h);
        case Kind::Polyhedron3:
            return split_polyhedron(h);
        default:
            throw std::runtime_error("split: cells only");
    }
}

SplitResult ConvexPolytope::split_box(const Hyperplane& h,
                                                      int axis) const {
    double a = h.normal[axis] > 0 ? h.offset : -h.offset;
    if (a <= box_lo_[axis] + kSnapTol || a >= box_hi_[axis] - kSnapTol)
        throw NonSplittingError();
    Vec mid_hi = box_hi_, mid_lo = box_lo_;
    mid_hi[axis] = a;
    mid_lo[axis] = a;
    ConvexPolytope lower = box(box_lo_, mid_hi);
    ConvexPolytope upper = box(mid_lo, box_hi_);
    SplitResult r;
    r.interface = box_facet(mid_lo, mid_hi, axis, h);
    if (h.normal[axis] > 0) {
        r.plus = std::move(upper);
        r.minus = std::move(lower);
    } else {
        r.plus = std::move(lower);
        r.minus = std::move(upper);
    }
    return r;
}

SplitResult ConvexPolytope::split_polygon(
    const Hyperplane& h) const {
    const size_t n = vertices_.size();
    std::vector<Vec> v(vertices_);
    std::vector<double> s(n);
    bool any_pos = false, any_neg = false;
    for (size_t i = 0; i < n; ++i) {
        s[i] = h.side(v[i]);
        if (std::abs(s[i]) < kSnapTol) {
            v[i] -= s[i] * h.normal;
            s[i] = 0;
        } else {
            (s[i] > 0 ? any_pos : any_neg) = true;
        }
    }
    if (!any_pos || !any_neg) throw NonSplittingError();

    std::vector<Vec> plus, minus, cut;
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        if (s[i] >= 0) plus.push_back(v[i]);
        if (s[i] <= 0) minus.push_back(v[i]);
        if (s[i] == 0) cut.push_back(v[i]);
        if (s[i] * s[j] < 0) {
            Vec p = v[i] + (s[i] / (s[i] - s[j])) * (v[j] - v[i]);
            plus.push_back(p);
            minus.push_back(p);
            cut.push_back(p);
        }
    }
    // interface is the chord between the two extreme on-plane points
    Vec t{-h.normal[1], h.normal[0]};
    auto [pmin, pmax] = std::minmax_element(
        cut.begin(), cut.end(),
        [&](const Vec& a, const Vec& b) { return dot(t, a) < dot(t, b); });
    if (cut.size() < 2 || distance(*pmin, *pmax) < kSnapTol)
        throw NonSplittingError();
    if (plus.size() < 3 || minus.size() < 3) throw NonSplittingError();
    SplitResult r;
    r.plus = polygon(std::move(plus));
    r.minus = polygon(std::move(minus));
    r.interface = segment(*pmin, *pmax, h);
    return r;
}

SplitResult ConvexPolytope::split_polyhedron(
    const Hyperplane& h) const {
    const size_t n = vertices_.size();
    std::vector<Vec> pool(vertices_);
    std::vector<double> s(n);
    bool any_pos = false, any_neg = false;
    for (size_t i = 0; i < n; ++i) {
        s[i] = h.side(pool[i]);
        if (std::abs(s[i]) < kSnapTol) {
            pool[i] -= s[i] * h.normal;
            s[i] = 0;
        } else {
            (s[i] > 0 ? any_pos : any_neg) = true;
        }
    }
    if (!any_pos || !any_neg) throw NonSplittingError();

    std::map<std::pair<int, int>, int> crossing;
    auto cross_id = [&](int i, int j) {
        auto key = std::minmax(i, j);
        auto found = crossing.find(key);
        if (found != crossing.end()) return found->second;
        Vec p = pool[i] + (s[i] / (s[i] - s[j])) * (pool[j] - pool[i]);
        pool.push_back(p);
        s.push_back(0);
        crossing[key] = static_cast<int>(pool.size()) - 1;
        return crossing[key];
    };

    std::vector<std::vector<int>> plus_faces, minus_faces;
    std::vector<int> cap_ids;
    for (const auto& loop : faces_) {
        std::vector<int> pl, mi;
        for (size_t k = 0; k < loop.size(); ++k) {
            int i = loop[k], j = loop[(k + 1) % loop.size()];
            if (s[i] >= 0) pl.push_back(i);
            if (s[i] <= 0) mi.push_back(i);
            if (s[i] == 0) cap_ids.push_back(i);
            if (s[i] * s[j] < 0) {
                int c = cross_id(i, j);
                pl.push_back(c);
                mi.push_back(c);
                cap_ids.push_back(c);
            }
        }
        auto all_on_plane = [&](const std::vector<int>& f) {
            for (int id : f)
                if (s[id] != 0) return false;
            return true;
        };
        if (pl.size() >= 3 && !all_on_plane(pl)) plus_faces.push_back(pl);
        if (mi.size() >= 3 && !all_on_plane(mi)) minus_faces.push_back(mi);
    }

    std::sort(cap_ids.begin(), cap_ids.end());
    cap_ids.erase(std::unique(cap_ids.begin(), cap_ids.end()), cap_ids.end());
    std::vector<Vec> cap_pts;
    for (int id : cap_ids) cap_pts.push_back(pool[id]);
    std::vector<Vec> cap = order_planar_loop(std::move(cap_pts), h, kSnapTol);
    if (cap.size() < 3 || planar_polygon_area(cap) < kSnapTol * kSnapTol)
        throw NonSplittingError();

    // the cap polygon closes both halves; reuse its ordered points
    std::vector<int> cap_loop_ids;
    for (const Vec& p : cap) {
        int best = cap_ids[0];
        double bestd = distance(pool[cap_ids[0]], p);
        for (int id : cap_ids) {
            double dd = distance(pool[id], p);
            if (dd < bestd) {
                bestd = dd;
                best = id;
            }
        }
        cap_loop_ids.push_back(best);
    }
    plus_faces.push_back(cap_loop_ids);
    minus_faces.push_back(cap_loop_ids);

    auto build_side = [&](const std::vector<std::vector<int>>& faces_in) {
        std::vector<int> remap(pool.size(), -1);
        std::vector<Vec> verts;
        std::vector<std::vector<int>> faces_out;
        for (const auto& loop : faces_in) {
            std::vector<int> out;
            for (int id : loop) {
                if (remap[id] < 0) {
                    remap[id] = static_cast<int>(verts.size());
                    verts.push_back(pool[id]);
                }
                if (out.empty() || out.back() != remap[id]) out.push_back(remap[id]);
            }
            while (out.size() > 1 && out.front() == out.back()) out.pop_back();
            if (out.size() >= 3) faces_out.push_back(std::move(out));
        }
        if (verts.size() < 4 || faces_out.size() < 4) throw NonSplittingError();
        return polyhedron(std::move(verts), std::move(faces_out));
    };

    SplitResult r;
    r.plus = build_side(plus_faces);
    r.minus = build_side(minus_faces);
    r.interface = planar_facet(std::move(cap), h);
    return r;
}

std::optional<ConvexPolytope> ConvexPolytope::intersect_with_hyperplane(
    const Hyperplane& h) const {
    switch (kind_) {
        case Kind::Box: {
            int axis = h.axis_index();
            if (axis < 0) return to_explicit().intersect_with_hyperplane(h);
            double a = h.normal[axis] > 0 ? h.offset : -h.offset;
            if (a <= box_lo_[axis] + kSnapTol || a >= box_hi_[axis] - kSnapTol)
                return std::nullopt;
            Vec lo = box_lo_, hi = box_hi_;
            lo[axis] = a;
            hi[axis] = a;
            return box_facet(lo, hi, axis, h);
        }
        case Kind::Polygon2: {
            const size_t n = vertices_.size();
            std::vector<Vec> pts;
            for (size_t i = 0; i < n; ++i) {
                const Vec& a = vertices_[i];
                const Vec& b = vertices_[(i + 1) % n];
                double sa = h.side(a), sb = h.side(b);
                if (std::abs(sa) < kSnapTol) pts.push_back(a - sa * h.normal);
                else if (sa * sb < 0)
                    pts.push_back(a + (sa / (sa - sb)) * (b - a));
            }
            if (pts.size() < 2) return std::nullopt;
            Vec t{-h.normal[1], h.normal[0]};
            auto [pmin, pmax] = std::minmax_element(
                pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
                    return dot(t, a) < dot(t, b);
                });
            if (distance(*pmin, *pmax) < kSnapTol) return std::nullopt;
            return segment(*pmin, *pmax, h);
        }
        case Kind::Polyhedron3: {
            std::vector<Vec> pts;
            std::vector<double> s(vertices_.size());
            for (size_t i = 0; i < vertices_.size(); ++i) s[i] = h.side(vertices_[i]);
            for (auto [i, j] : edge_list()) {
                if (std::abs(s[i]) < kSnapTol)
                    pts.push_back(vertices_[i] - s[i] * h.normal);
                if (s[i] * s[j] < 0 && std::abs(s[i]) >= kSnapTol &&
                    std::abs(s[j]) >= kSnapTol)
                    pts.push_back(vertices_[i] +
                                  (s[i] / (s[i] - s[j])) * (vertices_[j] - vertices_[i]));
            }
            if (pts.size() < 3) return std::nullopt;
            std::vector<Vec> loop = order_planar_loop(std::move(pts), h, kSnapTol);
            if (loop.size() < 3 ||
                planar_polygon_area(loop) < kSnapTol)
                return std::nullopt;
            return planar_facet(std::move(loop), h);
        }
        default:
            throw std::runtime_error("intersect: cells only");
    }
}

ConvexPolytope ConvexPolytope::scaled(double factor) const {
    if (factor <= 0) throw std::runtime_error("scale factor must be positive");
    ConvexPolytope p = *this;
    for (Vec& v : p.vertices_) v *= factor;
    p.box_lo_ *= factor;
    p.box_hi_ *= factor;
    if (p.has_carrier_) p.carrier_.offset *= factor;
    p.face_planes_cache_.clear();
    return p;
}

ConvexPolytope ConvexPolytope::translated(const Vec& shift) const {
    ConvexPolytope p = *this;
    for (Vec& v : p.vertices_) v += shift;
    p.box_lo_ += shift;
    p.box_hi_ += shift;
    if (p.has_carrier_) p.carrier_.offset += dot(p.carrier_.normal, shift);
    p.face_planes_cache_.clear();
    return p;
}

}  // namespace stit

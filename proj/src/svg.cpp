#include "enpg/svg.hpp"

#include <set>
#include <sstream>

namespace enpg {

std::string render_svg(const Representation& rep) {
    const double cell = 40.0, margin = 30.0;
    BoundingBox box = rep.bounds();
    auto px = [&](std::int64_t x) { return margin + cell * static_cast<double>(x - box.lo.x); };
    auto py = [&](std::int64_t y) { return margin + cell * static_cast<double>(box.hi.y - y); };
    double width = 2 * margin + cell * static_cast<double>(box.hi.x - box.lo.x);
    double height = 2 * margin + cell * static_cast<double>(box.hi.y - box.lo.y);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::int64_t x = box.lo.x; x <= box.hi.x; ++x)
        for (std::int64_t y = box.lo.y; y <= box.hi.y; ++y)
            out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
                << "\" r=\"1.5\" fill=\"#cccccc\"/>\n";

    // split points across all pairs
    std::set<GridPoint> splits;
    std::vector<Label> labels;
    for (const auto& [v, p] : rep.paths()) labels.push_back(v);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            PathRelation rel = path_relation(rep.path(labels[i]), rep.path(labels[j]));
            if (rel.kind == RelationKind::Splitting)
                for (const auto& p : rel.split_points) splits.insert(p);
        }

    int idx = 0;
    const int n = static_cast<int>(labels.size());
    for (const auto& v : labels) {
        int hue = n ? (360 * idx) / n : 0;
        double off = 6.0 * (static_cast<double>(idx) / std::max(1, n) - 0.5);
        std::ostringstream pts;
        const LatticePath& p = rep.path(v);
        for (const auto& q : p.points())
            pts << px(q.x) + off << "," << py(q.y) + off << " ";
        out << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"hsl(" << hue
            << ",70%,45%)\" stroke-width=\"2.5\" stroke-linecap=\"round\"><title>" << v
            << "</title></polyline>\n";
        for (const auto& b : path_bends(p).bend_points)
            out << "<circle cx=\"" << px(b.x) + off << "\" cy=\"" << py(b.y) + off
                << "\" r=\"4\" fill=\"hsl(" << hue << ",70%,45%)\"/>\n";
        ++idx;
    }

    for (const auto& s : splits) {
        double cx = px(s.x), cy = py(s.y);
        out << "<path d=\"M " << cx - 6 << " " << cy - 6 << " L " << cx + 6 << " " << cy + 6
            << " M " << cx - 6 << " " << cy + 6 << " L " << cx + 6 << " " << cy - 6
            << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace enpg

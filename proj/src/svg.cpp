#include "kjnn/svg.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace kjnn {

void RenderOptions::validate() const {
    if (!(canvas > 0.0) || !(node_radius > 0.0) || !(stroke_width > 0.0) || margin < 0.0) {
        throw std::invalid_argument("render dimensions must be positive");
    }
}

namespace {

std::string num(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
    return buffer;
}

}  // namespace

std::string render_svg(const PointCloud& cloud, const UndirectedGraph& graph,
                       const RenderOptions& options) {
    options.validate();
    if (cloud.size() != graph.node_count()) {
        throw std::invalid_argument("cloud and graph disagree on node count");
    }

    const double side = options.canvas + 2.0 * options.margin;
    // Unit square -> canvas pixels, y flipped into screen coordinates.
    const auto px = [&](double x) { return options.margin + x * options.canvas; };
    const auto py = [&](double y) { return options.margin + (1.0 - y) * options.canvas; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(side) + "\" height=\"" +
           num(side) + "\" viewBox=\"0 0 " + num(side) + " " + num(side) + "\">\n";

    // Edges first so nodes render on top of them.
    for (const auto& [u, v] : graph.edges()) {
        out += "  <line x1=\"" + num(px(cloud[u].x)) + "\" y1=\"" + num(py(cloud[u].y)) +
               "\" x2=\"" + num(px(cloud[v].x)) + "\" y2=\"" + num(py(cloud[v].y)) +
               "\" stroke=\"" + options.edge_stroke + "\" stroke-width=\"" +
               num(options.stroke_width) + "\"/>\n";
    }
    for (NodeId u = 0; u < cloud.size(); ++u) {
        out += "  <circle cx=\"" + num(px(cloud[u].x)) + "\" cy=\"" + num(py(cloud[u].y)) +
               "\" r=\"" + num(options.node_radius) + "\" fill=\"" + options.node_fill +
               "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace kjnn

#pragma once

#include <string>

#include "kjnn/geometry.hpp"
#include "kjnn/graph.hpp"

namespace kjnn {

struct RenderOptions {
    double canvas = 640.0;        // drawing area for the unit square, px
    double margin = 20.0;         // border around the drawing area, px
    double node_radius = 4.0;     // px
    double stroke_width = 1.0;    // edge width, px
    std::string node_fill = "#1d4ed8";
    std::string edge_stroke = "#9ca3af";

    // Throws std::invalid_argument on non-positive dimensions.
    void validate() const;
};

// Renders the cloud and its graph as a standalone SVG document.  The unit
// square maps to the canvas with the y-axis flipped (screen coordinates);
// edges are emitted first, then nodes, so nodes draw on top.  Output is
// deterministic: identical inputs give byte-identical documents.  The cloud
// and graph must agree on n.
std::string render_svg(const PointCloud& cloud, const UndirectedGraph& graph,
                       const RenderOptions& options = {});

}  // namespace kjnn

#pragma once

#include <utility>
#include <vector>

#include "kjnn/geometry.hpp"

namespace kjnn::test {

// Four collinear nodes with hand-checkable pairwise distances:
//   0:A=(0,0)  1:B=(0.1,0)  2:C=(0.25,0)  3:D=(0.6,0)
// d(A,B)=0.1  d(A,C)=0.25  d(A,D)=0.6  d(B,C)=0.15  d(B,D)=0.5  d(C,D)=0.35
inline PointCloud p4() {
    return PointCloud({{0.0, 0.0}, {0.1, 0.0}, {0.25, 0.0}, {0.6, 0.0}});
}

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

}  // namespace kjnn::test

#pragma once

namespace kjnn {

// Full command-line surface (argv[0] is the program name):
//
//   run    --topology {sym-knn|kj-nn|rgg|kj-nn-rgg} --k K --j J
//          --n N|START:STOP:STEP --trials T --seed S [--r R | --sigma SG]
//          --out FILE [--format {csv|json}] [--hist-out FILE]
//   draw   --topology ... --k K --j J --n N --seed S [--r R | --sigma SG]
//          --out FILE [--canvas PX] [--node-radius PX] [--stroke-width PX]
//          [--node-fill COLOR] [--edge-stroke COLOR]
//   radius --k K --sigma SG --n N|START:STOP:STEP
//   gain   BASE.csv REDUCED.csv
//
// Returns 0 on success, 2 on argument errors (unknown flags, malformed
// values, invalid parameter combinations), 1 on runtime errors (I/O and the
// like).  The KJNN_THREADS environment variable caps trial parallelism
// (0 or unset = auto).
int cli_run(int argc, const char* const* argv);

}  // namespace kjnn

#pragma once

#include <string>

#include "nlogic/frame.hpp"

namespace nlogic {

// Line-oriented frame format:
//   sort1: x0 x1
//   sortD: y0 y1          (alias: sort∂:)
//   I: (x0,y0) (x1,y1)
//   U: x0 x1 | all
//   T: (y0|x0,y0) ...     output point | argument points
//   R: (x0|x0,x1) ...
//   S: (y0|y0,x0) ...
//   class: LK             optional declared class tag
SortedFrame parse_frame_text(const std::string& text);
SortedFrame load_frame_file(const std::string& path);
std::string frame_to_text(const SortedFrame& f);

}  // namespace nlogic

#include "adkit/identities.hpp"

namespace adkit {

const char* identity_text(int id) {
  switch (id) {
  case 1: return "(x|>y)<|z = x|>(y<|z)";
  case 2: return "x|>(y|>z) = -(x.y)|>z";
  case 3: return "x|>(y|>z) = -x<|(y.z)";
  case 4: return "x|>(y|>z) = (x<|y)<|z";
  case 5: return "(x.y)|>z = x<|(y.z)";
  case 6: return "-(x.y)|>z = (x<|y)<|z";
  case 7: return "-x<|(y.z) = (x<|y)<|z";
  default: throw std::out_of_range("identity id must be in 1..7");
  }
}

} // namespace adkit

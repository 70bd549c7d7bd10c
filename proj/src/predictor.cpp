#include "signmotif/predictor.hpp"

namespace signmotif {

std::optional<Predictor> predictor_from_label(std::string_view label) {
  for (Predictor p : catalog()) {
    if (label == predictor_label(p)) return p;
  }
  if (label.size() == 2 && (label[0] == 'S' || label[0] == 's')) {
    const int idx = label[1] - '0';
    for (Predictor p : catalog()) {
      if (default_s_index(p) == idx) return p;
    }
  }
  return std::nullopt;
}

}  // namespace signmotif

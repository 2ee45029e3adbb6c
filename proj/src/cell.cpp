#include "tcell/cell.hpp"

#include <sstream>

namespace tcell {

bool operator==(const Cell& a, const Cell& b) {
  return a.dom == b.dom && a.mid == b.mid && a.cod == b.cod;
}

nlohmann::ordered_json cell_to_json(const Cell& c) {
  nlohmann::ordered_json j;
  j["src"] = c.src() ? c.src()->name : "?";
  j["tgt"] = c.tgt() ? c.tgt()->name : "?";
  j["dom"] = c.dom.images;
  j["t"] = c.mid.images;
  j["cod"] = c.cod.images;
  return j;
}

static void print_images(std::ostringstream& os, const std::vector<int>& v) {
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
}

std::string cell_to_string(const Cell& c) {
  std::ostringstream os;
  os << '[';
  print_images(os, c.dom.images);
  os << " | ";
  print_images(os, c.mid.images);
  os << " | ";
  print_images(os, c.cod.images);
  os << ']';
  return os.str();
}

}  // namespace tcell

#include "chev/model.hpp"

#include "chev/error.hpp"

namespace chev {

GroupModel::GroupModel(Family f, int block) : family(f), n(block) {
  if (block < 2) throw Error("model block size n must be at least 2, got " + std::to_string(block));
  field = f == Family::SLC ? Field::Gaussian : Field::Rational;
}

GroupModel GroupModel::with_field(Field f) const {
  GroupModel m = *this;
  m.field = f;
  return m;
}

std::string GroupModel::name() const {
  switch (family) {
    case Family::Sp: return "Sp(" + std::to_string(2 * n) + ",R)";
    case Family::SLR: return "SL(" + std::to_string(2 * n) + ",R)";
    case Family::SLC: return "SL(" + std::to_string(2 * n) + ",C)";
    case Family::SLStd: return "SL(" + std::to_string(2 * n) + ") standard";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "sp") return Family::Sp;
  if (text == "sl-r") return Family::SLR;
  if (text == "sl-c") return Family::SLC;
  if (text == "sl-std") return Family::SLStd;
  throw ParseError("unknown model '" + std::string(text) + "' (expected sp, sl-r, sl-c, sl-std)");
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Sp: return "sp";
    case Family::SLR: return "sl-r";
    case Family::SLC: return "sl-c";
    case Family::SLStd: return "sl-std";
  }
  return "?";
}

}  // namespace chev

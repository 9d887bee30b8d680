#include "monova/identity.hpp"

#include <sstream>

namespace monova {

Identity Identity::parse(std::string_view text) {
  // Find the separator: '=' or UTF-8 0xE2 0x89 0x88.
  std::size_t pos = std::string_view::npos;
  std::size_t sep_len = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '=') {
      pos = i;
      sep_len = 1;
      break;
    }
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x89 &&
        static_cast<unsigned char>(text[i + 2]) == 0x88) {
      pos = i;
      sep_len = 3;
      break;
    }
  }
  if (pos == std::string_view::npos)
    throw ParseError("identity needs '=' between its sides: \"" + std::string(text) + "\"");
  std::string_view lhs = text.substr(0, pos);
  std::string_view rhs = text.substr(pos + sep_len);
  if (rhs.find('=') != std::string_view::npos)
    throw ParseError("identity has more than one '=': \"" + std::string(text) + "\"");
  return Identity{Word::parse(lhs), Word::parse(rhs)};
}

Basis::Basis(std::string name, std::vector<Identity> identities) : name_(std::move(name)) {
  for (auto& id : identities) add(std::move(id));
}

bool Basis::add(Identity id) {
  if (id.trivial()) {
    warnings_.push_back("dropped trivial identity " + id.str());
    return false;
  }
  identities_.push_back(std::move(id));
  return true;
}

bool Basis::contains(const Identity& id) const {
  for (const Identity& b : identities_)
    if (b == id) return true;
  return false;
}

std::string Basis::str() const {
  std::ostringstream out;
  if (!name_.empty()) out << name_ << ": ";
  out << '{';
  for (std::size_t i = 0; i < identities_.size(); ++i) {
    if (i) out << ", ";
    out << identities_[i].str();
  }
  out << '}';
  return out.str();
}

Basis parse_basis(std::string_view text, std::string name) {
  Basis basis(std::move(name));
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t a = 0, b = line.size();
    while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
    line = line.substr(a, b - a);
    if (!line.empty()) {
      try {
        basis.add(Identity::parse(line));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return basis;
}

namespace {

Basis make_builtin(const char* name, std::initializer_list<const char*> lines) {
  Basis basis(name);
  for (const char* line : lines) basis.add(Identity::parse(line));
  return basis;
}

}  // namespace

const Basis& builtin_basis(std::string_view name) {
  static const Basis c2 = make_builtin("@C2", {"x^2 = x^3", "xy = yx"});
  static const Basis d = make_builtin("@D", {"x^2 = x^3", "x^2y = xyx", "xyx = yx^2"});
  static const Basis b23 = make_builtin("@B23", {"x^2 = x^3"});
  static const Basis q = make_builtin("@Q", {"yxyzxz = yxzxyxz"});
  static const Basis e = make_builtin("@E", {"x^2 = x^3", "x^2y = xyx", "x^2y^2 = y^2x^2"});
  static const Basis f = make_builtin(
      "@F", {"xyx = xyx^2", "x^2y^2 = y^2x^2", "x^2y = x^2yx", "xytxy = yxtxy"});
  if (name == "C2") return c2;
  if (name == "D") return d;
  if (name == "B23") return b23;
  if (name == "Q") return q;
  if (name == "E") return e;
  if (name == "F") return f;
  throw ParseError("unknown builtin basis '" + std::string(name) +
                   "' (valid: C2, D, B23, Q, E, F)");
}

std::vector<std::string> builtin_basis_names() {
  return {"C2", "D", "B23", "Q", "E", "F"};
}

}  // namespace monova

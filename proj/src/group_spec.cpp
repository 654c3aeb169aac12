#include "hcomm/group_spec.hpp"

#include <cctype>
#include <limits>

#include "hcomm/error.hpp"

namespace hcomm {

namespace {

void append_list(std::string& out, const std::vector<std::int64_t>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
}

std::string matrix_to_string(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    append_list(out, m[i]);
  }
  return out + "]";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse_group();
    skip_ws();
    if (pos_ != text_.size()) error({"end of input"});
    return spec;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(std::initializer_list<std::string_view> expected) {
    std::string msg = "at offset " + std::to_string(pos_) + ": expected ";
    bool first = true;
    for (auto e : expected) {
      msg += first ? "{" : ", ";
      msg += e;
      first = false;
    }
    msg += "}, found ";
    msg += pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : std::string("end of input");
    fail(ErrorCode::ParseError, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      const char s[2] = {c, '\0'};
      error({std::string_view(s)});
    }
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      error({"integer"});
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        pos_ = start;
        fail(ErrorCode::ParseError, "at offset " + std::to_string(start) + ": integer literal too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::uint64_t positive() {
    const std::size_t start = (skip_ws(), pos_);
    const auto v = integer();
    if (v < 0) {
      pos_ = start;
      error({"nonnegative integer"});
    }
    return static_cast<std::uint64_t>(v);
  }

  std::vector<std::int64_t> int_list() {
    std::vector<std::int64_t> out;
    expect('[');
    out.push_back(integer());
    while (peek(',')) {
      ++pos_;
      out.push_back(integer());
    }
    expect(']');
    return out;
  }

  IntMatrix matrix() {
    IntMatrix rows;
    expect('[');
    rows.push_back(int_list());
    while (peek(',')) {
      ++pos_;
      rows.push_back(int_list());
    }
    expect(']');
    return rows;
  }

  ActionSpec action() {
    ActionSpec act;
    skip_ws();
    if (!peek('[')) {
      const std::size_t start = pos_;
      if (identifier() == "inversion") {
        act.inversion = true;
        return act;
      }
      pos_ = start;
      error({"inversion", "["});
    }
    act.matrices.push_back(matrix());
    while (peek(',')) {
      ++pos_;
      act.matrices.push_back(matrix());
    }
    return act;
  }

  GroupSpec parse_group() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "quaternion8") return GroupSpec::quaternion8();
    GroupSpec spec;
    if (name == "cyclic") {
      spec.kind = GroupSpec::Kind::Cyclic;
    } else if (name == "abelian") {
      spec.kind = GroupSpec::Kind::Abelian;
    } else if (name == "dihedral") {
      spec.kind = GroupSpec::Kind::Dihedral;
    } else if (name == "symmetric") {
      spec.kind = GroupSpec::Kind::Symmetric;
    } else if (name == "heisenberg") {
      spec.kind = GroupSpec::Kind::Heisenberg;
    } else if (name == "product") {
      spec.kind = GroupSpec::Kind::Product;
    } else if (name == "semidirect") {
      spec.kind = GroupSpec::Kind::Semidirect;
    } else {
      pos_ = start;
      error({"cyclic", "abelian", "dihedral", "symmetric", "heisenberg", "product", "semidirect", "quaternion8"});
    }
    expect('(');
    switch (spec.kind) {
      case GroupSpec::Kind::Abelian:
        if (peek('[')) {
          for (auto v : int_list()) {
            if (v < 0) fail(ErrorCode::ParseError, "at offset " + std::to_string(pos_) + ": negative factor");
            spec.params.push_back(static_cast<std::uint64_t>(v));
          }
        } else {
          spec.params.push_back(positive());
        }
        break;
      case GroupSpec::Kind::Product:
        spec.children.push_back(parse_group());
        expect(',');
        spec.children.push_back(parse_group());
        break;
      case GroupSpec::Kind::Semidirect:
        spec.children.push_back(parse_group());
        expect(';');
        spec.children.push_back(parse_group());
        expect(';');
        spec.action = action();
        break;
      default:
        spec.params.push_back(positive());
        break;
    }
    expect(')');
    return spec;
  }
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::string to_string(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  const auto param = [&] { return spec.params.empty() ? std::string("?") : std::to_string(spec.params.front()); };
  switch (spec.kind) {
    case K::Cyclic: return "cyclic(" + param() + ")";
    case K::Dihedral: return "dihedral(" + param() + ")";
    case K::Symmetric: return "symmetric(" + param() + ")";
    case K::Heisenberg: return "heisenberg(" + param() + ")";
    case K::Quaternion8: return "quaternion8";
    case K::Abelian: {
      if (spec.params.size() == 1) return "abelian(" + param() + ")";
      std::string out = "abelian(";
      append_list(out, std::vector<std::int64_t>(spec.params.begin(), spec.params.end()));
      return out + ")";
    }
    case K::Product: return "product(" + to_string(spec.children.at(0)) + ", " + to_string(spec.children.at(1)) + ")";
    case K::Semidirect: {
      std::string out = "semidirect(" + to_string(spec.children.at(0)) + "; " + to_string(spec.children.at(1)) + "; ";
      if (spec.action.inversion) {
        out += "inversion";
      } else {
        for (std::size_t i = 0; i < spec.action.matrices.size(); ++i) {
          if (i) out += ", ";
          out += matrix_to_string(spec.action.matrices[i]);
        }
      }
      return out + ")";
    }
  }
  return "?";
}

GroupSpec parse_spec(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    fail(ErrorCode::ParseError, "at offset 0: expected {group spec}, found end of input");
  }
  return Parser(text).parse_all();
}

std::uint64_t spec_order(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::Cyclic: return spec.params.at(0);
    case K::Abelian: {
      std::uint64_t n = 1;
      for (auto d : spec.params) n = sat_mul(n, d);
      return n;
    }
    case K::Dihedral: return sat_mul(2, spec.params.at(0));
    case K::Symmetric: {
      std::uint64_t n = 1;
      for (std::uint64_t i = 2; i <= spec.params.at(0); ++i) n = sat_mul(n, i);
      return n;
    }
    case K::Quaternion8: return 8;
    case K::Heisenberg: {
      const auto p = spec.params.at(0);
      return sat_mul(p, sat_mul(p, p));
    }
    case K::Product:
    case K::Semidirect: return sat_mul(spec_order(spec.children.at(0)), spec_order(spec.children.at(1)));
  }
  return 0;
}

}  // namespace hcomm

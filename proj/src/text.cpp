#include "jratio/text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "jratio/error.hpp"
#include "jratio/maps.hpp"

namespace jratio {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorCode::PoleEncountered: return "PoleEncountered";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnsupportedImage: return "UnsupportedImage";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::SelfMapViolation: return "SelfMapViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string describe(std::size_t position, const std::vector<std::string>& expected,
                     const std::string& input) {
  std::ostringstream os;
  os << "parse error at position " << position << " in \"" << input << "\": expected ";
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (k) os << (k + 1 == expected.size() ? " or " : ", ");
    os << '\'' << expected[k] << '\'';
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& input)
    : Error(ErrorCode::ParseError, describe(position, expected, input)),
      position_(position),
      expected_(std::move(expected)) {}

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_real(double x, int significant_digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general,
                                 significant_digits);
  return std::string(buf, res.ptr);
}

namespace {

template <class RealFormatter>
std::string format_cx_with(Cx z, RealFormatter fmt) {
  std::string out = fmt(z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  out += fmt(std::abs(z.imag()));
  out += 'i';
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input"});
  }

  double real() {
    skip_ws();
    const std::size_t start = pos_;
    double sign = 1.0;
    if (accept_char('-')) {
      sign = -1.0;
    } else {
      accept_char('+');
    }
    const auto magnitude = unsigned_real();
    if (!magnitude) fail({"real"}, start);
    return sign * *magnitude;
  }

  Cx cx() {
    skip_ws();
    const std::size_t start = pos_;
    double sign = 1.0;
    if (accept_char('-')) {
      sign = -1.0;
    } else {
      accept_char('+');
    }
    if (accept_char('i')) return {0.0, sign};
    const auto first = unsigned_real();
    if (!first) fail({"real", "i"}, start);
    const double re = sign * *first;
    if (accept_char('i')) return {0.0, re};
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const double im_sign = text_[pos_++] == '-' ? -1.0 : 1.0;
      if (accept_char('i')) return {re, im_sign};
      const auto second = unsigned_real();
      if (!second) fail({"real", "i"});
      expect("i");
      return {re, im_sign * *second};
    }
    return {re, 0.0};
  }

  PlanarDomain domain() {
    skip_ws();
    if (accept("unitdisk")) return UnitDisk{};
    if (accept("upperhalfplane")) return UpperHalfPlane{};
    const bool disk = accept("disk:");
    if (!disk && !accept("halfplane:")) {
      fail({"unitdisk", "upperhalfplane", "disk:", "halfplane:"});
    }
    const double x = real();
    expect(",");
    const double y = real();
    expect(",");
    skip_ws();
    const std::size_t third = pos_;
    const double t = real();
    try {
      return disk ? make_disk({x, y}, t) : make_half_plane({x, y}, t);
    } catch (const Error&) {
      fail({disk ? "positive radius" : "unit normal"}, third);
    }
  }

  MapExpr map() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept("mobius:")) {
      const Cx a = cx();
      expect(",");
      const Cx b = cx();
      expect(",");
      const Cx c = cx();
      expect(",");
      const Cx d = cx();
      try {
        return MapExpr(Mobius::make(a, b, c, d));
      } catch (const Error&) {
        fail({"nondegenerate coefficients"}, start);
      }
    }
    if (accept("blaschke:")) {
      const double rotation = real();
      expect(";");
      expect("[");
      std::vector<Cx> zeros;
      for (;;) {
        skip_ws();
        const std::size_t at = pos_;
        const Cx zero = cx();
        if (!(std::abs(zero) <= kBlaschkeZeroBound)) fail({"zero inside the unit disk"}, at);
        zeros.push_back(zero);
        skip_ws();
        if (accept_char(']')) break;
        if (!accept_char(',')) fail({",", "]"});
      }
      return MapExpr(Blaschke{rotation, std::move(zeros)});
    }
    if (accept("extremal:")) {
      const double a = real();
      expect(",");
      const double b = real();
      return MapExpr(Extremal{a, b});
    }
    if (accept("compose(")) {
      const MapExpr outer = map();
      expect(",");
      const MapExpr inner = map();
      expect(")");
      return compose(outer, inner);
    }
    fail({"mobius:", "blaschke:", "extremal:", "compose("});
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept_char(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail({std::string(token)});
  }

  bool digit_at(std::size_t k) const {
    return k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]));
  }

  // digits [. digits] | . digits, with an optional e[+-]digits exponent.
  std::optional<double> unsigned_real() {
    std::size_t k = pos_;
    bool any = false;
    while (digit_at(k)) ++k, any = true;
    if (k < text_.size() && text_[k] == '.') {
      ++k;
      while (digit_at(k)) ++k, any = true;
    }
    if (!any) return std::nullopt;
    if (k < text_.size() && (text_[k] == 'e' || text_[k] == 'E')) {
      std::size_t e = k + 1;
      if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
      if (digit_at(e)) {
        while (digit_at(e)) ++e;
        k = e;
      }
    }
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + pos_, text_.data() + k, value);
    if (res.ec != std::errc{} || res.ptr != text_.data() + k || !std::isfinite(value)) {
      fail({"finite real"});
    }
    pos_ = k;
    return value;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const { fail(std::move(expected), pos_); }

  [[noreturn]] void fail(std::vector<std::string> expected, std::size_t at) const {
    throw ParseError(at, std::move(expected), std::string(text_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string format_cx(Cx z) {
  return format_cx_with(z, [](double x) { return format_real(x); });
}

std::string format_cx(Cx z, int significant_digits) {
  return format_cx_with(z, [=](double x) { return format_real(x, significant_digits); });
}

std::string format_domain(const PlanarDomain& d) {
  return std::visit(
      overloaded{
          [](const UnitDisk&) { return std::string("unitdisk"); },
          [](const UpperHalfPlane&) { return std::string("upperhalfplane"); },
          [](const Disk& disk) {
            return "disk:" + format_real(disk.center.real()) + "," +
                   format_real(disk.center.imag()) + "," + format_real(disk.radius);
          },
          [](const HalfPlane& hp) {
            return "halfplane:" + format_real(hp.normal.real()) + "," +
                   format_real(hp.normal.imag()) + "," + format_real(hp.offset);
          },
      },
      d);
}

std::string format_map(const MapExpr& m) {
  return std::visit(
      overloaded{
          [](const Mobius& mob) {
            return "mobius:" + format_cx(mob.a) + "," + format_cx(mob.b) + "," +
                   format_cx(mob.c) + "," + format_cx(mob.d);
          },
          [](const Blaschke& b) {
            std::string out = "blaschke:" + format_real(b.rotation) + ";[";
            for (std::size_t k = 0; k < b.zeros.size(); ++k) {
              if (k) out += ',';
              out += format_cx(b.zeros[k]);
            }
            return out + "]";
          },
          [](const Extremal& e) {
            return "extremal:" + format_real(e.a) + "," + format_real(e.b);
          },
          [](const Compose& c) {
            return "compose(" + format_map(*c.outer) + "," + format_map(*c.inner) + ")";
          },
      },
      m.node());
}

double parse_real(std::string_view text) {
  Parser p(text);
  const double x = p.real();
  p.finish();
  return x;
}

Cx parse_cx(std::string_view text) {
  Parser p(text);
  const Cx z = p.cx();
  p.finish();
  return z;
}

PlanarDomain parse_domain(std::string_view text) {
  Parser p(text);
  PlanarDomain d = p.domain();
  p.finish();
  return d;
}

MapExpr parse_map(std::string_view text) {
  Parser p(text);
  MapExpr m = p.map();
  p.finish();
  return m;
}

}  // namespace jratio

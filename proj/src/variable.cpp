#include "equiloc/variable.hpp"

#include <cctype>

#include "equiloc/error.hpp"

namespace equiloc {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::ring_mismatch: return "RingMismatch";
    case ErrorKind::not_divisible: return "NotDivisible";
    case ErrorKind::not_symmetric: return "NotSymmetric";
    case ErrorKind::no_dominant_variable: return "NoDominantVariable";
    case ErrorKind::pure_parameter_denominator: return "PureParameterDenominator";
    case ErrorKind::window_overflow: return "WindowOverflow";
    case ErrorKind::degree_mismatch: return "DegreeMismatch";
    case ErrorKind::repeated_weights: return "RepeatedWeights";
    case ErrorKind::weight_dependence: return "WeightDependence";
    case ErrorKind::missing_q: return "MissingQ";
    case ErrorKind::singular_linear_part: return "SingularLinearPart";
    case ErrorKind::too_few_columns: return "TooFewColumns";
  }
  return "Error";
}

std::string Var::name() const {
  switch (kind()) {
    case VarKind::residue: return "z" + std::to_string(index());
    case VarKind::weight: return "l" + std::to_string(index());
    case VarKind::esym: return "e" + std::to_string(index());
    case VarKind::chern: return "c" + std::to_string(index());
    case VarKind::alpha: return "a" + std::to_string(index());
    case VarKind::jet: return "f" + std::to_string(index()) + "_" + std::to_string(sub());
    case VarKind::h: return "h";
    case VarKind::d: return "d";
    case VarKind::delta: return "delta";
    case VarKind::m: return "m";
  }
  return "?";
}

namespace {

bool parse_positive(const std::string& s, std::size_t from, std::size_t to, std::uint32_t& out) {
  if (from >= to || to - from > 9) return false;
  std::uint32_t v = 0;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + std::uint32_t(s[i] - '0');
  }
  if (v == 0) return false;
  out = v;
  return true;
}

}  // namespace

bool parse_var(const std::string& token, Var& out) {
  if (token == "h") { out = Var::h(); return true; }
  if (token == "d") { out = Var::d(); return true; }
  if (token == "delta") { out = Var::delta(); return true; }
  if (token == "m") { out = Var::m(); return true; }
  if (token.size() < 2) return false;
  std::uint32_t idx = 0;
  const char head = token[0];
  if (head == 'f') {
    const auto us = token.find('_');
    std::uint32_t order = 0;
    if (us == std::string::npos) return false;
    if (!parse_positive(token, 1, us, idx) || !parse_positive(token, us + 1, token.size(), order))
      return false;
    if (order > 0xffff) return false;
    out = Var::f(idx, std::uint16_t(order));
    return true;
  }
  if (!parse_positive(token, 1, token.size(), idx)) return false;
  switch (head) {
    case 'z': out = Var::z(idx); return true;
    case 'l': out = Var::l(idx); return true;
    case 'e': out = Var::e(idx); return true;
    case 'c': out = Var::c(idx); return true;
    case 'a': out = Var::a(idx); return true;
    default: return false;
  }
}

}  // namespace equiloc

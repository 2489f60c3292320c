#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace equiloc {

// Variable alphabets. The enumerator order is the fixed total order used for
// canonical monomial ordering and output.
enum class VarKind : std::uint8_t {
  residue = 0,  // z_i
  weight,       // l_i, torus weights (lambda / mu)
  esym,         // e_i, elementary symmetric symbols
  chern,        // c_i
  alpha,        // a_i, reparametrization jet coefficients
  jet,          // f{c}_{j}, j-th derivative of the c-th coordinate
  h,
  d,
  delta,
  m,
};

class Var {
 public:
  constexpr Var() = default;
  constexpr Var(VarKind kind, std::uint32_t index = 0, std::uint16_t sub = 0)
      : key_((std::uint64_t(kind) << 48) | (std::uint64_t(index) << 16) | sub) {}

  static constexpr Var z(std::uint32_t i) { return {VarKind::residue, i}; }
  static constexpr Var l(std::uint32_t i) { return {VarKind::weight, i}; }
  static constexpr Var e(std::uint32_t i) { return {VarKind::esym, i}; }
  static constexpr Var c(std::uint32_t i) { return {VarKind::chern, i}; }
  static constexpr Var a(std::uint32_t i) { return {VarKind::alpha, i}; }
  static constexpr Var f(std::uint32_t coord, std::uint16_t order) {
    return {VarKind::jet, coord, order};
  }
  static constexpr Var h() { return {VarKind::h}; }
  static constexpr Var d() { return {VarKind::d}; }
  static constexpr Var delta() { return {VarKind::delta}; }
  static constexpr Var m() { return {VarKind::m}; }

  constexpr VarKind kind() const { return VarKind(key_ >> 48); }
  constexpr std::uint32_t index() const { return std::uint32_t((key_ >> 16) & 0xffffffffu); }
  constexpr std::uint16_t sub() const { return std::uint16_t(key_ & 0xffffu); }
  constexpr std::uint64_t key() const { return key_; }
  constexpr bool is_residue() const { return kind() == VarKind::residue; }

  std::string name() const;

  friend constexpr bool operator==(Var a, Var b) { return a.key_ == b.key_; }
  friend constexpr auto operator<=>(Var a, Var b) { return a.key_ <=> b.key_; }

 private:
  std::uint64_t key_ = 0;
};

// Parses a single variable name ("z3", "l2", "delta", "f1_4", ...).
// Returns false when the token is not a variable.
bool parse_var(const std::string& token, Var& out);

}  // namespace equiloc

template <>
struct std::hash<equiloc::Var> {
  std::size_t operator()(equiloc::Var v) const noexcept {
    return std::hash<std::uint64_t>{}(v.key());
  }
};

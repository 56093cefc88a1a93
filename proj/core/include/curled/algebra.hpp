#ifndef CURLED_ALGEBRA_HPP
#define CURLED_ALGEBRA_HPP

// Three-dimensional algebras with basis {e, f, g}.
//
// A CurledTable stores the normalised multiplication table
//
//        | e    f    g
//     ---+--------------
//      e | ie   A    B
//      f | C    jf   D
//      g | E    F    kg
//
// where (i, j, k) are the type bits and A..F are arbitrary elements. The
// diagonal is implied by the type, so every CurledTable is well formed.
// StructureTensor is the general form used for changes of basis.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "curled/field.hpp"

namespace curled {

/// Index of a basis vector: 0 = e, 1 = f, 2 = g.
enum class Basis : std::uint8_t { e, f, g };

class Element {
 public:
  Element(FieldElement xe, FieldElement xf, FieldElement xg);

  static Element zero(FieldDescriptor desc);
  static Element basis(Basis b, FieldDescriptor desc);
  /// Convenience constructor from integer coordinates.
  static Element of(std::int64_t xe, std::int64_t xf, std::int64_t xg, FieldDescriptor desc);

  FieldDescriptor descriptor() const noexcept { return coords_[0].descriptor(); }
  const FieldElement& operator[](std::size_t r) const noexcept { return coords_[r]; }
  FieldElement& operator[](std::size_t r) noexcept { return coords_[r]; }
  const FieldElement& operator[](Basis b) const noexcept { return coords_[static_cast<std::size_t>(b)]; }

  bool is_zero() const noexcept {
    return coords_[0].is_zero() && coords_[1].is_zero() && coords_[2].is_zero();
  }

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const FieldElement& s);
  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(const FieldElement& s, Element x) { return x *= s; }
  Element operator-() const;

  /// Adds s * x in place.
  void add_scaled(const FieldElement& s, const Element& x);

  friend bool operator==(const Element&, const Element&) = default;

  /// "e + 2f", "-1/2g", "0".
  std::string to_string() const;

 private:
  std::array<FieldElement, 3> coords_;
};

std::ostream& operator<<(std::ostream& os, const Element& x);

class CurledType {
 public:
  constexpr CurledType() noexcept = default;
  /// Throws std::invalid_argument unless every bit is 0 or 1.
  CurledType(int i, int j, int k);

  /// Inverse of code(): bit 2 = i, bit 1 = j, bit 0 = k.
  static CurledType from_code(unsigned code);
  static std::array<CurledType, 8> all() noexcept;

  int i() const noexcept { return bits_[0]; }
  int j() const noexcept { return bits_[1]; }
  int k() const noexcept { return bits_[2]; }
  int bit(Basis b) const noexcept { return bits_[static_cast<std::size_t>(b)]; }
  unsigned code() const noexcept { return (bits_[0] << 2) | (bits_[1] << 1) | bits_[2]; }

  /// "(i,j,k)", e.g. "(1,1,0)".
  std::string to_string() const;

  friend bool operator==(const CurledType&, const CurledType&) = default;

 private:
  std::array<std::uint8_t, 3> bits_{};
};

/// The six off-diagonal parameters A = ef, B = eg, C = fe, D = fg, E = ge, F = gf.
enum class Param : std::uint8_t { A, B, C, D, E, F };
inline constexpr std::array<Param, 6> kAllParams = {Param::A, Param::B, Param::C, Param::D, Param::E, Param::F};

char param_name(Param p) noexcept;
/// Row/column of a parameter in the table: A -> (e, f), ..., F -> (g, f).
std::pair<Basis, Basis> param_position(Param p) noexcept;
/// Parameter at an off-diagonal position. r != s is required.
Param param_at(Basis r, Basis s) noexcept;

class CurledTable {
 public:
  CurledTable(FieldDescriptor desc, CurledType type, std::array<Element, 6> params);

  /// Every parameter zero.
  static CurledTable zero(FieldDescriptor desc, CurledType type);

  FieldDescriptor descriptor() const noexcept { return desc_; }
  const CurledType& type() const noexcept { return type_; }
  const Element& param(Param p) const noexcept { return params_[static_cast<std::size_t>(p)]; }
  const std::array<Element, 6>& params() const noexcept { return params_; }

  /// Copy with one parameter replaced. Throws FieldMismatchError.
  CurledTable with(Param p, Element value) const;
  CurledTable with_type(CurledType type) const;

  /// Product of two basis vectors according to the table.
  Element basis_product(Basis r, Basis s) const;

  /// Type bit as a field element (0 or 1).
  const FieldElement& type_scalar(Basis b) const noexcept { return type_scalars_[static_cast<std::size_t>(b)]; }

  friend bool operator==(const CurledTable& lhs, const CurledTable& rhs) {
    return lhs.desc_ == rhs.desc_ && lhs.type_ == rhs.type_ && lhs.params_ == rhs.params_;
  }

 private:
  FieldDescriptor desc_;
  CurledType type_;
  std::array<Element, 6> params_;
  std::array<FieldElement, 3> type_scalars_;
};

/// Bilinear product xy under the table.
Element product(const Element& x, const Element& y, const CurledTable& table);

/// x^2 by the closed form a^2 ie + b^2 jf + c^2 kg + ab(A+C) + ac(B+E) + bc(D+F).
Element square(const Element& x, const CurledTable& table);

/// True iff every 2x2 minor of the matrix with rows x, y vanishes.
bool linearly_dependent(const Element& x, const Element& y);

/// Checks that {x, x^2} is dependent for all p^3 elements x.
/// Throws UnsupportedFieldError over the rationals.
bool is_curled_bruteforce(const CurledTable& table);

/// Checks that the minors of [x; x^2] vanish as polynomials in K[a, b, c].
/// Over an infinite field this decides curledness; over a finite field it is
/// only a sufficient condition.
bool is_curled_symbolic(const CurledTable& table);

/// Structure constants: e_r e_s = sum_t c(r, s, t) e_t.
class StructureTensor {
 public:
  static StructureTensor zero(FieldDescriptor desc);

  FieldDescriptor descriptor() const noexcept { return desc_; }
  const FieldElement& operator()(std::size_t r, std::size_t s, std::size_t t) const noexcept {
    return c_[index(r, s, t)];
  }
  FieldElement& operator()(std::size_t r, std::size_t s, std::size_t t) noexcept { return c_[index(r, s, t)]; }

  /// e_r e_s as an element.
  Element product_of_basis(std::size_t r, std::size_t s) const;
  void set_product_of_basis(std::size_t r, std::size_t s, const Element& value);

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  explicit StructureTensor(FieldDescriptor desc);
  static constexpr std::size_t index(std::size_t r, std::size_t s, std::size_t t) noexcept {
    return (r * 3 + s) * 3 + t;
  }

  FieldDescriptor desc_;
  std::array<FieldElement, 27> c_;
};

/// 3x3 matrix over K; row r holds the coordinates of the new basis vector
/// e'_r in the old basis.
class Matrix3 {
 public:
  static Matrix3 identity(FieldDescriptor desc);
  static Matrix3 zero(FieldDescriptor desc);
  static Matrix3 of(const std::array<std::array<std::int64_t, 3>, 3>& rows, FieldDescriptor desc);

  FieldDescriptor descriptor() const noexcept { return m_[0][0].descriptor(); }
  const FieldElement& operator()(std::size_t r, std::size_t s) const noexcept { return m_[r][s]; }
  FieldElement& operator()(std::size_t r, std::size_t s) noexcept { return m_[r][s]; }

  FieldElement determinant() const;
  /// Throws SingularMatrixError when the determinant vanishes.
  Matrix3 inverse() const;
  friend Matrix3 operator*(const Matrix3& lhs, const Matrix3& rhs);
  friend bool operator==(const Matrix3&, const Matrix3&) = default;

 private:
  explicit Matrix3(FieldDescriptor desc);
  std::array<std::array<FieldElement, 3>, 3> m_;
};

StructureTensor to_tensor(const CurledTable& table);

/// Throws NotCurledNormalFormError unless each e_r e_r is 0 or e_r.
CurledTable from_tensor(const StructureTensor& t);

/// Structure constants of the same product in the basis e'_r = sum_s m(r, s) e_s.
/// Throws SingularMatrixError when m is not invertible.
StructureTensor change_of_basis(const StructureTensor& t, const Matrix3& m);

struct NormalizedTable {
  CurledTable table;
  /// Factor applied to each basis vector (new e_r = scale[r] * old e_r).
  std::array<FieldElement, 3> scale;
};

/// Rescales each basis vector with e_r^2 = eps_r e_r, eps_r != 0, by
/// eps_r^-1 so that its square becomes itself. Off-diagonal parameters are
/// given as the six products ef, eg, fe, fg, ge, gf in the old basis.
NormalizedTable normalize_diagonal(const FieldElement& eps_e, const FieldElement& eps_f, const FieldElement& eps_g,
                                   const std::array<Element, 6>& offdiag);

/// Normalises any tensor whose basis squares are scalar multiples of the
/// basis vectors; empty otherwise.
std::optional<NormalizedTable> try_normalize(const StructureTensor& t);

}  // namespace curled

#endif  // CURLED_ALGEBRA_HPP

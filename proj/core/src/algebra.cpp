#include "curled/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "curled/poly.hpp"

namespace curled {

// ---------------------------------------------------------------- Element

Element::Element(FieldElement xe, FieldElement xf, FieldElement xg)
    : coords_{std::move(xe), std::move(xf), std::move(xg)} {
  if (coords_[1].descriptor() != coords_[0].descriptor() || coords_[2].descriptor() != coords_[0].descriptor()) {
    throw FieldMismatchError("element coordinates belong to different fields");
  }
}

Element Element::zero(FieldDescriptor desc) {
  const FieldElement z = FieldElement::zero(desc);
  return Element(z, z, z);
}

Element Element::basis(Basis b, FieldDescriptor desc) {
  Element x = zero(desc);
  x.coords_[static_cast<std::size_t>(b)] = FieldElement::one(desc);
  return x;
}

Element Element::of(std::int64_t xe, std::int64_t xf, std::int64_t xg, FieldDescriptor desc) {
  return Element(FieldElement::from_integer(xe, desc), FieldElement::from_integer(xf, desc),
                 FieldElement::from_integer(xg, desc));
}

Element& Element::operator+=(const Element& rhs) {
  for (std::size_t r = 0; r < 3; ++r) coords_[r] += rhs.coords_[r];
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  for (std::size_t r = 0; r < 3; ++r) coords_[r] -= rhs.coords_[r];
  return *this;
}

Element& Element::operator*=(const FieldElement& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Element Element::operator-() const { return Element(-coords_[0], -coords_[1], -coords_[2]); }

void Element::add_scaled(const FieldElement& s, const Element& x) {
  if (s.is_zero()) return;
  for (std::size_t r = 0; r < 3; ++r) {
    if (!x.coords_[r].is_zero()) coords_[r] += s * x.coords_[r];
  }
}

std::string Element::to_string() const {
  static constexpr char kNames[3] = {'e', 'f', 'g'};
  std::string out;
  for (std::size_t r = 0; r < 3; ++r) {
    const FieldElement& c = coords_[r];
    if (c.is_zero()) continue;
    std::string text = c.to_string();
    bool negative = false;
    if (!text.empty() && text[0] == '-') {
      negative = true;
      text = text.substr(1);
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (text != "1") out += text;
    out += kNames[r];
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.to_string(); }

// ------------------------------------------------------------- CurledType

CurledType::CurledType(int i, int j, int k) {
  for (int b : {i, j, k}) {
    if (b != 0 && b != 1) throw std::invalid_argument("type bits must be 0 or 1");
  }
  bits_ = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(k)};
}

CurledType CurledType::from_code(unsigned code) {
  if (code > 7) throw std::invalid_argument("type code must be in [0, 8)");
  return CurledType((code >> 2) & 1, (code >> 1) & 1, code & 1);
}

std::array<CurledType, 8> CurledType::all() noexcept {
  std::array<CurledType, 8> out;
  for (unsigned code = 0; code < 8; ++code) out[code] = from_code(code);
  return out;
}

std::string CurledType::to_string() const {
  return "(" + std::to_string(i()) + "," + std::to_string(j()) + "," + std::to_string(k()) + ")";
}

// ------------------------------------------------------------ CurledTable

char param_name(Param p) noexcept { return "ABCDEF"[static_cast<std::size_t>(p)]; }

std::pair<Basis, Basis> param_position(Param p) noexcept {
  switch (p) {
    case Param::A: return {Basis::e, Basis::f};
    case Param::B: return {Basis::e, Basis::g};
    case Param::C: return {Basis::f, Basis::e};
    case Param::D: return {Basis::f, Basis::g};
    case Param::E: return {Basis::g, Basis::e};
    case Param::F: return {Basis::g, Basis::f};
  }
  return {Basis::e, Basis::f};
}

Param param_at(Basis r, Basis s) noexcept {
  // Row r, column s; the diagonal has no parameter.
  static constexpr Param kTable[3][3] = {
      {Param::A, Param::A, Param::B}, {Param::C, Param::C, Param::D}, {Param::E, Param::F, Param::F}};
  return kTable[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
}

CurledTable::CurledTable(FieldDescriptor desc, CurledType type, std::array<Element, 6> params)
    : desc_(desc),
      type_(type),
      params_(std::move(params)),
      type_scalars_{FieldElement::from_integer(std::int64_t{type.i()}, desc),
                    FieldElement::from_integer(std::int64_t{type.j()}, desc),
                    FieldElement::from_integer(std::int64_t{type.k()}, desc)} {
  for (const Element& p : params_) {
    if (p.descriptor() != desc_) throw FieldMismatchError("table parameter over " + p.descriptor().to_string() +
                                                          " in a table over " + desc_.to_string());
  }
}

CurledTable CurledTable::zero(FieldDescriptor desc, CurledType type) {
  const Element z = Element::zero(desc);
  return CurledTable(desc, type, {z, z, z, z, z, z});
}

CurledTable CurledTable::with(Param p, Element value) const {
  std::array<Element, 6> params = params_;
  params[static_cast<std::size_t>(p)] = std::move(value);
  return CurledTable(desc_, type_, std::move(params));
}

CurledTable CurledTable::with_type(CurledType type) const { return CurledTable(desc_, type, params_); }

Element CurledTable::basis_product(Basis r, Basis s) const {
  if (r == s) return type_.bit(r) ? Element::basis(r, desc_) : Element::zero(desc_);
  return param(param_at(r, s));
}

// --------------------------------------------------------------- products

namespace {

void require_field(const Element& x, const CurledTable& table) {
  if (x.descriptor() != table.descriptor()) {
    throw FieldMismatchError("element over " + x.descriptor().to_string() + " used with a table over " +
                             table.descriptor().to_string());
  }
}

}  // namespace

Element product(const Element& x, const Element& y, const CurledTable& table) {
  require_field(x, table);
  require_field(y, table);
  Element out = Element::zero(table.descriptor());
  for (std::size_t r = 0; r < 3; ++r) {
    if (x[r].is_zero()) continue;
    for (std::size_t s = 0; s < 3; ++s) {
      if (y[s].is_zero()) continue;
      if (r == s) {
        if (table.type().bit(static_cast<Basis>(r))) out[r] += x[r] * y[s];
      } else {
        out.add_scaled(x[r] * y[s], table.param(param_at(static_cast<Basis>(r), static_cast<Basis>(s))));
      }
    }
  }
  return out;
}

Element square(const Element& x, const CurledTable& table) {
  require_field(x, table);
  const FieldDescriptor desc = table.descriptor();
  const FieldElement& a = x[0];
  const FieldElement& b = x[1];
  const FieldElement& c = x[2];
  Element out = Element::zero(desc);
  if (table.type().i()) out[0] = a * a;
  if (table.type().j()) out[1] = b * b;
  if (table.type().k()) out[2] = c * c;
  const FieldElement ab = a * b;
  const FieldElement ac = a * c;
  const FieldElement bc = b * c;
  if (!ab.is_zero()) out.add_scaled(ab, table.param(Param::A) + table.param(Param::C));
  if (!ac.is_zero()) out.add_scaled(ac, table.param(Param::B) + table.param(Param::E));
  if (!bc.is_zero()) out.add_scaled(bc, table.param(Param::D) + table.param(Param::F));
  return out;
}

bool linearly_dependent(const Element& x, const Element& y) {
  if (x.descriptor() != y.descriptor()) throw FieldMismatchError("linearly_dependent: field mismatch");
  return x[0] * y[1] == x[1] * y[0] && x[0] * y[2] == x[2] * y[0] && x[1] * y[2] == x[2] * y[1];
}

bool is_curled_bruteforce(const CurledTable& table) {
  const FieldDescriptor desc = table.descriptor();
  if (!desc.is_finite()) throw UnsupportedFieldError("brute-force curledness needs a finite field");
  const auto values = enumerate_field(desc);
  for (const auto& a : values) {
    for (const auto& b : values) {
      for (const auto& c : values) {
        const Element x(a, b, c);
        if (!linearly_dependent(x, square(x, table))) return false;
      }
    }
  }
  return true;
}

bool is_curled_symbolic(const CurledTable& table) {
  const FieldDescriptor desc = table.descriptor();
  const FieldElement one = FieldElement::one(desc);
  const std::array<FieldPoly, 3> x = {FieldPoly::term(Monomial::of(Var::a), one),
                                      FieldPoly::term(Monomial::of(Var::b), one),
                                      FieldPoly::term(Monomial::of(Var::c), one)};
  std::array<FieldPoly, 3> sq;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t s = 0; s < 3; ++s) {
      const Element es = table.basis_product(static_cast<Basis>(r), static_cast<Basis>(s));
      const FieldPoly coeff = x[r] * x[s];
      for (std::size_t t = 0; t < 3; ++t) {
        if (!es[t].is_zero()) sq[t] += coeff.scaled(es[t]);
      }
    }
  }
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t s = r + 1; s < 3; ++s) {
      if (!(x[r] * sq[s] - x[s] * sq[r]).is_zero()) return false;
    }
  }
  return true;
}

// -------------------------------------------------------- StructureTensor

namespace {

std::array<FieldElement, 27> filled(const FieldElement& value) {
  return {value, value, value, value, value, value, value, value, value, value, value, value, value, value,
          value, value, value, value, value, value, value, value, value, value, value, value, value};
}

}  // namespace

StructureTensor::StructureTensor(FieldDescriptor desc) : desc_(desc), c_(filled(FieldElement::zero(desc))) {}

StructureTensor StructureTensor::zero(FieldDescriptor desc) { return StructureTensor(desc); }

Element StructureTensor::product_of_basis(std::size_t r, std::size_t s) const {
  return Element((*this)(r, s, 0), (*this)(r, s, 1), (*this)(r, s, 2));
}

void StructureTensor::set_product_of_basis(std::size_t r, std::size_t s, const Element& value) {
  if (value.descriptor() != desc_) throw FieldMismatchError("tensor entry over a different field");
  for (std::size_t t = 0; t < 3; ++t) (*this)(r, s, t) = value[t];
}

StructureTensor to_tensor(const CurledTable& table) {
  StructureTensor t = StructureTensor::zero(table.descriptor());
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t s = 0; s < 3; ++s) {
      t.set_product_of_basis(r, s, table.basis_product(static_cast<Basis>(r), static_cast<Basis>(s)));
    }
  }
  return t;
}

CurledTable from_tensor(const StructureTensor& t) {
  const FieldDescriptor desc = t.descriptor();
  std::array<int, 3> bits{};
  for (std::size_t r = 0; r < 3; ++r) {
    const Element sq = t.product_of_basis(r, r);
    for (std::size_t s = 0; s < 3; ++s) {
      if (s != r && !sq[s].is_zero()) {
        throw NotCurledNormalFormError("basis square e_" + std::to_string(r) + "^2 = " + sq.to_string() +
                                       " is not a multiple of e_" + std::to_string(r));
      }
    }
    if (sq[r].is_zero()) {
      bits[r] = 0;
    } else if (sq[r].is_one()) {
      bits[r] = 1;
    } else {
      throw NotCurledNormalFormError("basis square coefficient " + sq[r].to_string() + " is neither 0 nor 1");
    }
  }
  std::array<Element, 6> params = {t.product_of_basis(0, 1), t.product_of_basis(0, 2), t.product_of_basis(1, 0),
                                   t.product_of_basis(1, 2), t.product_of_basis(2, 0), t.product_of_basis(2, 1)};
  return CurledTable(desc, CurledType(bits[0], bits[1], bits[2]), std::move(params));
}

// ---------------------------------------------------------------- Matrix3

Matrix3::Matrix3(FieldDescriptor desc)
    : m_{{{FieldElement::zero(desc), FieldElement::zero(desc), FieldElement::zero(desc)},
          {FieldElement::zero(desc), FieldElement::zero(desc), FieldElement::zero(desc)},
          {FieldElement::zero(desc), FieldElement::zero(desc), FieldElement::zero(desc)}}} {}

Matrix3 Matrix3::zero(FieldDescriptor desc) { return Matrix3(desc); }

Matrix3 Matrix3::identity(FieldDescriptor desc) {
  Matrix3 m(desc);
  for (std::size_t r = 0; r < 3; ++r) m.m_[r][r] = FieldElement::one(desc);
  return m;
}

Matrix3 Matrix3::of(const std::array<std::array<std::int64_t, 3>, 3>& rows, FieldDescriptor desc) {
  Matrix3 m(desc);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t s = 0; s < 3; ++s) m.m_[r][s] = FieldElement::from_integer(rows[r][s], desc);
  }
  return m;
}

FieldElement Matrix3::determinant() const {
  const auto& m = m_;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 Matrix3::inverse() const {
  const FieldElement det = determinant();
  if (det.is_zero()) throw SingularMatrixError("matrix is singular");
  const FieldElement inv_det = det.inverse();
  const auto& m = m_;
  Matrix3 out(descriptor());
  // Adjugate: out(r, s) = cofactor(s, r).
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t s = 0; s < 3; ++s) {
      const std::size_t r1 = (s + 1) % 3, r2 = (s + 2) % 3;
      const std::size_t c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      out.m_[r][s] = (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) * inv_det;
    }
  }
  return out;
}

Matrix3 operator*(const Matrix3& lhs, const Matrix3& rhs) {
  Matrix3 out(lhs.descriptor());
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t s = 0; s < 3; ++s) {
      for (std::size_t t = 0; t < 3; ++t) out.m_[r][s] += lhs.m_[r][t] * rhs.m_[t][s];
    }
  }
  return out;
}

StructureTensor change_of_basis(const StructureTensor& t, const Matrix3& m) {
  if (m.descriptor() != t.descriptor()) throw FieldMismatchError("change_of_basis: field mismatch");
  const Matrix3 inv = m.inverse();
  const FieldDescriptor desc = t.descriptor();
  StructureTensor out = StructureTensor::zero(desc);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t q = 0; q < 3; ++q) {
      // e'_r e'_q in old coordinates.
      std::array<FieldElement, 3> old{FieldElement::zero(desc), FieldElement::zero(desc), FieldElement::zero(desc)};
      for (std::size_t s = 0; s < 3; ++s) {
        if (m(r, s).is_zero()) continue;
        for (std::size_t u = 0; u < 3; ++u) {
          const FieldElement w = m(r, s) * m(q, u);
          if (w.is_zero()) continue;
          for (std::size_t v = 0; v < 3; ++v) old[v] += w * t(s, u, v);
        }
      }
      // Old e_v = sum_n inv(v, n) e'_n.
      for (std::size_t n = 0; n < 3; ++n) {
        FieldElement acc = FieldElement::zero(desc);
        for (std::size_t v = 0; v < 3; ++v) acc += old[v] * inv(v, n);
        out(r, q, n) = acc;
      }
    }
  }
  return out;
}

// ------------------------------------------------------------ normalising

NormalizedTable normalize_diagonal(const FieldElement& eps_e, const FieldElement& eps_f, const FieldElement& eps_g,
                                   const std::array<Element, 6>& offdiag) {
  const FieldDescriptor desc = eps_e.descriptor();
  if (eps_f.descriptor() != desc || eps_g.descriptor() != desc) {
    throw FieldMismatchError("normalize_diagonal: field mismatch");
  }
  for (const Element& x : offdiag) {
    if (x.descriptor() != desc) throw FieldMismatchError("normalize_diagonal: field mismatch");
  }
  const std::array<const FieldElement*, 3> eps = {&eps_e, &eps_f, &eps_g};
  std::array<FieldElement, 3> scale = {FieldElement::one(desc), FieldElement::one(desc), FieldElement::one(desc)};
  std::array<FieldElement, 3> unscale = scale;
  std::array<int, 3> bits{};
  for (std::size_t r = 0; r < 3; ++r) {
    if (!eps[r]->is_zero()) {
      scale[r] = eps[r]->inverse();
      unscale[r] = *eps[r];
      bits[r] = 1;
    }
  }
  // e'_r e'_s = scale_r scale_s (e_r e_s); coordinate t in the new basis is divided by scale_t.
  std::array<Element, 6> params = offdiag;
  for (Param p : kAllParams) {
    const auto [r, s] = param_position(p);
    const FieldElement factor = scale[static_cast<std::size_t>(r)] * scale[static_cast<std::size_t>(s)];
    Element& x = params[static_cast<std::size_t>(p)];
    for (std::size_t t = 0; t < 3; ++t) x[t] = x[t] * factor * unscale[t];
  }
  return NormalizedTable{CurledTable(desc, CurledType(bits[0], bits[1], bits[2]), std::move(params)),
                         std::move(scale)};
}

std::optional<NormalizedTable> try_normalize(const StructureTensor& t) {
  const FieldDescriptor desc = t.descriptor();
  std::array<FieldElement, 3> eps = {FieldElement::zero(desc), FieldElement::zero(desc), FieldElement::zero(desc)};
  for (std::size_t r = 0; r < 3; ++r) {
    const Element sq = t.product_of_basis(r, r);
    for (std::size_t s = 0; s < 3; ++s) {
      if (s != r && !sq[s].is_zero()) return std::nullopt;
    }
    eps[r] = sq[r];
  }
  const std::array<Element, 6> offdiag = {t.product_of_basis(0, 1), t.product_of_basis(0, 2),
                                          t.product_of_basis(1, 0), t.product_of_basis(1, 2),
                                          t.product_of_basis(2, 0), t.product_of_basis(2, 1)};
  return normalize_diagonal(eps[0], eps[1], eps[2], offdiag);
}

}  // namespace curled

#pragma once

// Generalized structures on the big tangent bundle of an invariant frame and
// the predicates that classify them.
//
// Operators are 2n x 2n matrices in the (X_1..X_n, s^1..s^n) basis; column k is
// the image of the k-th basis section. Tensor products of sections act by
//   (A (x) B)(u) := 2 <B, u> A,
// the convention under which Phi^2 = -Id + E+ (x) E- + E- (x) E+ kills E+-.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gcok/frame.hpp"
#include "gcok/linalg.hpp"

namespace gcok {

class BigOperator {
 public:
  BigOperator() = default;
  explicit BigOperator(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() % 2 != 0) throw DimensionMismatch("BigOperator: matrix must be 2n x 2n");
  }

  static BigOperator identity(std::size_t n) { return BigOperator(Matrix::identity(2 * n)); }
  static BigOperator zero(std::size_t n) { return BigOperator(Matrix(2 * n, 2 * n)); }

  /// [[tt, ft], [tf, ff]]: tt: T -> T, ft: T* -> T, tf: T -> T*, ff: T* -> T*.
  static BigOperator from_blocks(const Matrix& tt, const Matrix& ft, const Matrix& tf, const Matrix& ff) {
    const std::size_t n = tt.rows();
    for (const Matrix* b : {&tt, &ft, &tf, &ff})
      if (b->rows() != n || b->cols() != n) throw DimensionMismatch("BigOperator::from_blocks: blocks must be n x n");
    Matrix m(2 * n, 2 * n);
    m.set_block(0, 0, tt);
    m.set_block(0, n, ft);
    m.set_block(n, 0, tf);
    m.set_block(n, n, ff);
    return BigOperator(std::move(m));
  }

  std::size_t frame_dim() const { return m_.rows() / 2; }
  const Matrix& matrix() const { return m_; }

  Matrix tangent_to_tangent() const { return m_.block(0, 0, frame_dim(), frame_dim()); }
  Matrix cotangent_to_tangent() const { return m_.block(0, frame_dim(), frame_dim(), frame_dim()); }
  Matrix tangent_to_cotangent() const { return m_.block(frame_dim(), 0, frame_dim(), frame_dim()); }
  Matrix cotangent_to_cotangent() const { return m_.block(frame_dim(), frame_dim(), frame_dim(), frame_dim()); }

  GenSection operator()(const GenSection& u) const {
    if (u.dim() != frame_dim()) throw FrameMismatch("BigOperator: section belongs to a different frame");
    return GenSection::from_coords(m_ * u.coords());
  }

  friend BigOperator operator*(const BigOperator& a, const BigOperator& b) { return BigOperator(a.m_ * b.m_); }
  friend BigOperator operator+(const BigOperator& a, const BigOperator& b) { return BigOperator(a.m_ + b.m_); }
  friend BigOperator operator-(const BigOperator& a, const BigOperator& b) { return BigOperator(a.m_ - b.m_); }
  friend BigOperator operator*(const Scalar& s, const BigOperator& a) { return BigOperator(s * a.m_); }
  BigOperator operator-() const { return BigOperator(-m_); }
  friend bool operator==(const BigOperator& a, const BigOperator& b) = default;

 private:
  Matrix m_;
};

/// Swap of the T and T* halves: 2 <u, v> = u^T S v.
inline Matrix pairing_swap(std::size_t n) {
  Matrix s(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    s(k, n + k) = 1;
    s(n + k, k) = 1;
  }
  return s;
}

/// A* with <A u, v> = <u, A* v>; equals P^-1 A^T P for the pairing Gram matrix P.
inline BigOperator adjoint(const BigOperator& a) {
  const Matrix s = pairing_swap(a.frame_dim());
  return BigOperator(s * a.matrix().transpose() * s);
}

/// (a (x) b)(u) = 2 <b, u> a.
inline BigOperator tensor(const GenSection& a, const GenSection& b) {
  if (a.dim() != b.dim()) throw FrameMismatch("tensor: sections belong to different frames");
  Vector row = b.form;
  row.insert(row.end(), b.vec.begin(), b.vec.end());
  return BigOperator(Matrix::outer(a.coords(), row));
}

/// Matrix of the bilinear form (u, v) -> 2 <A u, v>.
inline Matrix bilinear_form(const BigOperator& a) { return a.matrix().transpose() * pairing_swap(a.frame_dim()); }

/// One named axiom or condition with its outcome and, on failure, a witness.
struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct Report {
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

namespace detail {

inline std::string basis_name(std::size_t n, std::size_t k) {
  return k < n ? "X" + std::to_string(k + 1) : "s" + std::to_string(k - n + 1);
}

/// Witness for an operator identity lhs == rhs: the first basis section on which they differ.
inline Check operator_check(std::string name, const BigOperator& lhs, const BigOperator& rhs) {
  Check c{std::move(name), lhs == rhs, {}};
  if (c.pass) return c;
  const Matrix diff = lhs.matrix() - rhs.matrix();
  const std::size_t n = lhs.frame_dim();
  for (std::size_t k = 0; k < diff.cols(); ++k) {
    const Vector col = diff.column(k);
    if (!is_zero(col)) {
      c.witness = "(lhs - rhs)(" + basis_name(n, k) + ") = " + GenSection::from_coords(col).str();
      break;
    }
  }
  return c;
}

inline Check section_check(std::string name, const GenSection& lhs, const GenSection& rhs) {
  Check c{std::move(name), lhs == rhs, {}};
  if (!c.pass) c.witness = "lhs = " + lhs.str() + ", rhs = " + rhs.str();
  return c;
}

inline Check scalar_check(std::string name, const Scalar& value, const Scalar& expected, const std::string& label) {
  Check c{std::move(name), value == expected, {}};
  if (!c.pass) c.witness = label + " = " + value.str();
  return c;
}

}  // namespace detail

struct GenAlmostContact {
  BigOperator phi;
  GenSection e_plus;
  GenSection e_minus;

  std::size_t frame_dim() const { return phi.frame_dim(); }
  friend bool operator==(const GenAlmostContact&, const GenAlmostContact&) = default;
};

struct GenAlmostComplex {
  BigOperator j;
  friend bool operator==(const GenAlmostComplex&, const GenAlmostComplex&) = default;
};

struct GenMetric {
  BigOperator g;
};

struct GenContactMetric {
  GenAlmostContact base;
  BigOperator g;

  std::size_t frame_dim() const { return base.frame_dim(); }
  friend bool operator==(const GenContactMetric&, const GenContactMetric&) = default;
};

/// Axioms of a generalized almost contact structure plus the derived identity Phi(E+-) = 0.
inline Report check_gac(const GenAlmostContact& s) {
  const std::size_t n = s.frame_dim();
  if (s.e_plus.dim() != n || s.e_minus.dim() != n) throw FrameMismatch("check_gac: sections and Phi use different frames");
  const BigOperator rhs =
      -BigOperator::identity(n) + tensor(s.e_plus, s.e_minus) + tensor(s.e_minus, s.e_plus);
  Report r;
  r.add(detail::operator_check("Phi + Phi* = 0", s.phi + adjoint(s.phi), BigOperator::zero(n)));
  r.add(detail::operator_check("Phi^2 = -Id + E+ (x) E- + E- (x) E+", s.phi * s.phi, rhs));
  r.add(detail::scalar_check("<E+, E+> = 0", pairing(s.e_plus, s.e_plus), 0, "<E+, E+>"));
  r.add(detail::scalar_check("<E-, E-> = 0", pairing(s.e_minus, s.e_minus), 0, "<E-, E->"));
  r.add(detail::scalar_check("pairing normalization 2<E+, E-> = 1", Scalar(2) * pairing(s.e_plus, s.e_minus), 1,
                             "2<E+, E->"));
  r.add(detail::section_check("Phi(E+) = 0", s.phi(s.e_plus), GenSection(n)));
  r.add(detail::section_check("Phi(E-) = 0", s.phi(s.e_minus), GenSection(n)));
  return r;
}

namespace detail {
inline void require(const Report& r, const std::string& what) {
  if (const Check* f = r.first_failure())
    throw AxiomFailure(what + ": axiom '" + f->name + "' fails" + (f->witness.empty() ? "" : " (" + f->witness + ")"));
}
}  // namespace detail

/// +i eigenbundle E^(1,0) of Phi.
inline Subspace eigenbundle_E10(const GenAlmostContact& s) {
  detail::require(check_gac(s), "eigenbundle_E10");
  return eigenspace(s.phi.matrix(), Scalar::i());
}

/// -i eigenbundle E^(0,1) of Phi.
inline Subspace eigenbundle_E01(const GenAlmostContact& s) {
  detail::require(check_gac(s), "eigenbundle_E01");
  return eigenspace(s.phi.matrix(), -Scalar::i());
}

inline std::vector<GenSection> sections_of(const Subspace& s) {
  std::vector<GenSection> out;
  for (const auto& b : s.basis()) out.push_back(GenSection::from_coords(b));
  return out;
}

inline bool is_isotropic(const Subspace& s) {
  const auto gens = sections_of(s);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b)
      if (!pairing(gens[a], gens[b]).is_zero()) return false;
  return true;
}

enum class Sign { plus, minus };

/// L+- = span(E+-) (+) E^(1,0); maximal isotropic.
inline Subspace build_L(const GenAlmostContact& s, Sign sign) {
  const Subspace e10 = eigenbundle_E10(s);
  const GenSection& e = sign == Sign::plus ? s.e_plus : s.e_minus;
  const Subspace l = e10 + Subspace::span(2 * s.frame_dim(), {e.coords()});
  if (l.dim() != s.frame_dim() || !is_isotropic(l))
    throw AxiomFailure("build_L: L is not maximal isotropic (dim " + std::to_string(l.dim()) + ")");
  return l;
}

struct BracketWitness {
  GenSection a;
  GenSection b;
  GenSection bracket;

  std::string str() const { return "[[" + a.str() + ", " + b.str() + "]] = " + bracket.str(); }
};

/// Outcome of a closure test; on failure carries the offending pair and bracket.
struct ClosureResult {
  bool closed = true;
  std::optional<BracketWitness> witness;

  explicit operator bool() const { return closed; }
};

/// Closure of span(generators) under the Courant bracket, tested on generator
/// pairs. The span must be isotropic.
inline ClosureResult is_involutive(const Subspace& l, const FrameContext& f, bool use_h) {
  if (l.ambient_dim() != 2 * f.dim()) throw FrameMismatch("is_involutive: subspace does not live over this frame");
  if (!is_isotropic(l)) throw PreconditionFailure("is_involutive: span is not isotropic");
  const auto gens = sections_of(l);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      GenSection br = courant_bracket(f, gens[a], gens[b], use_h);
      if (!l.contains(br.coords())) return {false, BracketWitness{gens[a], gens[b], std::move(br)}};
    }
  return {};
}

enum class ContactKind { none, contact_plus, contact_minus, strong };

inline std::string to_string(ContactKind k) {
  switch (k) {
    case ContactKind::none: return "none";
    case ContactKind::contact_plus: return "contact_plus";
    case ContactKind::contact_minus: return "contact_minus";
    case ContactKind::strong: return "strong";
  }
  return "?";
}

struct ContactClass {
  ClosureResult plus;
  ClosureResult minus;

  bool strong() const { return plus.closed && minus.closed; }
  bool contact() const { return plus.closed || minus.closed; }
  ContactKind kind() const {
    if (strong()) return ContactKind::strong;
    if (plus.closed) return ContactKind::contact_plus;
    if (minus.closed) return ContactKind::contact_minus;
    return ContactKind::none;
  }
};

inline ContactClass classify_contact(const FrameContext& f, const GenAlmostContact& s, bool use_h) {
  return {is_involutive(build_L(s, Sign::plus), f, use_h), is_involutive(build_L(s, Sign::minus), f, use_h)};
}

struct NormalResult {
  ContactClass contact;
  GenSection bracket;  // [[E+, E-]]
  bool normal = false;
};

/// Strong and [[E+, E-]] = 0.
inline NormalResult is_normal(const FrameContext& f, const GenAlmostContact& s, bool use_h) {
  NormalResult r{classify_contact(f, s, use_h), courant_bracket(f, s.e_plus, s.e_minus, use_h), false};
  r.normal = r.contact.strong() && r.bracket.is_zero();
  return r;
}

/// Self-adjoint, involutive, and <G., .> positive definite.
inline Report check_metric(const BigOperator& g) {
  const std::size_t n = g.frame_dim();
  Report r;
  const Check self_adjoint = detail::operator_check("G* = G", adjoint(g), g);
  r.add(self_adjoint);
  r.add(detail::operator_check("G^2 = Id", g * g, BigOperator::identity(n)));
  Check pos{"<G., .> positive definite", false, {}};
  if (!g.matrix().is_real()) {
    pos.witness = "G has non-real entries";
  } else if (!self_adjoint.pass) {
    pos.witness = "<G., .> is not symmetric";
  } else {
    const Matrix form = bilinear_form(g);
    pos.pass = is_positive_definite(form);
    if (!pos.pass) {
      for (std::size_t k = 1; k <= form.rows(); ++k) {
        const Scalar minor = determinant(form.block(0, 0, k, k));
        if (minor.re() <= 0) {
          pos.witness = "leading principal minor " + std::to_string(k) + " = " + minor.str();
          break;
        }
      }
    }
  }
  r.add(pos);
  return r;
}

/// -Phi G Phi = G - E+ (x) E+ - E- (x) E-.
inline Check compat_check(const GenContactMetric& t) {
  const auto& s = t.base;
  return detail::operator_check("-Phi G Phi = G - E+ (x) E+ - E- (x) E-", -(s.phi * t.g * s.phi),
                                t.g - tensor(s.e_plus, s.e_plus) - tensor(s.e_minus, s.e_minus));
}

inline bool check_compat(const GenContactMetric& t) { return compat_check(t).pass; }

/// Consequences of compatibility: G(E+-) = E-+, G Phi = Phi G, G(E^(1,0)) = E^(1,0).
inline Report compat_consequences(const GenContactMetric& t) {
  const auto& s = t.base;
  Report r;
  r.add(detail::section_check("G(E+) = E-", t.g(s.e_plus), s.e_minus));
  r.add(detail::section_check("G(E-) = E+", t.g(s.e_minus), s.e_plus));
  r.add(detail::operator_check("G Phi = Phi G", t.g * s.phi, s.phi * t.g));
  const Subspace e10 = eigenbundle_E10(s);
  const Subspace image = e10.image(t.g.matrix());
  Check inv{"G(E^(1,0)) = E^(1,0)", image == e10, {}};
  if (!inv.pass) inv.witness = "dim G(E^(1,0)) = " + std::to_string(image.dim()) + ", subspaces differ";
  r.add(inv);
  return r;
}

inline Report gacm_axioms(const GenContactMetric& t) {
  Report r = check_gac(t.base);
  r.append(check_metric(t.g));
  r.add(compat_check(t));
  return r;
}

/// (G Phi, G E+ = E-, G E- = E+).
inline GenAlmostContact compose_GPhi(const GenContactMetric& t) {
  if (const Check c = compat_check(t); !c.pass) throw AxiomFailure("compose_GPhi: G is not compatible (" + c.witness + ")");
  return {t.g * t.base.phi, t.base.e_minus, t.base.e_plus};
}

struct CoKahlerResult {
  NormalResult phi;
  ContactClass gphi;
  GenSection composed_bracket;  // [[E-, E+]] for G Phi
  bool cokahler = false;
};

/// Normal, and G Phi strong.
inline CoKahlerResult is_cokahler(const FrameContext& f, const GenContactMetric& t, bool use_h) {
  detail::require(gacm_axioms(t), "is_cokahler");
  const GenAlmostContact composed = compose_GPhi(t);
  CoKahlerResult r{is_normal(f, t.base, use_h), classify_contact(f, composed, use_h),
                   courant_bracket(f, composed.e_plus, composed.e_minus, use_h), false};
  r.cokahler = r.phi.normal && r.gphi.strong() && r.composed_bracket.is_zero();
  return r;
}

enum class GcxKind { invalid, almost, integrable };

inline std::string to_string(GcxKind k) {
  switch (k) {
    case GcxKind::invalid: return "invalid";
    case GcxKind::almost: return "almost";
    case GcxKind::integrable: return "integrable";
  }
  return "?";
}

struct GcxResult {
  GcxKind kind = GcxKind::invalid;
  Report algebra;
  ClosureResult closure;
  Subspace eigenbundle;
};

/// Algebraic axioms first; involutivity of the +i eigenbundle only if they hold.
inline GcxResult check_gcx(const FrameContext& f, const BigOperator& j, bool use_h) {
  require_same_frame(f, j.frame_dim(), "check_gcx");
  const std::size_t n = j.frame_dim();
  GcxResult r;
  r.algebra.add(detail::operator_check("J + J* = 0", j + adjoint(j), BigOperator::zero(n)));
  r.algebra.add(detail::operator_check("J^2 = -Id", j * j, -BigOperator::identity(n)));
  if (!r.algebra.ok()) return r;
  r.eigenbundle = eigenspace(j.matrix(), Scalar::i());
  r.closure = is_involutive(r.eigenbundle, f, use_h);
  r.kind = r.closure.closed ? GcxKind::integrable : GcxKind::almost;
  return r;
}

struct GKResult {
  GcxResult j1;
  GcxResult j2;
  Check commuting;
  Report metric;
  bool generalized_kahler = false;
};

/// Both integrable, commuting, and G = -J1 J2 a generalized metric.
inline GKResult is_generalized_kahler(const FrameContext& f, const BigOperator& j1, const BigOperator& j2, bool use_h) {
  GKResult r;
  r.j1 = check_gcx(f, j1, use_h);
  r.j2 = check_gcx(f, j2, use_h);
  r.commuting = detail::operator_check("J1 J2 = J2 J1", j1 * j2, j2 * j1);
  r.metric = check_metric(-(j1 * j2));
  r.generalized_kahler = r.j1.kind == GcxKind::integrable && r.j2.kind == GcxKind::integrable && r.commuting.pass &&
                         r.metric.ok();
  return r;
}

/// e^B: X + a -> X + a + i_X B.
inline BigOperator b_transform(const InvariantForm& b) {
  if (b.degree() != 2) throw PreconditionFailure("b_transform: B must be a 2-form");
  const std::size_t n = b.dim();
  Matrix m = Matrix::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ib = b.interior(GenSection::frame_vector(n, i).vec);
    for (const auto& [mask, c] : ib.terms()) m(n + InvariantForm::indices(mask).front(), i) = c;
  }
  return BigOperator(std::move(m));
}

inline void require_closed(const FrameContext& f, const InvariantForm& b) {
  require_same_frame(f, b.dim(), "bfield");
  if (b.degree() != 2) throw PreconditionFailure("bfield: B must be a 2-form");
  if (const auto db = exterior_derivative(f, b); !db.is_zero())
    throw PreconditionFailure("bfield: B is not closed, dB = " + db.str());
}

inline GenSection bfield(const FrameContext& f, const InvariantForm& b, const GenSection& u) {
  require_closed(f, b);
  return b_transform(b)(u);
}

inline BigOperator bfield(const FrameContext& f, const InvariantForm& b, const BigOperator& a) {
  require_closed(f, b);
  return b_transform(b) * a * b_transform(Scalar(-1) * b);
}

inline GenAlmostContact bfield(const FrameContext& f, const InvariantForm& b, const GenAlmostContact& s) {
  require_closed(f, b);
  const BigOperator eb = b_transform(b);
  GenAlmostContact out{eb * s.phi * b_transform(Scalar(-1) * b), eb(s.e_plus), eb(s.e_minus)};
  if (check_gac(s).ok()) detail::require(check_gac(out), "bfield (transformed structure)");
  return out;
}

inline GenContactMetric bfield(const FrameContext& f, const InvariantForm& b, const GenContactMetric& t) {
  GenContactMetric out{bfield(f, b, t.base), bfield(f, b, t.g)};
  if (gacm_axioms(t).ok()) detail::require(gacm_axioms(out), "bfield (transformed structure)");
  return out;
}

inline GenAlmostComplex bfield(const FrameContext& f, const InvariantForm& b, const GenAlmostComplex& j) {
  return {bfield(f, b, j.j)};
}

/// [[L+, E^(1,0)]] and [[L-, E^(1,0)]] both land in E^(1,0), tested on generators.
inline ClosureResult e10_closure_check(const FrameContext& f, const GenAlmostContact& s, bool use_h) {
  const Subspace e10 = eigenbundle_E10(s);
  const auto e10_gens = sections_of(e10);
  for (const Sign sign : {Sign::plus, Sign::minus})
    for (const auto& l : sections_of(build_L(s, sign)))
      for (const auto& e : e10_gens) {
        GenSection br = courant_bracket(f, l, e, use_h);
        if (!e10.contains(br.coords())) return {false, BracketWitness{l, e, std::move(br)}};
      }
  return {};
}

}  // namespace gcok

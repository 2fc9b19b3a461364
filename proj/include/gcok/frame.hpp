#pragma once

// Invariant-frame model of a manifold: a global frame X_1..X_n with constant
// structure coefficients [X_i, X_j] = c_ij^k X_k, its dual coframe s^1..s^n,
// invariant forms, sections X + alpha of the big tangent bundle, and the
// calculus (d, wedge, interior product, Courant bracket) acting on them.
//
// Sections are constant-coefficient combinations of the frame and coframe.
// Involutivity of an isotropic span can be decided on such generators alone:
// for constant A, B in an isotropic span and a function f,
//   [[A, fB]] = f[[A, B]] + (anchor(A) f) B - <A, B> df,
// and <A, B> = 0, so closure on the constant generators implies closure over
// all smooth combinations. Every involutivity check in the library relies on it.
//
// Conventions: (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X) (no 1/k!); i_X contracts
// the first slot; on 1-forms (d a)(X_i, X_j) = -a([X_i, X_j]), so
// [X_1, X_2] = -X_3 gives d s^3 = s^1 ^ s^2.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gcok/error.hpp"
#include "gcok/linalg.hpp"

namespace gcok {

/// Invariant k-form with coefficients on s^{i1} ^ ... ^ s^{ik}, i1 < ... < ik.
/// Multi-indices are bit masks over the coframe; only nonzero terms are stored.
class InvariantForm {
 public:
  using Mask = std::uint32_t;
  static constexpr std::size_t max_dim = 32;

  InvariantForm() = default;
  InvariantForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
    if (dim > max_dim) throw DimensionMismatch("InvariantForm: frame dimension exceeds 32");
  }

  static InvariantForm constant(std::size_t dim, const Scalar& c) {
    InvariantForm f(dim, 0);
    f.add_term(0, c);
    return f;
  }

  /// Coframe element s^i (0-based).
  static InvariantForm coframe(std::size_t dim, std::size_t i) {
    InvariantForm f(dim, 1);
    f.add_term(Mask(1) << i, 1);
    return f;
  }

  static InvariantForm one_form(const Vector& coords) {
    InvariantForm f(coords.size(), 1);
    for (std::size_t i = 0; i < coords.size(); ++i) f.add_term(Mask(1) << i, coords[i]);
    return f;
  }

  /// c * s^{i1} ^ ... ^ s^{ik} for an arbitrary (not necessarily sorted) index list.
  static InvariantForm monomial(std::size_t dim, std::vector<std::size_t> indices, const Scalar& c = 1) {
    InvariantForm f = constant(dim, c);
    for (auto i : indices) f = f.wedge(coframe(dim, i));
    return f;
  }

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const {
    for (const auto& [m, c] : terms_)
      if (!c.is_real()) return false;
    return true;
  }

  Scalar coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(Mask m, const Scalar& c) {
    if (static_cast<std::size_t>(std::popcount(m)) != degree_) throw DimensionMismatch("InvariantForm: term degree mismatch");
    if (dim_ < max_dim && (m >> dim_) != 0) throw DimensionMismatch("InvariantForm: index out of range");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static std::vector<std::size_t> indices(Mask m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; m != 0; ++i, m >>= 1)
      if (m & 1u) out.push_back(i);
    return out;
  }

  InvariantForm& operator+=(const InvariantForm& o) {
    require_compatible(o, "form addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  InvariantForm& operator-=(const InvariantForm& o) { return *this += Scalar(-1) * o; }
  friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
  friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }
  friend InvariantForm operator*(const Scalar& s, InvariantForm f) {
    if (s.is_zero()) return InvariantForm(f.dim_, f.degree_);
    for (auto& [m, c] : f.terms_) c *= s;
    return f;
  }
  friend bool operator==(const InvariantForm& a, const InvariantForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  InvariantForm wedge(const InvariantForm& o) const {
    if (o.dim_ != dim_) throw FrameMismatch("wedge: forms belong to different frames");
    InvariantForm out(dim_, degree_ + o.degree_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        if (ma & mb) continue;
        // sign of the shuffle: pairs (a in A, b in B) with a > b
        int inversions = 0;
        for (Mask bits = mb; bits != 0; bits &= bits - 1) {
          const Mask lowest = bits & (~bits + 1);
          inversions += std::popcount(ma & ~(lowest | (lowest - 1)));
        }
        out.add_term(ma | mb, inversions % 2 == 0 ? ca * cb : -(ca * cb));
      }
    return out;
  }

  /// i_X: contraction in the first slot.
  InvariantForm interior(const Vector& x) const {
    if (x.size() != dim_) throw FrameMismatch("interior product: vector belongs to a different frame");
    if (degree_ == 0) throw PreconditionFailure("interior product of a degree-0 form");
    InvariantForm out(dim_, degree_ - 1);
    for (const auto& [m, c] : terms_) {
      int position = 0;
      for (auto i : indices(m)) {
        if (!x[i].is_zero()) {
          const Scalar v = c * x[i];
          out.add_term(m & ~(Mask(1) << i), position % 2 == 0 ? v : -v);
        }
        ++position;
      }
    }
    return out;
  }

  /// Value on a list of k vectors: sum of coefficient * det[s^{i_a}(Y_b)].
  Scalar evaluate(const std::vector<Vector>& args) const {
    if (args.size() != degree_) throw DimensionMismatch("evaluate: wrong number of arguments");
    Scalar total = 0;
    for (const auto& [m, c] : terms_) {
      const auto idx = indices(m);
      Matrix a(degree_, degree_);
      for (std::size_t r = 0; r < degree_; ++r)
        for (std::size_t b = 0; b < degree_; ++b) a(r, b) = args[b].at(idx[r]);
      total += c * (degree_ == 0 ? Scalar(1) : determinant(a));
    }
    return total;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      for (auto i : indices(m)) os << " s" << i + 1;
    }
    return os.str();
  }

 private:
  void require_compatible(const InvariantForm& o, const char* what) const {
    if (o.dim_ != dim_) throw FrameMismatch(std::string(what) + ": forms belong to different frames");
    if (o.degree_ != degree_) throw DimensionMismatch(std::string(what) + ": degree mismatch");
  }

  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<Mask, Scalar> terms_;
};

/// One structure constant c_ij^k (0-based indices).
struct BracketTerm {
  std::size_t i, j, k;
  Scalar c;
};

/// Result of validating a frame; empty iff the frame is a Lie algebra with closed H.
struct FrameReport {
  std::vector<std::string> issues;
  bool valid() const { return issues.empty(); }
};

class FrameContext {
 public:
  FrameContext(std::string name, std::size_t dim, const std::vector<BracketTerm>& brackets = {},
               std::optional<InvariantForm> h = std::nullopt)
      : name_(std::move(name)), dim_(dim), c_(dim * dim * dim), h_(std::move(h)) {
    if (dim == 0) throw PreconditionFailure("FrameContext: dimension must be positive");
    if (dim > InvariantForm::max_dim) throw PreconditionFailure("FrameContext: dimension exceeds 32");
    for (const auto& t : brackets) {
      if (t.i >= dim || t.j >= dim || t.k >= dim) throw PreconditionFailure("FrameContext: bracket index out of range");
      if (t.i == t.j) {
        if (!t.c.is_zero()) throw PreconditionFailure("FrameContext: [X_i, X_i] must vanish");
        continue;
      }
      at(t.i, t.j, t.k) += t.c;
      at(t.j, t.i, t.k) -= t.c;
    }
    if (h_) {
      if (h_->dim() != dim) throw FrameMismatch("FrameContext: H belongs to a different frame");
      if (h_->degree() != 3) throw PreconditionFailure("FrameContext: H must be a 3-form");
    }
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::optional<InvariantForm>& h() const { return h_; }
  bool has_h() const { return h_.has_value(); }

  /// c_ij^k, antisymmetric in (i, j).
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  /// Nonzero structure constants with i < j.
  std::vector<BracketTerm> brackets() const {
    std::vector<BracketTerm> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!c(i, j, k).is_zero()) out.push_back({i, j, k, c(i, j, k)});
    return out;
  }

  bool is_abelian() const { return is_zero(c_); }

  friend bool operator==(const FrameContext& a, const FrameContext& b) {
    return a.name_ == b.name_ && a.dim_ == b.dim_ && a.c_ == b.c_ && a.h_ == b.h_;
  }

  FrameContext with_h(std::optional<InvariantForm> h) const { return FrameContext(name_, dim_, brackets(), std::move(h)); }

 private:
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  std::string name_;
  std::size_t dim_;
  std::vector<Scalar> c_;
  std::optional<InvariantForm> h_;
};

inline void require_same_frame(const FrameContext& f, std::size_t n, const char* what) {
  if (f.dim() != n) throw FrameMismatch(std::string(what) + ": object does not belong to frame '" + f.name() + "'");
}

/// Bilinear extension of [X_i, X_j] = c_ij^k X_k.
inline Vector lie_bracket(const FrameContext& f, const Vector& x, const Vector& y) {
  require_same_frame(f, x.size(), "lie_bracket");
  require_same_frame(f, y.size(), "lie_bracket");
  const std::size_t n = f.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!f.c(i, j, k).is_zero()) out[k] += xy * f.c(i, j, k);
    }
  }
  return out;
}

/// Chevalley-Eilenberg differential: d s^k = -sum_{i<j} c_ij^k s^i ^ s^j,
/// extended as an antiderivation; constants are closed.
inline InvariantForm exterior_derivative(const FrameContext& f, const InvariantForm& w) {
  require_same_frame(f, w.dim(), "exterior_derivative");
  const std::size_t n = f.dim();
  std::vector<InvariantForm> d_coframe;
  for (std::size_t k = 0; k < n; ++k) {
    InvariantForm dk(n, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!f.c(i, j, k).is_zero()) dk.add_term((1u << i) | (1u << j), -f.c(i, j, k));
    d_coframe.push_back(std::move(dk));
  }
  InvariantForm out(n, w.degree() + 1);
  for (const auto& [m, c] : w.terms()) {
    const auto idx = InvariantForm::indices(m);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      InvariantForm term = InvariantForm::constant(n, p % 2 == 0 ? c : -c);
      for (std::size_t q = 0; q < idx.size(); ++q)
        term = term.wedge(q == p ? d_coframe[idx[q]] : InvariantForm::coframe(n, idx[q]));
      out += term;
    }
  }
  return out;
}

inline InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) { return a.wedge(b); }
inline InvariantForm interior_product(const Vector& x, const InvariantForm& w) { return w.interior(x); }

/// Basis of the closed invariant k-forms (kernel of d on degree k).
inline std::vector<InvariantForm> closed_forms(const FrameContext& f, std::size_t degree) {
  const std::size_t n = f.dim();
  std::vector<InvariantForm::Mask> domain;
  for (InvariantForm::Mask m = 0; m < (InvariantForm::Mask(1) << n); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == degree) domain.push_back(m);
  std::vector<InvariantForm::Mask> codomain;
  for (InvariantForm::Mask m = 0; m < (InvariantForm::Mask(1) << n); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == degree + 1) codomain.push_back(m);
  Matrix dm(std::max<std::size_t>(codomain.size(), 1), domain.size());
  for (std::size_t col = 0; col < domain.size(); ++col) {
    InvariantForm e(n, degree);
    e.add_term(domain[col], 1);
    const auto de = exterior_derivative(f, e);
    for (std::size_t row = 0; row < codomain.size(); ++row) dm(row, col) = de.coefficient(codomain[row]);
  }
  std::vector<InvariantForm> out;
  const Subspace closed = kernel(dm);
  for (const auto& v : closed.basis()) {
    InvariantForm w(n, degree);
    for (std::size_t col = 0; col < domain.size(); ++col) w.add_term(domain[col], v[col]);
    out.push_back(std::move(w));
  }
  return out;
}

/// Lists Jacobi violations and, when H is present, dH != 0 or non-real H.
inline FrameReport check_frame(const FrameContext& f) {
  FrameReport report;
  const std::size_t n = f.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar sum = 0;
          for (std::size_t m = 0; m < n; ++m)
            sum += f.c(i, j, m) * f.c(m, k, l) + f.c(j, k, m) * f.c(m, i, l) + f.c(k, i, m) * f.c(m, j, l);
          if (!sum.is_zero()) {
            std::ostringstream os;
            os << "Jacobi identity fails on (X" << i + 1 << ", X" << j + 1 << ", X" << k + 1 << "): component X" << l + 1
               << " = " << sum;
            report.issues.push_back(os.str());
          }
        }
  if (f.h()) {
    if (!f.h()->is_real()) report.issues.push_back("H is not real");
    const auto dh = exterior_derivative(f, *f.h());
    if (!dh.is_zero()) report.issues.push_back("H is not closed: dH = " + dh.str());
  }
  return report;
}

/// Section X + alpha of the (complexified) big tangent bundle, stored as
/// frame coordinates of X and coframe coordinates of alpha.
struct GenSection {
  Vector vec;
  Vector form;

  GenSection() = default;
  explicit GenSection(std::size_t n) : vec(n), form(n) {}
  GenSection(Vector v, Vector a) : vec(std::move(v)), form(std::move(a)) {
    if (vec.size() != form.size()) throw DimensionMismatch("GenSection: vector and form parts differ in size");
  }

  /// X_i (0-based).
  static GenSection frame_vector(std::size_t n, std::size_t i) {
    GenSection s(n);
    s.vec.at(i) = 1;
    return s;
  }
  /// s^i (0-based).
  static GenSection coframe_vector(std::size_t n, std::size_t i) {
    GenSection s(n);
    s.form.at(i) = 1;
    return s;
  }

  /// Coordinates in the (X_1..X_n, s^1..s^n) basis.
  static GenSection from_coords(const Vector& c) {
    if (c.size() % 2 != 0) throw DimensionMismatch("GenSection::from_coords: odd length");
    const auto n = static_cast<std::ptrdiff_t>(c.size() / 2);
    return {Vector(c.begin(), c.begin() + n), Vector(c.begin() + n, c.end())};
  }

  std::size_t dim() const { return vec.size(); }
  Vector coords() const {
    Vector c = vec;
    c.insert(c.end(), form.begin(), form.end());
    return c;
  }
  bool is_zero() const { return gcok::is_zero(vec) && gcok::is_zero(form); }

  GenSection& operator+=(const GenSection& o) {
    vec = vec + o.vec;
    form = form + o.form;
    return *this;
  }
  GenSection& operator-=(const GenSection& o) {
    vec = vec - o.vec;
    form = form - o.form;
    return *this;
  }
  friend GenSection operator+(GenSection a, const GenSection& b) { return a += b; }
  friend GenSection operator-(GenSection a, const GenSection& b) { return a -= b; }
  friend GenSection operator*(const Scalar& s, GenSection u) { return {s * std::move(u.vec), s * std::move(u.form)}; }
  GenSection operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const GenSection& a, const GenSection& b) = default;

  /// Human-readable form such as "X1 - i X2" or "-X3 + s3".
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Scalar& c, const std::string& name) {
      if (c.is_zero()) return;
      Scalar shown = c;
      bool negative = false;
      if (c.is_real() ? c.re() < 0 : (c.re() == 0 && c.im() < 0)) {
        negative = true;
        shown = -c;
      }
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      first = false;
      if (shown == Scalar(1)) {
      } else if (shown == Scalar::i()) {
        os << "i ";
      } else if (shown.is_real()) {
        os << shown.str() << " ";
      } else if (shown.re() == 0) {
        os << Rational(shown.im()).str() << " i ";
      } else {
        os << "(" << shown.str() << ") ";
      }
      os << name;
    };
    for (std::size_t i = 0; i < vec.size(); ++i) emit(vec[i], "X" + std::to_string(i + 1));
    for (std::size_t i = 0; i < form.size(); ++i) emit(form[i], "s" + std::to_string(i + 1));
    return first ? "0" : os.str();
  }
};

/// <X + a, Y + b> = (b(X) + a(Y)) / 2.
inline Scalar pairing(const GenSection& u, const GenSection& v) {
  if (u.dim() != v.dim()) throw FrameMismatch("pairing: sections belong to different frames");
  Scalar s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += v.form[i] * u.vec[i] + u.form[i] * v.vec[i];
  return Scalar::fraction(1, 2) * s;
}

/// (H-twisted) Courant bracket of constant sections:
/// [X, Y] + i_X d b - i_Y d a + i_Y i_X H. The Lie derivatives reduce to
/// i_X d via Cartan's formula, and d(i_X b - i_Y a) = 0 for constants.
inline GenSection courant_bracket(const FrameContext& f, const GenSection& u, const GenSection& v, bool use_h) {
  require_same_frame(f, u.dim(), "courant_bracket");
  require_same_frame(f, v.dim(), "courant_bracket");
  if (use_h && !f.has_h()) throw PreconditionFailure("courant_bracket: twisted bracket requested but frame has no H");
  const std::size_t n = f.dim();
  GenSection out(n);
  out.vec = lie_bracket(f, u.vec, v.vec);
  InvariantForm form(n, 1);
  if (!is_zero(v.form)) form += exterior_derivative(f, InvariantForm::one_form(v.form)).interior(u.vec);
  if (!is_zero(u.form)) form -= exterior_derivative(f, InvariantForm::one_form(u.form)).interior(v.vec);
  if (use_h) form += f.h()->interior(u.vec).interior(v.vec);
  for (const auto& [m, c] : form.terms()) out.form[InvariantForm::indices(m).front()] = c;
  return out;
}

/// Direct product of two frames with embeddings of the factor data. Product
/// coordinates are ordered (X of first, X of second, s of first, s of second).
class ProductContext {
 public:
  ProductContext(const FrameContext& first, const FrameContext& second)
      : n1_(first.dim()), n2_(second.dim()), frame_(make_frame(first, second)) {}

  const FrameContext& frame() const { return frame_; }
  std::size_t first_dim() const { return n1_; }
  std::size_t second_dim() const { return n2_; }

  GenSection first(const GenSection& u) const {
    if (u.dim() != n1_) throw FrameMismatch("ProductContext::first: section not on the first factor");
    GenSection out(n1_ + n2_);
    for (std::size_t i = 0; i < n1_; ++i) {
      out.vec[i] = u.vec[i];
      out.form[i] = u.form[i];
    }
    return out;
  }
  GenSection second(const GenSection& u) const {
    if (u.dim() != n2_) throw FrameMismatch("ProductContext::second: section not on the second factor");
    GenSection out(n1_ + n2_);
    for (std::size_t i = 0; i < n2_; ++i) {
      out.vec[n1_ + i] = u.vec[i];
      out.form[n1_ + i] = u.form[i];
    }
    return out;
  }
  GenSection pair(const GenSection& a, const GenSection& b) const { return first(a) + second(b); }

  GenSection project_first(const GenSection& u) const {
    return {Vector(u.vec.begin(), u.vec.begin() + static_cast<std::ptrdiff_t>(n1_)),
            Vector(u.form.begin(), u.form.begin() + static_cast<std::ptrdiff_t>(n1_))};
  }
  GenSection project_second(const GenSection& u) const {
    return {Vector(u.vec.begin() + static_cast<std::ptrdiff_t>(n1_), u.vec.end()),
            Vector(u.form.begin() + static_cast<std::ptrdiff_t>(n1_), u.form.end())};
  }

  /// Block-diagonal operator a (+) b on the product big tangent space; both act in
  /// their own (X, s) bases.
  Matrix block_sum(const Matrix& a, const Matrix& b) const {
    if (a.rows() != 2 * n1_ || !a.is_square() || b.rows() != 2 * n2_ || !b.is_square())
      throw DimensionMismatch("ProductContext::block_sum: operator sizes do not match the factors");
    const std::size_t n = n1_ + n2_;
    Matrix out(2 * n, 2 * n);
    const auto idx1 = [&](std::size_t k) { return k < n1_ ? k : n + (k - n1_); };
    const auto idx2 = [&](std::size_t k) { return k < n2_ ? n1_ + k : n + n1_ + (k - n2_); };
    for (std::size_t r = 0; r < 2 * n1_; ++r)
      for (std::size_t c = 0; c < 2 * n1_; ++c) out(idx1(r), idx1(c)) = a(r, c);
    for (std::size_t r = 0; r < 2 * n2_; ++r)
      for (std::size_t c = 0; c < 2 * n2_; ++c) out(idx2(r), idx2(c)) = b(r, c);
    return out;
  }

  /// Tangent-only block sum for n x n endomorphisms of the factors.
  Matrix tangent_block_sum(const Matrix& a, const Matrix& b) const {
    Matrix out(n1_ + n2_, n1_ + n2_);
    out.set_block(0, 0, a);
    out.set_block(n1_, n1_, b);
    return out;
  }

  InvariantForm pull_first(const InvariantForm& w) const { return shift(w, 0); }
  InvariantForm pull_second(const InvariantForm& w) const { return shift(w, n1_); }

 private:
  InvariantForm shift(const InvariantForm& w, std::size_t offset) const {
    InvariantForm out(n1_ + n2_, w.degree());
    for (const auto& [m, c] : w.terms()) out.add_term(m << offset, c);
    return out;
  }

  FrameContext make_frame(const FrameContext& a, const FrameContext& b) const {
    std::vector<BracketTerm> terms = a.brackets();
    for (auto t : b.brackets()) terms.push_back({t.i + n1_, t.j + n1_, t.k + n1_, t.c});
    std::optional<InvariantForm> h;
    if (a.has_h() || b.has_h()) {
      InvariantForm sum(n1_ + n2_, 3);
      if (a.has_h()) sum += shift(*a.h(), 0);
      if (b.has_h()) sum += shift(*b.h(), n1_);
      h = std::move(sum);
    }
    return FrameContext(a.name() + "x" + b.name(), n1_ + n2_, terms, std::move(h));
  }

  std::size_t n1_, n2_;
  FrameContext frame_;
};

inline ProductContext product_context(const FrameContext& a, const FrameContext& b) { return {a, b}; }

}  // namespace gcok

#pragma once

// Bridges from classical tensors (almost contact metric, complex, symplectic)
// to generalized structures, and the product constructions that combine two
// odd-dimensional structures into an even-dimensional one.

#include <string>
#include <utility>
#include <vector>

#include "gcok/frame.hpp"
#include "gcok/structures.hpp"

namespace gcok {

/// Almost contact metric data (phi, xi, eta, g) on an invariant frame.
/// phi and g are n x n matrices in the frame basis (columns are images),
/// xi holds frame coordinates and eta coframe coordinates.
struct ClassicalACM {
  Matrix phi;
  Vector xi;
  Vector eta;
  Matrix g;

  std::size_t dim() const { return phi.rows(); }
  friend bool operator==(const ClassicalACM&, const ClassicalACM&) = default;
};

struct ClassicalComplex {
  Matrix j;
};

struct ClassicalSymplectic {
  InvariantForm omega;
};

inline Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

/// phi^2 = -Id + xi (x) eta with (xi (x) eta)(X) = eta(X) xi, and eta(xi) = 1.
inline Report check_almost_contact(const ClassicalACM& a) {
  const std::size_t n = a.dim();
  if (!a.phi.is_square() || a.xi.size() != n || a.eta.size() != n)
    throw DimensionMismatch("ClassicalACM: inconsistent dimensions");
  Report r;
  const Matrix rhs = Matrix::outer(a.xi, a.eta) - Matrix::identity(n);
  Check sq{"phi^2 = -Id + xi (x) eta", a.phi * a.phi == rhs, {}};
  if (!sq.pass) sq.witness = "phi^2 differs from -Id + xi (x) eta";
  r.add(sq);
  Scalar eta_xi = 0;
  for (std::size_t k = 0; k < n; ++k) eta_xi += a.eta[k] * a.xi[k];
  r.add(detail::scalar_check("eta(xi) = 1", eta_xi, 1, "eta(xi)"));
  return r;
}

/// Almost contact axioms plus: g real symmetric positive definite and
/// g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y).
inline Report check_acm(const ClassicalACM& a) {
  Report r = check_almost_contact(a);
  const std::size_t n = a.dim();
  if (a.g.rows() != n || a.g.cols() != n) throw DimensionMismatch("ClassicalACM: metric has wrong size");
  Check metric{"g symmetric positive definite", false, {}};
  if (!a.g.is_real() || !a.g.is_symmetric())
    metric.witness = "g is not real symmetric";
  else if (!(metric.pass = is_positive_definite(a.g)))
    metric.witness = "g has a non-positive leading principal minor";
  r.add(metric);
  Check compat{"g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)",
               a.phi.transpose() * a.g * a.phi == a.g - Matrix::outer(a.eta, a.eta), {}};
  if (!compat.pass) compat.witness = "phi^T g phi differs from g - eta eta^T";
  r.add(compat);
  return r;
}

/// Omega(X, Y) = g(X, phi Y).
inline InvariantForm fundamental_form(const ClassicalACM& a) {
  detail::require(check_acm(a), "fundamental_form");
  const std::size_t n = a.dim();
  const Matrix values = a.g * a.phi;  // values(i, j) = g(X_i, phi X_j)
  if (values.transpose() != -values) throw AxiomFailure("fundamental_form: g(X, phi Y) is not antisymmetric");
  InvariantForm omega(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) omega.add_term((1u << i) | (1u << j), values(i, j));
  return omega;
}

/// N_I(X, Y) = [IX, IY] + I^2 [X, Y] - I [X, IY] - I [IX, Y] for frame vectors.
inline Vector nijenhuis(const FrameContext& f, const Matrix& endo, const Vector& x, const Vector& y) {
  const Vector ix = endo * x;
  const Vector iy = endo * y;
  return lie_bracket(f, ix, iy) + endo * (endo * lie_bracket(f, x, y)) - endo * lie_bracket(f, x, iy) -
         endo * lie_bracket(f, ix, y);
}

/// Normality N_phi = -2 xi (x) d eta, written for the library's d (no 1/2
/// factor on 2-forms): N_phi(X, Y) = -(d eta)(X, Y) xi on every frame pair.
inline Check nijenhuis_check(const FrameContext& f, const ClassicalACM& a) {
  require_same_frame(f, a.dim(), "nijenhuis_normal");
  detail::require(check_almost_contact(a), "nijenhuis_normal");
  const std::size_t n = f.dim();
  const InvariantForm deta = exterior_derivative(f, InvariantForm::one_form(a.eta));
  Check c{"N_phi = -2 xi (x) d eta", true, {}};
  for (std::size_t i = 0; i < n && c.pass; ++i)
    for (std::size_t j = i + 1; j < n && c.pass; ++j) {
      const Vector x = unit_vector(n, i), y = unit_vector(n, j);
      const Vector lhs = nijenhuis(f, a.phi, x, y);
      const Vector rhs = -deta.evaluate({x, y}) * a.xi;
      if (lhs != rhs) {
        c.pass = false;
        c.witness = "N_phi(X" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) + ") = " +
                    GenSection(lhs, Vector(n)).str() + ", expected " + GenSection(rhs, Vector(n)).str();
      }
    }
  return c;
}

inline bool nijenhuis_normal(const FrameContext& f, const ClassicalACM& a) { return nijenhuis_check(f, a).pass; }

/// Classical coKahler: normal, d eta = 0 and d Omega = 0.
inline Report classical_cokahler(const FrameContext& f, const ClassicalACM& a) {
  Report r;
  r.add(nijenhuis_check(f, a));
  const InvariantForm deta = exterior_derivative(f, InvariantForm::one_form(a.eta));
  r.add({"d eta = 0", deta.is_zero(), deta.is_zero() ? "" : "d eta = " + deta.str()});
  const InvariantForm domega = exterior_derivative(f, fundamental_form(a));
  r.add({"d Omega = 0", domega.is_zero(), domega.is_zero() ? "" : "d Omega = " + domega.str()});
  return r;
}

/// Phi = diag(phi, -phi*), E+ = xi, E- = eta, where phi* alpha = alpha o phi.
inline GenAlmostContact gac_from_acm(const ClassicalACM& a) {
  detail::require(check_almost_contact(a), "gac_from_acm");
  const std::size_t n = a.dim();
  GenAlmostContact s{BigOperator::from_blocks(a.phi, Matrix(n, n), Matrix(n, n), -a.phi.transpose()),
                     GenSection(a.xi, Vector(n)), GenSection(Vector(n), a.eta)};
  detail::require(check_gac(s), "gac_from_acm (image)");
  return s;
}

/// Matrix of X -> i_X w for a 2-form w (column i = coframe coordinates of i_{X_i} w).
inline Matrix flat(const InvariantForm& w) {
  if (w.degree() != 2) throw PreconditionFailure("flat: expected a 2-form");
  const std::size_t n = w.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const InvariantForm column = w.interior(unit_vector(n, i));
    for (const auto& [mask, c] : column.terms()) m(InvariantForm::indices(mask).front(), i) = c;
  }
  return m;
}

/// rho(X) = i_X d eta - eta(X) eta, as a matrix whose column i is rho(X_i).
inline Matrix contact_rho(const FrameContext& f, const Vector& eta) {
  require_same_frame(f, eta.size(), "contact_rho");
  return flat(exterior_derivative(f, InvariantForm::one_form(eta))) - Matrix::outer(eta, eta);
}

/// Structure built from a contact form eta with Reeb field xi:
/// rho(X) = i_X d eta - eta(X) eta, pi(a, b) = d eta(rho^-1 a, rho^-1 b),
/// Phi = [[0, pi], [d eta, 0]], E+ = eta, E- = xi.
inline GenAlmostContact gac_from_contact(const FrameContext& f, const Vector& eta, const Vector& xi) {
  require_same_frame(f, eta.size(), "gac_from_contact");
  require_same_frame(f, xi.size(), "gac_from_contact");
  const std::size_t n = f.dim();
  const InvariantForm deta = exterior_derivative(f, InvariantForm::one_form(eta));
  if (!deta.interior(xi).is_zero()) throw PreconditionFailure("gac_from_contact: i_xi d eta != 0");
  Scalar eta_xi = 0;
  for (std::size_t k = 0; k < n; ++k) eta_xi += eta[k] * xi[k];
  if (eta_xi != Scalar(1)) throw PreconditionFailure("gac_from_contact: eta(xi) = " + eta_xi.str() + ", expected 1");

  const Matrix w = flat(deta);
  const Matrix rho = contact_rho(f, eta);
  if (rank(rho) < n) throw PreconditionFailure("gac_from_contact: rho is singular (eta is not a contact form)");
  const Matrix rho_inv = inverse(rho);
  Matrix pi(n, n);  // pi(j, a) = pi(s^a, s^j): column a is the vector pi(s^a, .)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j) pi(j, a) = deta.evaluate({rho_inv.column(a), rho_inv.column(j)});

  GenAlmostContact s{BigOperator::from_blocks(Matrix(n, n), pi, w, Matrix(n, n)), GenSection(Vector(n), eta),
                     GenSection(xi, Vector(n))};
  detail::require(check_gac(s), "gac_from_contact (image)");
  return s;
}

/// J_J = [[-J, 0], [0, J*]].
inline BigOperator gcx_from_complex(const ClassicalComplex& c) {
  const std::size_t n = c.j.rows();
  if (!c.j.is_square()) throw DimensionMismatch("gcx_from_complex: J must be square");
  if (c.j * c.j != -Matrix::identity(n)) throw AxiomFailure("gcx_from_complex: J^2 != -Id");
  return BigOperator::from_blocks(-c.j, Matrix(n, n), Matrix(n, n), c.j.transpose());
}

/// J_omega = [[0, -omega^-1], [omega, 0]] with omega acting as X -> i_X omega.
inline BigOperator gcx_from_symplectic(const FrameContext& f, const ClassicalSymplectic& s) {
  require_same_frame(f, s.omega.dim(), "gcx_from_symplectic");
  const Matrix w = flat(s.omega);
  if (rank(w) < f.dim()) throw PreconditionFailure("gcx_from_symplectic: omega is degenerate");
  if (const auto dw = exterior_derivative(f, s.omega); !dw.is_zero())
    throw AxiomFailure("gcx_from_symplectic: omega is not closed, d omega = " + dw.str());
  const std::size_t n = f.dim();
  return BigOperator::from_blocks(Matrix(n, n), -inverse(w), w, Matrix(n, n));
}

/// G = [[0, g^-1], [g, 0]].
inline BigOperator metric_from_g(const Matrix& g) {
  const std::size_t n = g.rows();
  return BigOperator::from_blocks(Matrix(n, n), inverse(g), g, Matrix(n, n));
}

/// Phi_Omega = [[0, pi#], [Omega_flat, 0]] with Omega_flat(X) = Omega(., X) and
/// pi# = g^-1 Omega_flat g^-1, the unique choice making G Phi_phi = Phi_Omega.
inline BigOperator phi_omega(const ClassicalACM& a) {
  const std::size_t n = a.dim();
  const InvariantForm omega = fundamental_form(a);
  Matrix omega_flat(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) omega_flat(k, i) = omega.evaluate({unit_vector(n, k), unit_vector(n, i)});
  const Matrix g_inv = inverse(a.g);
  return BigOperator::from_blocks(Matrix(n, n), g_inv * omega_flat * g_inv, omega_flat, Matrix(n, n));
}

/// phi g^-1 phi* a + phi* g phi X = g^-1 a + g X - a(xi) xi - eta(X) eta, as two block identities.
inline Check classical_compat_check(const ClassicalACM& a) {
  const Matrix g_inv = inverse(a.g);
  const Matrix pt = a.phi.transpose();
  const bool forms = a.phi * g_inv * pt == g_inv - Matrix::outer(a.xi, a.xi);
  const bool vectors = pt * a.g * a.phi == a.g - Matrix::outer(a.eta, a.eta);
  Check c{"phi g^-1 phi* + phi* g phi = g^-1 + g - xi (x) xi - eta (x) eta", forms && vectors, {}};
  if (!forms) c.witness = "T* -> T block differs";
  if (!vectors) c.witness = "T -> T* block differs";
  return c;
}

/// (Phi_phi, xi, eta, [[0, g^-1], [g, 0]]), verified compatible and with G Phi_phi = Phi_Omega.
inline GenContactMetric cokahler_triple(const ClassicalACM& a) {
  detail::require(check_acm(a), "cokahler_triple");
  GenContactMetric t{gac_from_acm(a), metric_from_g(a.g)};
  if (const Check c = classical_compat_check(a); !c.pass) throw AxiomFailure("cokahler_triple: " + c.witness);
  if (!check_compat(t)) throw AxiomFailure("cokahler_triple: compatibility fails");
  if (t.g * t.base.phi != phi_omega(a)) throw AxiomFailure("cokahler_triple: G Phi_phi != Phi_Omega");
  return t;
}

/// J(X, Y) = (phi1 X - eta2(Y) xi1, phi2 Y + eta1(X) xi2) on T(M1 x M2).
inline Matrix morimoto_J(const ClassicalACM& a1, const ClassicalACM& a2) {
  detail::require(check_almost_contact(a1), "morimoto_J (first factor)");
  detail::require(check_almost_contact(a2), "morimoto_J (second factor)");
  const std::size_t n1 = a1.dim(), n2 = a2.dim();
  Matrix j(n1 + n2, n1 + n2);
  j.set_block(0, 0, a1.phi);
  j.set_block(0, n1, -Matrix::outer(a1.xi, a2.eta));
  j.set_block(n1, 0, Matrix::outer(a2.xi, a1.eta));
  j.set_block(n1, n1, a2.phi);
  if (j * j != -Matrix::identity(n1 + n2)) throw AxiomFailure("morimoto_J: J^2 != -Id");
  return j;
}

/// Classical Kahler test for (J, g) on a frame: J^2 = -Id, g J-invariant,
/// N_J = 0 and omega(X, Y) = g(X, J Y) closed.
inline Report classical_kahler(const FrameContext& f, const Matrix& j, const Matrix& g) {
  const std::size_t n = f.dim();
  Report r;
  r.add({"J^2 = -Id", j * j == -Matrix::identity(n), {}});
  r.add({"g(JX, JY) = g(X, Y)", j.transpose() * g * j == g, {}});
  Check integrable{"N_J = 0", true, {}};
  for (std::size_t a = 0; a < n && integrable.pass; ++a)
    for (std::size_t b = a + 1; b < n && integrable.pass; ++b) {
      const Vector nab = nijenhuis(f, j, unit_vector(n, a), unit_vector(n, b));
      if (!is_zero(nab)) {
        integrable.pass = false;
        integrable.witness = "N_J(X" + std::to_string(a + 1) + ", X" + std::to_string(b + 1) + ") = " +
                             GenSection(nab, Vector(n)).str();
      }
    }
  r.add(integrable);
  InvariantForm omega(n, 2);
  const Matrix values = g * j;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) omega.add_term((1u << a) | (1u << b), values(a, b));
  const auto domega = exterior_derivative(f, omega);
  r.add({"d omega = 0", domega.is_zero(), domega.is_zero() ? "" : "d omega = " + domega.str()});
  return r;
}

/// Generalized almost complex structure on M1 x M2 built from two generalized
/// almost contact structures:
///   J1(u1, u2) = (Phi1 u1 - 2<E+2, u2> E+1 - 2<E-2, u2> E-1,
///                 Phi2 u2 + 2<E+1, u1> E+2 + 2<E-1, u1> E-2).
inline BigOperator product_J1(const ProductContext& pc, const GenAlmostContact& s1, const GenAlmostContact& s2) {
  detail::require(check_gac(s1), "product_J1 (first factor)");
  detail::require(check_gac(s2), "product_J1 (second factor)");
  BigOperator j(pc.block_sum(s1.phi.matrix(), s2.phi.matrix()));
  const GenSection ep1 = pc.first(s1.e_plus), em1 = pc.first(s1.e_minus);
  const GenSection ep2 = pc.second(s2.e_plus), em2 = pc.second(s2.e_minus);
  j = j - tensor(ep1, ep2) - tensor(em1, em2) + tensor(ep2, ep1) + tensor(em2, em1);
  return j;
}

inline BigOperator product_metric(const ProductContext& pc, const BigOperator& g1, const BigOperator& g2) {
  return BigOperator(pc.block_sum(g1.matrix(), g2.matrix()));
}

struct ProductJ2 {
  BigOperator j2;
  /// (E^(1,0)_{G1 Phi1}, 0), (0, E^(1,0)_{G2 Phi2}), (E+1, -i E+2), (E-1, -i E-2).
  std::vector<GenSection> generators;
};

/// J2 = G J1 for the product metric G = G1 x G2, with the generators of its +i eigenbundle.
inline ProductJ2 product_J2(const ProductContext& pc, const GenContactMetric& t1, const GenContactMetric& t2) {
  detail::require(gacm_axioms(t1), "product_J2 (first factor)");
  detail::require(gacm_axioms(t2), "product_J2 (second factor)");
  ProductJ2 out{product_metric(pc, t1.g, t2.g) * product_J1(pc, t1.base, t2.base), {}};
  for (const auto& e : sections_of(eigenbundle_E10(compose_GPhi(t1)))) out.generators.push_back(pc.first(e));
  for (const auto& e : sections_of(eigenbundle_E10(compose_GPhi(t2)))) out.generators.push_back(pc.second(e));
  const Scalar minus_i = -Scalar::i();
  out.generators.push_back(pc.pair(t1.base.e_plus, minus_i * t2.base.e_plus));
  out.generators.push_back(pc.pair(t1.base.e_minus, minus_i * t2.base.e_minus));
  return out;
}

struct ProductStructure {
  ProductContext context;
  GenContactMetric structure;
};

/// Generalized contact metric structure on M x N from a generalized Kahler pair
/// on M and a generalized coKahler structure on N:
/// Phi = (J1, Phi_N), E+- = (0, E_N+-), G = (-J1 J2) x G_N.
inline ProductStructure product_gk_gcok(const FrameContext& m, const BigOperator& j1, const BigOperator& j2,
                                        const FrameContext& nf, const GenContactMetric& t) {
  const GKResult gk = is_generalized_kahler(m, j1, j2, m.has_h());
  if (!gk.generalized_kahler) throw PreconditionFailure("product_gk_gcok: (J1, J2) is not generalized Kahler");
  if (!gacm_axioms(t).ok() || !is_cokahler(nf, t, nf.has_h()).cokahler)
    throw PreconditionFailure("product_gk_gcok: second factor is not generalized coKahler");
  ProductContext pc(m, nf);
  const BigOperator g_m = -(j1 * j2);
  GenContactMetric out{{BigOperator(pc.block_sum(j1.matrix(), t.base.phi.matrix())), pc.second(t.base.e_plus),
                        pc.second(t.base.e_minus)},
                       product_metric(pc, g_m, t.g)};
  return {std::move(pc), std::move(out)};
}

}  // namespace gcok

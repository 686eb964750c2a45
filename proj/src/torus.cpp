#include "kahler3/torus.hpp"

#include <algorithm>

#include "kahler3/factor.hpp"

namespace kahler3 {

namespace {

void build_graded(TorusSpec& t) {
  for (unsigned k = 0; k <= 6; ++k) t.by_degree[k] = exterior_power(t.h1_action, k);
  t.det6 = t.by_degree[6].at(0, 0);
}

}  // namespace

TorusSpec torus_from_poly(const IntPoly& p) {
  if (p.is_zero() || !p.is_monic())
    throw k3_error(errc::validation_not_monic, "characteristic polynomial must be monic");
  if (p.degree() != 6)
    throw k3_error(errc::validation_wrong_degree, "characteristic polynomial must have degree 6");
  if (p.c[0] != 1)
    throw k3_error(errc::validation_constant_term, "constant term must be 1");
  if (gcd_poly(p, derivative(p)).degree() > 0)
    throw k3_error(errc::validation_repeated_roots, "repeated roots are not allowed");
  if (count_real_roots(p) > 0)
    throw k3_error(errc::validation_real_root, "real roots are not allowed");

  TorusSpec t;
  t.source = TorusSource::poly;
  t.poly = p;
  t.h1_action = transpose(companion(p));
  build_graded(t);
  return t;
}

TorusSpec torus_from_matrix3(const RatMatrix& m) {
  if (m.rows != 3 || m.cols != 3)
    throw k3_error(errc::validation_wrong_degree, "matrix3 source must be 3x3");
  if (!is_integer_matrix(m))
    throw k3_error(errc::validation_not_unimodular, "matrix3 source must have integer entries");
  Rat d = det(m);
  if (d != 1 && d != -1)
    throw k3_error(errc::validation_not_unimodular, "matrix3 source must have determinant +-1");

  TorusSpec t;
  t.source = TorusSource::matrix3;
  t.matrix3 = m;
  // Degree 1: every entry e of m becomes the 2x2 block e*I_2 (each elliptic
  // factor contributes a real plane on which the integer action is scalar).
  t.h1_action = RatMatrix(6, 6);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      t.h1_action.at(2 * i, 2 * j) = m.at(i, j);
      t.h1_action.at(2 * i + 1, 2 * j + 1) = m.at(i, j);
    }
  // (1,1) block: Kronecker square of the transpose, outer-then-inner
  // row-major nesting.
  t.h11_action = kronecker(transpose(m), transpose(m));
  build_graded(t);
  return t;
}

TorusSpec torus_from_matrix3(const std::vector<std::vector<long>>& rows) {
  return torus_from_matrix3(RatMatrix::from_longs(rows));
}

const RatMatrix& induced_action(const TorusSpec& t, unsigned k) {
  if (k > 6) throw k3_error(errc::domain_error, "degree out of range 0..6");
  return t.by_degree[k];
}

bool verify_poincare_duality(const TorusSpec& t) {
  for (unsigned k = 0; k <= 6; ++k) {
    IntPoly a = charpoly(induced_action(t, k)).primitive_int();
    IntPoly b = charpoly(induced_action(t, 6 - k)).primitive_int();
    IntPoly r = reverse_poly(a);
    if (b != r && b != neg(r)) return false;
  }
  return true;
}

namespace {

// Sign of the permutation sending 0..5 to the concatenation s|t|u of three
// disjoint 2-subsets, or 0 if not disjoint.
int triple_sign(const std::vector<unsigned>& s, const std::vector<unsigned>& t,
                const std::vector<unsigned>& u) {
  unsigned perm[6];
  unsigned n = 0;
  for (unsigned v : s) perm[n++] = v;
  for (unsigned v : t) perm[n++] = v;
  for (unsigned v : u) perm[n++] = v;
  bool seen[6] = {false, false, false, false, false, false};
  for (unsigned i = 0; i < 6; ++i) {
    if (seen[perm[i]]) return 0;
    seen[perm[i]] = true;
  }
  int sign = 1;
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = i + 1; j < 6; ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

}  // namespace

bool wedge_pairing_invariance(const TorusSpec& t) {
  const RatMatrix& f2 = induced_action(t, 2);
  const size_t n = 15;
  std::vector<std::vector<unsigned>> subs(n);
  for (size_t i = 0; i < n; ++i) subs[i] = subset_unrank(i, 6, 2);

  // Signature table of the trilinear pairing on basis elements.
  std::vector<int> sig(n * n * n, 0);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) sig[(a * n + b) * n + c] = triple_sign(subs[a], subs[b], subs[c]);

  // The 90 ordered partitions of {0..5} into three 2-subsets.
  struct Part {
    size_t a, b, c;
    int sign;
  };
  std::vector<Part> parts;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        int s = sig[(a * n + b) * n + c];
        if (s != 0) parts.push_back({a, b, c, s});
      }

  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        Rat lhs(0);
        for (const Part& p : parts) {
          const Rat& fa = f2.at(p.a, a);
          if (sgn(fa) == 0) continue;
          const Rat& fb = f2.at(p.b, b);
          if (sgn(fb) == 0) continue;
          const Rat& fc = f2.at(p.c, c);
          if (sgn(fc) == 0) continue;
          Rat term = fa * fb;
          term *= fc;
          if (p.sign < 0)
            lhs -= term;
          else
            lhs += term;
        }
        Rat rhs = t.det6 * Rat(sig[(a * n + b) * n + c]);
        if (lhs != rhs) return false;
      }
  return true;
}

namespace {

// Triple-wedge integral of three degree-2 classes given by coefficient
// vectors in the lexicographic 2-subset basis.
Rat triple_integral(const std::vector<Rat>& x, const std::vector<Rat>& y, const std::vector<Rat>& z,
                    const std::vector<std::vector<unsigned>>& subs) {
  Rat acc(0);
  const size_t n = 15;
  for (size_t a = 0; a < n; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (size_t b = 0; b < n; ++b) {
      if (sgn(y[b]) == 0) continue;
      for (size_t c = 0; c < n; ++c) {
        if (sgn(z[c]) == 0) continue;
        int s = triple_sign(subs[a], subs[b], subs[c]);
        if (s == 0) continue;
        Rat term = x[a] * y[b];
        term *= z[c];
        if (s < 0)
          acc -= term;
        else
          acc += term;
      }
    }
  }
  return acc;
}

std::vector<Rat> basis_vec(size_t n, std::initializer_list<std::pair<size_t, int>> entries) {
  std::vector<Rat> v(n, Rat(0));
  for (auto& [i, coef] : entries) v[i] = coef;
  return v;
}

}  // namespace

HodgeSignature hodge_form_signature(const TorusSpec& t) {
  if (t.source != TorusSource::matrix3)
    throw k3_error(errc::unsupported,
                   "the rational Hodge blocks split only for matrix3-sourced tori");

  const size_t n = 15;
  std::vector<std::vector<unsigned>> subs(n);
  for (size_t i = 0; i < n; ++i) subs[i] = subset_unrank(i, 6, 2);
  auto idx = [&](unsigned i, unsigned j) {
    std::vector<unsigned> s{i, j};
    return subset_rank(s, 6);
  };

  // Real coordinates: basis vector 2k is x_{k+1}, vector 2k+1 is y_{k+1}.
  // The standard Kaehler class is x1^y1 + x2^y2 + x3^y3.
  std::vector<Rat> omega = basis_vec(n, {{idx(0, 1), 1}, {idx(2, 3), 1}, {idx(4, 5), 1}});

  // Rational (1,1) block: the three coordinate area forms, plus for each
  // factor pair j<k the real and imaginary parts of dz_j ^ conj(dz_k).
  std::vector<std::vector<Rat>> b11;
  b11.push_back(basis_vec(n, {{idx(0, 1), 1}}));
  b11.push_back(basis_vec(n, {{idx(2, 3), 1}}));
  b11.push_back(basis_vec(n, {{idx(4, 5), 1}}));
  const unsigned planes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto& pr : planes) {
    unsigned xj = 2 * pr[0], yj = 2 * pr[0] + 1, xk = 2 * pr[1], yk = 2 * pr[1] + 1;
    // Re(dz_j ^ conj(dz_k)) = x_j^x_k + y_j^y_k
    b11.push_back(basis_vec(n, {{idx(xj, xk), 1}, {idx(yj, yk), 1}}));
    // Im(dz_j ^ conj(dz_k)) = y_j^x_k - x_j^y_k (yj < xk whenever j < k,
    // so both wedges are already in increasing index order)
    b11.push_back(basis_vec(n, {{idx(yj, xk), 1}, {idx(xj, yk), -1}}));
  }

  // Rational (2,0)+(0,2) block: real and imaginary parts of dz_j ^ dz_k.
  std::vector<std::vector<Rat>> b20;
  for (auto& pr : planes) {
    unsigned xj = 2 * pr[0], yj = 2 * pr[0] + 1, xk = 2 * pr[1], yk = 2 * pr[1] + 1;
    // Re(dz_j ^ dz_k) = x_j^x_k - y_j^y_k
    b20.push_back(basis_vec(n, {{idx(xj, xk), 1}, {idx(yj, yk), -1}}));
    // Im(dz_j ^ dz_k) = x_j^y_k + y_j^x_k
    b20.push_back(basis_vec(n, {{idx(xj, yk), 1}, {idx(yj, xk), 1}}));
  }

  auto gram = [&](const std::vector<std::vector<Rat>>& u, const std::vector<std::vector<Rat>>& v) {
    RatMatrix g(u.size(), v.size());
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j) g.at(i, j) = triple_integral(u[i], v[j], omega, subs);
    return g;
  };

  HodgeSignature out;
  RatMatrix g11 = gram(b11, b11);
  // The index form flips sign on the (2,0)+(0,2) block relative to the
  // plain cup product; with this twist the block is negative definite.
  RatMatrix g20 = mul_scalar(gram(b20, b20), Rat(-1));
  out.block11 = signature_of_symmetric(g11);
  out.block20 = signature_of_symmetric(g20);
  RatMatrix cross = gram(b11, b20);
  out.orthogonal = true;
  for (const Rat& v : cross.a)
    if (sgn(v) != 0) out.orthogonal = false;
  return out;
}

namespace {

// Certified root balls of an integer polynomial that may have repeated
// factors: one ball per root of each irreducible factor, repeated by
// multiplicity.
std::vector<ComplexBall> roots_with_multiplicity(const IntPoly& p) {
  std::vector<ComplexBall> out;
  FactorList fl = factor_over_Z(p);
  for (const Factor& f : fl.factors) {
    std::vector<ComplexBall> balls = certified_roots(f.poly);
    for (int m = 0; m < f.multiplicity; ++m)
      for (const ComplexBall& b : balls) out.push_back(b);
  }
  return out;
}

}  // namespace

HodgeSpectra hodge_spectra(const TorusSpec& t) {
  HodgeSpectra out;
  if (t.source == TorusSource::matrix3) {
    // Split spectra come straight from the 3x3 matrix: degree (2,0) from
    // its exterior square, (1,1) from the Kronecker square, (0,2) by
    // conjugation (identical for real spectra up to pairing).
    RatMatrix e2 = exterior_power(transpose(t.matrix3), 2);
    IntPoly cp20 = charpoly(e2).primitive_int();
    for (const ComplexBall& b : roots_with_multiplicity(cp20)) {
      SpectrumEntry e;
      e.value = b;
      out.h20.push_back(e);
      SpectrumEntry c;
      c.value = ball_conj(b);
      out.h02.push_back(c);
    }
    IntPoly cp11 = charpoly(t.h11_action).primitive_int();
    for (const ComplexBall& b : roots_with_multiplicity(cp11)) {
      SpectrumEntry e;
      e.value = b;
      out.h11.push_back(e);
    }
    return out;
  }

  // Poly source: refine until no ball can touch the real axis and the
  // conjugate pairing is unambiguous.
  Rat width(1, 1024);
  for (;;) {
    out.h1_roots = certified_roots_below(t.poly, width);
    bool clean = true;
    for (const ComplexBall& b : out.h1_roots)
      if (b.can_be_real()) clean = false;
    if (clean) {
      try {
        out.conj_pair = conjugate_pairing(out.h1_roots);
        break;
      } catch (const k3_error&) {
        // fall through to refinement
      }
    }
    width /= 16;
  }

  // One representative per conjugate pair: positive imaginary part.
  std::vector<int> reps;
  for (size_t i = 0; i < out.h1_roots.size(); ++i) {
    if (out.conj_pair[i] < i) continue;  // the partner already contributed
    const ComplexBall& b = out.h1_roots[i];
    reps.push_back(static_cast<int>(b.im > 0 ? i : out.conj_pair[i]));
  }
  if (reps.size() != 3)
    throw k3_error(errc::invariant_violation, "expected exactly three conjugate pairs");

  // Order the planes by descending modulus of the ball centers (ties kept
  // stable; the ordering is cosmetic and never affects the spectra sets).
  std::stable_sort(reps.begin(), reps.end(), [&](int a, int b) {
    const ComplexBall &x = out.h1_roots[a], &y = out.h1_roots[b];
    return x.re * x.re + x.im * x.im > y.re * y.re + y.im * y.im;
  });
  out.plane_root = {reps[0], reps[1], reps[2]};

  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      SpectrumEntry e;
      e.i = out.plane_root[i];
      e.j = out.plane_root[j];
      e.value = ball_mul(out.h1_roots[e.i], out.h1_roots[e.j]);
      out.h20.push_back(e);
      SpectrumEntry c;
      c.i = e.i;
      c.j = e.j;
      c.j_conjugated = true;  // marks the conjugate of the whole product
      c.value = ball_conj(e.value);
      out.h02.push_back(c);
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      SpectrumEntry e;
      e.i = out.plane_root[i];
      e.j = out.plane_root[j];
      e.j_conjugated = true;
      e.value = ball_mul(out.h1_roots[e.i], ball_conj(out.h1_roots[e.j]));
      out.h11.push_back(e);
    }
  return out;
}

}  // namespace kahler3

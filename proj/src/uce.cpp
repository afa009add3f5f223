#include "centext/uce.hpp"

#include "centext/catalog.hpp"
#include "centext/random.hpp"

namespace centext {

namespace {

RowVector tensor(const RowVector& x, const RowVector& y) { return kron<Scalar>(x, y); }

void check(bool ok, const std::string& what, std::vector<std::string>& log) {
  log.push_back(what + ": " + (ok ? "ok" : "FAILED"));
  ensure(ok, "uce construction: " + what);
}

std::string tensor_label(const Algebra& a, Index coordinate) {
  const Index d = a.dim();
  return "<" + a.labels()[coordinate / d] + "," + a.labels()[coordinate % d] + ">";
}

}  // namespace

Subspace cocycle_relations(const Algebra& a, const Variety& v) {
  check_field_supported(v, a.field());
  require(satisfies(a, v), "cocycle_relations: algebra does not satisfy " + v.name);
  const Field& field = a.field();
  SpanBuilder span(a.dim() * a.dim());
  for (const Law& law : v.laws) {
    std::vector<Scalar> coeffs;
    for (const auto& [c, t] : law.terms) {
      require(!t.is_leaf(), "cocycle_relations: law terms must be brackets");
      coeffs.push_back(field.from_rational(c));
    }
    for_each_basis_tuple(a.dim(), law.degree, [&](std::span<const Index> idx) {
      RowVector w = RowVector::Constant(a.dim() * a.dim(), field.zero());
      for (std::size_t i = 0; i < law.terms.size(); ++i) {
        const LawTerm& t = law.terms[i].second;
        w += coeffs[i] * tensor(evaluate(a, t.left(), idx), evaluate(a, t.right(), idx));
      }
      span.add(normalized(w, field));
    });
  }
  Subspace w = span.result();
  ensure(is_zero_matrix<Scalar>(sparse_times<Scalar>(w.basis(), a.table())),
         "cocycle relations leave the kernel of multiplication");
  return w;
}

UceResult build_uce(const Algebra& a, const Variety& v, UceChecks checks) {
  const Field& field = a.field();
  check_field_supported(v, field);
  require(satisfies(a, v), "build_uce: algebra does not satisfy " + v.name);
  require(is_perfect(a, vect()), "object not perfect");
  const Index d = a.dim();

  const Subspace w = cocycle_relations(a, v);
  const auto q = quotient_map<Scalar>(d * d, w);
  const Matrix proj = normalized(q.proj, field);
  const Matrix section = normalized(q.section, field);
  const Index m = section.rows();
  const Matrix umat = normalized(sparse_times<Scalar>(section, a.table()), field);

  Matrix table(m * m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) table.row(i * m + j) = row_times<Scalar>(tensor(umat.row(i), umat.row(j)), proj);
  }
  std::vector<std::string> labels;
  for (Index c : q.complement) labels.push_back(tensor_label(a, c));
  Algebra u_alg(field, std::move(labels), std::move(table));

  std::vector<std::string> log;
  log.push_back("dim W = " + std::to_string(w.dim()) + ", dim U = " + std::to_string(m));
  const LinearMap umap(u_alg, a, umat);
  if (checks == UceChecks::full) {
    check(satisfies(u_alg, v), "U satisfies " + v.name, log);
    check(is_morphism(umap), "u is a morphism", log);
    check(is_surjective(umap), "u is surjective", log);
    check(is_perfect(u_alg, vect()), "U is perfect", log);
  } else {
    ensure(is_morphism(umap), "uce construction: u is a morphism");
  }
  Extension ext = make_extension(umap, v, vect());
  if (checks == UceChecks::full) {
    check(is_central(ext), "u is central", log);
    check(centre(u_alg).contains(ext.kernel.subspace), "ker u lies in the centre of U", log);
  }
  Subspace h2 = ext.kernel.subspace;
  return {std::move(ext), std::move(h2), 0, std::move(log), section, proj, w};
}

Index h2_dimension(const Algebra& a, const Variety& v) {
  require(is_perfect(a, vect()), "object not perfect");
  const Index d = a.dim();
  return d * d - cocycle_relations(a, v).dim() - rank(a.table());
}

LinearMap lift_universal(const UceResult& r, const Extension& e) {
  const Algebra& a = r.u.codomain();
  require(e.codomain().same_structure(a), "lift_universal: codomain mismatch");
  require(same_variety(e.coefficient, r.u.coefficient), "lift_universal: coefficient variety mismatch");
  require(is_central(e), "lift_universal: extension is not central");
  const Algebra& b = e.domain();
  const Index d = a.dim();
  const Matrix s = solve_left<Scalar>(e.map.matrix(), identity_matrix(d, a.field()));

  Matrix brackets(d * d, b.dim());
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) brackets.row(i * d + j) = bracket(b, s.row(i), s.row(j));
  }
  ensure(is_zero_matrix<Scalar>(sparse_times<Scalar>(r.relations.basis(), brackets)),
         "lift does not vanish on the cocycle relations");
  const LinearMap h =
      expect_morphism(LinearMap(r.u.domain(), b, sparse_times<Scalar>(r.tensor_section, brackets)), "universal lift");
  ensure(h.matrix() * e.map.matrix() == r.u.map.matrix(), "universal lift does not cover u");
  ensure(lift_ambiguity_dimension(r, e, h) == 0, "universal lift is not unique");
  return h;
}

Index lift_ambiguity_dimension(const UceResult& r, const Extension& e, const LinearMap& h) {
  // h + delta is a morphism over A iff delta * F = 0 and, delta landing in the
  // central kernel, delta([x,y]) = [h x, delta y] + [delta x, h y] on basis pairs.
  const Algebra& u = r.u.domain();
  const Algebra& b = e.domain();
  const Index m = u.dim();
  const Index n = b.dim();
  const Index a_dim = e.codomain().dim();
  const Field& field = b.field();
  const Index unknowns = m * n;
  const Index constraints = m * a_dim + m * m * n;
  Matrix c = zero_matrix(unknowns, constraints, field);
  const Matrix& f = e.map.matrix();
  Index col = 0;
  for (Index row = 0; row < m; ++row) {
    for (Index k = 0; k < a_dim; ++k, ++col) {
      for (Index x = 0; x < n; ++x) c(row * n + x, col) = f(x, k);
    }
  }
  std::vector<Matrix> left_h(static_cast<std::size_t>(m)), right_h(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) {
    Matrix lm(n, n), rm(n, n);
    for (Index x = 0; x < n; ++x) {
      lm.row(x) = bracket(b, h.matrix().row(i), b.basis_vector(x));
      rm.row(x) = bracket(b, b.basis_vector(x), h.matrix().row(i));
    }
    left_h[static_cast<std::size_t>(i)] = lm;   // row x: [h e_i, b_x]
    right_h[static_cast<std::size_t>(i)] = rm;  // row x: [b_x, h e_i]
  }
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      const RowVector uij = u.product(i, j);
      for (Index k = 0; k < n; ++k, ++col) {
        for (Index r2 = 0; r2 < m; ++r2) {
          if (!is_zero(uij(r2))) c(r2 * n + k, col) += uij(r2);
        }
        for (Index x = 0; x < n; ++x) {
          c(j * n + x, col) -= left_h[static_cast<std::size_t>(i)](x, k);
          c(i * n + x, col) -= right_h[static_cast<std::size_t>(j)](x, k);
        }
      }
    }
  }
  return kernel<Scalar>(normalized(c, field)).dim();
}

TheoremCertificate check_theorem_h1h2(const Extension& e) {
  require(is_abelian_variety(e.coefficient), "check_theorem_h1h2: coefficient variety must be abelian");
  require(is_central(e), "check_theorem_h1h2: extension is not central");
  TheoremCertificate cert;
  cert.in_scope = e.ambient.uce_condition;
  const Algebra& u = e.domain();
  cert.h1_dim = u.dim() - verbal_subobject(u, vect()).subspace.dim();
  if (cert.h1_dim == 0) cert.h2_dim = h2_dimension(u, e.ambient);
  cert.universal = cert.h1_dim == 0 && cert.h2_dim == Index{0};
  return cert;
}

bool is_universal_direct(const Extension& e) {
  if (!is_central(e) || !is_perfect(e.codomain(), vect())) return false;
  const UceResult r = build_uce(e.codomain(), e.ambient);
  return is_isomorphism(lift_universal(r, e));
}

bool composite_universality(const Extension& e_f, const Extension& e_g) {
  require(is_central(e_f) && is_central(e_g), "composite_universality: extensions must be central");
  require(e_g.codomain().same_structure(e_f.domain()), "composite_universality: extensions are not composable");
  require(contains_abelian(e_f.coefficient), "composite_universality: coefficients must contain abelian algebras");
  const Extension composite = compose(e_f, e_g);
  require(is_central(composite), "composite not central: (UCE) violation");
  const bool g_cert = check_theorem_h1h2(e_g).universal;
  const bool fg_cert = check_theorem_h1h2(composite).universal;
  ensure(g_cert == fg_cert, "certificates for g and the composite differ");
  ensure(g_cert == is_universal_direct(e_g), "certificate for g disagrees with the direct lift");
  ensure(fg_cert == is_universal_direct(composite), "certificate for the composite disagrees with the direct lift");
  return g_cert;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 of (seed, trial)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Algebra random_perfect_base(random::Rng& rng, const UceSearchOptions& o) {
  if (o.ambient.name == "Lie" || o.ambient.name == "Leib") return random::perfect_lie(rng, o.field, o.dim_bound);
  require(o.ambient.laws.empty(), "check_uce_condition: unsupported ambient variety " + o.ambient.name);
  const Index d = std::uniform_int_distribution<Index>(2, std::max<Index>(2, o.dim_bound))(rng);
  if (d == 2) return random::rebased(rng, random::perfect_naalg2(rng, o.field));
  while (true) {
    Algebra a = random::naalg(rng, o.field, d, 0.3);
    if (is_perfect(a, vect())) return a;
  }
}

/// uce(p) / L for a random L inside H2 leaving at most `extra` dimensions of it.
LinearMap random_central_cover(random::Rng& rng, const Algebra& p, const Variety& v, Index extra) {
  const UceResult r = build_uce(p, v, UceChecks::none);
  const Index keep = std::uniform_int_distribution<Index>(0, std::min(extra, r.h2.dim()))(rng);
  const Subspace l = random::subspace_of(rng, p.field(), r.h2, r.h2.dim() - keep);
  const Algebra& u = r.u.domain();
  const QuotientAlgebra q = quotient_algebra(u, as_ideal(u, l));
  return expect_morphism(LinearMap(q.algebra, p, q.section * r.u.map.matrix()), "induced cover");
}

std::optional<UceViolation> run_trial(const UceSearchOptions& o, std::uint64_t trial, std::uint64_t seed) {
  random::Rng rng(seed);
  const Algebra a = random_perfect_base(rng, o);
  const Extension f = make_extension(random_central_cover(rng, a, o.ambient, 2), o.ambient, vect());
  LinearMap g_map = random_central_cover(rng, f.domain(), o.ambient, 2);
  if (std::bernoulli_distribution(0.25)(rng)) {
    const DirectProduct z = direct_product(g_map.domain(), Algebra::abelian(o.field, 1, "z"));
    g_map = compose(g_map, z.p1);
  }
  const Extension g = make_extension(g_map, o.ambient, vect());
  ensure(is_central(f) && is_central(g), "generated extensions are not central");
  const Index comm = relative_commutator(compose(f, g)).dim();
  if (comm == 0) return std::nullopt;
  return UceViolation{trial, seed, false, f, g, comm};
}

}  // namespace

std::optional<UceViolation> replay_uce_trial(const UceSearchOptions& options, std::uint64_t trial,
                                             std::uint64_t seed) {
  return run_trial(options, trial, seed);
}

std::vector<UceViolation> check_uce_condition(const UceSearchOptions& options) {
  check_field_supported(options.ambient, options.field);
  std::vector<UceViolation> found;
  if (options.inject_known_counterexample) {
    const auto t = catalog::nonassociative_tower(options.field);
    require(satisfies(t.c, options.ambient), "check_uce_condition: known counterexample lies outside " +
                                                 options.ambient.name);
    const Extension f = make_extension(t.f, options.ambient, vect());
    const Extension g = make_extension(t.g, options.ambient, vect());
    const Index comm = relative_commutator(compose(f, g)).dim();
    if (comm > 0) found.push_back({0, 0, true, f, g, comm});
  }
  for (std::uint64_t trial = 1; trial <= options.trials; ++trial) {
    if (auto v = run_trial(options, trial, trial_seed(options.seed, trial))) found.push_back(std::move(*v));
  }
  return found;
}

NestedReport nested_compare(const Algebra& b) {
  require(satisfies(b, lie()), "nested_compare: algebra is not a Lie algebra");
  require(is_perfect(b, vect()), "nested_compare: algebra is not perfect");
  NestedReport rep;
  rep.dim_b = b.dim();
  const UceResult u_leib = build_uce(b, leib());
  const UceResult u_lie = build_uce(b, lie());
  rep.dim_u_leib = u_leib.u.domain().dim();
  rep.dim_u_lie = u_lie.u.domain().dim();
  rep.h2_leib = u_leib.h2.dim();
  rep.h2_lie = u_lie.h2.dim();

  const Reflection ref = reflect(u_leib.u.domain(), lie());
  const LinearMap induced(ref.algebra, b, ref.section * u_leib.u.map.matrix());
  const Extension reflected = make_extension(induced, lie(), vect());
  rep.reflection_is_uce = is_central(reflected) && is_isomorphism(lift_universal(u_lie, reflected));

  rep.lie_verbal_of_u_leib = verbal_subobject(u_leib.u.domain(), lie()).subspace.dim();
  rep.exact_sequence_holds = rep.h2_leib == rep.lie_verbal_of_u_leib + rep.h2_lie;
  rep.h2_u_lie_in_leib = h2_dimension(u_lie.u.domain(), leib());
  rep.refinement_holds = rep.lie_verbal_of_u_leib == rep.h2_u_lie_in_leib;

  ensure(rep.reflection_is_uce, "reflection of the Leibniz uce is not the Lie uce");
  ensure(rep.exact_sequence_holds, "exact-sequence dimension identity fails");
  ensure(rep.refinement_holds, "refinement identity fails");
  return rep;
}

}  // namespace centext

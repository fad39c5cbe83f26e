#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermsym/jordan.hpp"
#include "hermsym/parabolic.hpp"
#include "hermsym/rootsystem.hpp"

using namespace hermsym;

TEST_CASE("positive root counts match the Cartan tables") {
  CHECK(build_root_system(CartanType::A, 3).positive_roots.size() == 6);
  CHECK(build_root_system(CartanType::A, 5).positive_roots.size() == 15);
  CHECK(build_root_system(CartanType::B, 3).positive_roots.size() == 9);
  CHECK(build_root_system(CartanType::C, 3).positive_roots.size() == 9);
  CHECK(build_root_system(CartanType::D, 4).positive_roots.size() == 12);
}

TEST_CASE("reflection closure: s_a(b) stays a root") {
  for (auto [t, r] : {std::pair{CartanType::A, 3}, {CartanType::B, 3}, {CartanType::D, 4}}) {
    RootSystem rs = build_root_system(t, r);
    for (const IVec& a : rs.positive_roots)
      for (const IVec& b : rs.positive_roots) {
        RatVec rb = reflect(to_rat(b), a);
        IVec ib(rb.size());
        for (size_t i = 0; i < rb.size(); ++i) {
          REQUIRE(denominator(rb[i]) == 1);
          ib[i] = rb[i].convert_to<long>();
        }
        CHECK(rs.is_root(ib));
      }
  }
}

TEST_CASE("every positive root has nonnegative integer simple coordinates") {
  RootSystem rs = build_root_system(CartanType::B, 3);
  for (const auto& coords : rs.pos_simple_coords)
    for (long c : coords) CHECK(c >= 0);
}

TEST_CASE("marked parabolic A1") {
  MarkedParabolic p = build_marked_parabolic(CartanType::A, 1, 1);
  CHECK(p.r() == 1);
  CHECK(p.n() == 1);
  CHECK(p.gammas[0] == IVec{1, -1});
}

TEST_CASE("marked parabolic A3 node 2") {
  MarkedParabolic p = build_marked_parabolic(CartanType::A, 3, 2);
  REQUIRE(p.r() == 2);
  CHECK(p.gammas[0] == IVec{0, 1, -1, 0});
  CHECK(p.gammas[1] == IVec{1, 0, 0, -1});
  CHECK(p.n() == 4);
  // λ pairs to −1 with the marked simple coroot and 0 with the others
  for (int j = 0; j < 3; ++j) {
    Rat c = coroot_pairing(p.lambda.eps, p.rs.simple_roots[j]);
    CHECK(c == (j == 1 ? Rat(-1) : Rat(0)));
  }
  // γ-block first, then the two remaining noncompact roots ascending
  CHECK(p.noncompact[0] == p.gammas[0]);
  CHECK(p.noncompact[1] == p.gammas[1]);
  CHECK(p.noncompact[2] == IVec{0, 1, 0, -1});
  CHECK(p.noncompact[3] == IVec{1, 0, -1, 0});
}

TEST_CASE("cascade A5 node 3 has rank 3 and is idempotent") {
  MarkedParabolic p = build_marked_parabolic(CartanType::A, 5, 3);
  CHECK(p.r() == 3);
  CHECK(strongly_orthogonal_cascade(p) == p.gammas);
  // strong orthogonality
  for (int i = 0; i < p.r(); ++i)
    for (int j = i + 1; j < p.r(); ++j) {
      IVec s(p.gammas[i].size()), d(p.gammas[i].size());
      for (size_t c = 0; c < s.size(); ++c) {
        s[c] = p.gammas[i][c] + p.gammas[j][c];
        d[c] = p.gammas[i][c] - p.gammas[j][c];
      }
      CHECK_FALSE(p.rs.is_root(s));
      CHECK_FALSE(p.rs.is_root(d));
    }
}

TEST_CASE("non-Hermitian markings are rejected") {
  CHECK_THROWS_AS(build_marked_parabolic(CartanType::B, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_marked_parabolic(CartanType::C, 3, 1), std::invalid_argument);
  CHECK_NOTHROW(build_marked_parabolic(CartanType::B, 3, 1));
  CHECK_NOTHROW(build_marked_parabolic(CartanType::C, 3, 3));
  CHECK_NOTHROW(build_marked_parabolic(CartanType::D, 4, 1));
}

TEST_CASE("hermitian markings for the quadric have the expected noncompact count") {
  MarkedParabolic b3 = build_marked_parabolic(CartanType::B, 3, 1);
  CHECK(b3.r() == 2);
  CHECK(b3.n() == 5);
  MarkedParabolic d4 = build_marked_parabolic(CartanType::D, 4, 1);
  CHECK(d4.r() == 2);
  CHECK(d4.n() == 6);
}

TEST_CASE("weyl dimension examples") {
  RootSystem a1 = build_root_system(CartanType::A, 1);
  Weight w1 = fundamental_weight(a1, 0);
  for (long k = 0; k <= 20; ++k) {
    Weight kw{scale(Rat(k), w1.eps)};
    CHECK(weyl_dimension(a1.positive_roots, kw) == BigInt(k + 1));
  }
  RootSystem a3 = build_root_system(CartanType::A, 3);
  Weight w2 = fundamental_weight(a3, 1);
  CHECK(weyl_dimension(a3.positive_roots, w2) == BigInt(6));
  Weight w2x2{scale(Rat(2), w2.eps)};
  CHECK(weyl_dimension(a3.positive_roots, w2x2) == BigInt(20));
  Weight nondom{scale(Rat(-1), w2.eps)};
  CHECK_THROWS_AS(weyl_dimension(a3.positive_roots, nondom), std::invalid_argument);
}

TEST_CASE("dominant representative") {
  RootSystem a1 = build_root_system(CartanType::A, 1);
  Weight w = fundamental_weight(a1, 0);
  Weight neg{scale(Rat(-1), w.eps)};
  CHECK(dominant_representative(neg, a1.positive_roots).eps == w.eps);
  CHECK(dominant_representative(w, a1.positive_roots).eps == w.eps);

  // Weyl dimension is symmetric under μ ↦ dominant(−μ) (contragredient).
  RootSystem a3 = build_root_system(CartanType::A, 3);
  Weight mu = fundamental_weight(a3, 0);
  Weight mu2 = fundamental_weight(a3, 1);
  Weight sum{add(mu.eps, scale(Rat(2), mu2.eps))};
  Weight dual = dominant_representative(Weight{scale(Rat(-1), sum.eps)}, a3.positive_roots);
  CHECK(weyl_dimension(a3.positive_roots, sum) == weyl_dimension(a3.positive_roots, dual));
}

TEST_CASE("levi dominant conjugate of λ+γ1 for A3 node 2 has dimension 4") {
  MarkedParabolic p = build_marked_parabolic(CartanType::A, 3, 2);
  Weight w = p.label_weight(1, {1, 0});
  Weight dom = dominant_representative(w, p.phi_L_pos);
  CHECK(weyl_dimension(p.phi_L_pos, dom) == BigInt(4));
}

TEST_CASE("basic jordan ops in rect(1,1)") {
  Model m = make_rect(1, 1);
  Elem<GQ> x(m, {GQ(2)}), y(m, {GQ(1)}), z(m, {GQ(3)});
  CHECK(triple(x, y, z).v[0] == GQ(12));
  CHECK(qmap(x, Elem<GQ>(m, {GQ(3)})).v[0] == GQ(12));
  // B(x,0) = Id
  Elem<GQ> zero(m);
  Mat<GQ> b = bop(x, zero);
  CHECK(b(0, 0) == GQ(1));
  // quasi-inverse 2^3 = −2/5
  Elem<GQ> three(m, {GQ(3)});
  CHECK(quasi_inverse(x, three).v[0] == GQ(Rat(-2, 5)));
  // B(1,1) singular
  Elem<GQ> one(m, {GQ(1)});
  CHECK_FALSE(is_quasi_invertible(one, one));
  CHECK_THROWS_AS(quasi_inverse(one, one), std::domain_error);
}

TEST_CASE("trace form constants") {
  Model m22 = make_rect(2, 2);
  Elem<GQ> e1 = frame_element<GQ>(m22, 0);
  CHECK(trace_form(e1, e1) == GQ(4));
  CHECK(trace_form(e1, frame_element<GQ>(m22, 1)) == GQ(0));
  // τ equals the trace of the materialized D operator
  Elem<GQ> x(m22, {GQ(1), GQ(2), GQ(Rat(1), Rat(1)), GQ(0)});
  Elem<GQ> y(m22, {GQ(Rat(1, 2)), GQ(-1), GQ(0), GQ(3)});
  CHECK(trace_form(x, y) == dop(x, y).trace());

  Model sp = make_spin(5);
  Elem<GQ> f1 = frame_element<GQ>(sp, 0);
  CHECK(trace_form(f1, f1) == GQ(5));
  Elem<GQ> sx(sp, {GQ(1), GQ(2), GQ(0), GQ(Rat(0), Rat(1)), GQ(1)});
  Elem<GQ> sy(sp, {GQ(0), GQ(1), GQ(Rat(1, 3)), GQ(1), GQ(2)});
  CHECK(trace_form(sx, sy) == dop(sx, sy).trace());
}

TEST_CASE("generic determinant examples") {
  Model m = make_rect(1, 1);
  Elem<GQ> one(m, {GQ(1)}), two(m, {GQ(2)}), three(m, {GQ(3)}), five(m, {GQ(5)});
  Elem<GQ> zero(m);
  CHECK(gdet(one, zero) == GQ(1));
  // cocycle Δ(u,v)Δ(u^v,w) = Δ(u,v+w)
  GQ lhs = gdet(one, two) * gdet(quasi_inverse(one, two), three);
  CHECK(lhs == gdet(one, five));
  CHECK(lhs == GQ(-4));

  Model m22 = make_rect(2, 2);
  Elem<GQ> diag_ab(m22, {GQ(2), GQ(0), GQ(0), GQ(3)});
  Elem<GQ> diag_cd(m22, {GQ(5), GQ(0), GQ(0), GQ(7)});
  CHECK(gdet(diag_ab, diag_cd) == GQ((1 - 2 * 5) * (1 - 3 * 7)));
}

TEST_CASE("spin frame is tripotent with the right structure constant") {
  for (int n : {3, 4, 5, 6}) {
    Model sp = make_spin(n);
    for (int j = 0; j < 2; ++j) {
      Elem<GQ> e = frame_element<GQ>(sp, j);
      Elem<GQ> cube = qmap(e, e);
      CHECK(cube.v == e.v);
      CHECK(trace_form(e, e) == GQ(n));
    }
    // orthogonality: D(e1,e1)e2 = 0
    Elem<GQ> e1 = frame_element<GQ>(sp, 0), e2 = frame_element<GQ>(sp, 1);
    CHECK(triple(e1, e1, e2).is_zero());
  }
}

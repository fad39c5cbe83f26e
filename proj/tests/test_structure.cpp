#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hermsym/structure.hpp"

using namespace hermsym;

namespace {

double enorm(const Elem<CD>& x) {
  double s = 0;
  for (const CD& c : x.v) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("tripotent recognition") {
  Model m = make_rect(1, 1);
  CHECK(is_tripotent(Elem<GQ>(m, {GQ(1)})));
  CHECK_FALSE(is_tripotent(Elem<GQ>(m, {GQ(2)})));

  Model m22 = make_rect(2, 2);
  // any unitary matrix is a tripotent (partial isometry)
  std::mt19937_64 rng(7);
  for (int t = 0; t < 5; ++t) {
    Elem<CD> u = random_tripotent(m22, 2, rng);
    CHECK(is_tripotent(u));
  }
}

TEST_CASE("peirce projections split the identity and D") {
  Model m = make_rect(2, 3);
  Tripotent<GQ> t = make_tripotent(frame_element<GQ>(m, 0));
  Mat<GQ> sum = t.p2 + t.p1 + t.p0;
  Mat<GQ> id = Mat<GQ>::identity(m.dim);
  CHECK(frob_norm(to_cd(sum) - to_cd(id)) == 0.0);
  // D = 2 P2 + P1
  Mat<GQ> d = dop(t.e, t.e);
  Mat<GQ> rhs = ScalarOps<GQ>::from_int(2) * t.p2 + t.p1;
  CHECK(frob_norm(to_cd(d) - to_cd(rhs)) == 0.0);
  // projections are idempotent and mutually orthogonal
  CHECK(frob_norm(to_cd(t.p2 * t.p2 - t.p2)) == 0.0);
  CHECK(frob_norm(to_cd(t.p2 * t.p1)) == 0.0);
  CHECK(frob_norm(to_cd(t.p1 * t.p0)) == 0.0);
}

TEST_CASE("structure constant identity p = 2 + dim V1") {
  for (auto mdl : {make_rect(2, 2), make_rect(2, 3), make_rect(1, 4)}) {
    Tripotent<GQ> t = make_tripotent(frame_element<GQ>(mdl, 0));
    GQ tau = trace_form(t.e, t.e);
    GQ dim_v1 = t.p1.trace();
    CHECK(tau == GQ(2) + dim_v1);
  }
  for (int n : {3, 4, 5, 6}) {
    Model sp = make_spin(n);
    Tripotent<GQ> t = make_tripotent(frame_element<GQ>(sp, 0));
    CHECK(trace_form(t.e, t.e) == GQ(2) + t.p1.trace());
  }
}

TEST_CASE("spectral decomposition on rect") {
  Model m = make_rect(2, 2);
  SUBCASE("zero gives empty data") {
    CHECK(spectral_decomposition(Elem<CD>(m)).empty());
  }
  SUBCASE("diagonal example 3e1 + e2") {
    Elem<CD> x(m, {CD(3, 0), CD(0, 0), CD(0, 0), CD(1, 0)});
    SpectralData sd = spectral_decomposition(x);
    REQUIRE(sd.sigma.size() == 2);
    CHECK(sd.sigma[0] == doctest::Approx(3.0));
    CHECK(sd.sigma[1] == doctest::Approx(1.0));
    CHECK(enorm(sd.tripotent[0] - to_scalar<CD>(m, frame_element<GQ>(m, 0))) < 1e-12);
    CHECK(enorm(sd.tripotent[1] - to_scalar<CD>(m, frame_element<GQ>(m, 1))) < 1e-12);
  }
  SUBCASE("equal singular values merge") {
    Elem<CD> x(m, {CD(1, 0), CD(0, 0), CD(0, 0), CD(1, 0)});
    SpectralData sd = spectral_decomposition(x);
    REQUIRE(sd.sigma.size() == 1);
    CHECK(sd.sigma[0] == doctest::Approx(1.0));
    CHECK(rank_of_tripotent(sd.tripotent[0]) == 2);
  }
  SUBCASE("random reconstruction") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
      Elem<CD> x = random_element(m, rng);
      SpectralData sd = spectral_decomposition(x);
      CHECK(enorm(sd.reconstruct(m) - x) <= tol::kSpectralRecon * (1 + enorm(x)));
      for (const auto& c : sd.tripotent) CHECK(is_tripotent(c));
      for (size_t i = 0; i + 1 < sd.sigma.size(); ++i) CHECK(sd.sigma[i] > sd.sigma[i + 1]);
      // mutually orthogonal tripotents
      for (size_t i = 0; i < sd.tripotent.size(); ++i)
        for (size_t j = 0; j < sd.tripotent.size(); ++j) {
          if (i == j) continue;
          CHECK(enorm(triple(sd.tripotent[i], sd.tripotent[i], sd.tripotent[j])) < 1e-8);
        }
    }
  }
}

TEST_CASE("spectral decomposition on spin") {
  std::mt19937_64 rng(13);
  for (int n : {3, 4, 5}) {
    Model sp = make_spin(n);
    for (int t = 0; t < 100; ++t) {
      Elem<CD> x = random_element(sp, rng);
      SpectralData sd = spectral_decomposition(x);
      CHECK(enorm(sd.reconstruct(sp) - x) <= 1e-9 * (1 + enorm(x)));
      for (const auto& c : sd.tripotent) CHECK(is_tripotent(c));
    }
    // frame combination with exact values
    Elem<CD> e1 = to_scalar<CD>(sp, frame_element<GQ>(sp, 0));
    Elem<CD> e2 = to_scalar<CD>(sp, frame_element<GQ>(sp, 1));
    Elem<CD> x(sp);
    for (int c = 0; c < sp.dim; ++c) x.v[c] = 3.0 * e1.v[c] + 1.0 * e2.v[c];
    SpectralData sd = spectral_decomposition(x);
    REQUIRE(sd.sigma.size() == 2);
    CHECK(sd.sigma[0] == doctest::Approx(3.0));
    CHECK(sd.sigma[1] == doctest::Approx(1.0));
  }
}

TEST_CASE("rank examples") {
  Model m = make_rect(2, 2);
  CHECK(rank_of(Elem<GQ>(m)) == 0);
  Elem<GQ> e11 = frame_element<GQ>(m, 0);
  Elem<GQ> e22 = frame_element<GQ>(m, 1);
  CHECK(rank_of(e11) == 1);
  CHECK(rank_of(e11 + e22) == 2);
  std::mt19937_64 rng(3);
  Elem<CD> x = random_element(m, rng);
  SpectralData sd = spectral_decomposition(x);
  int total = 0;
  for (const auto& c : sd.tripotent) total += rank_of_tripotent(c);
  CHECK(rank_of(x) == total);
}

TEST_CASE("jordan algebra determinant") {
  Model m1 = make_rect(1, 1);
  Elem<GQ> e(m1, {GQ(1)});
  CHECK(jordan_algebra_det(e, e) == GQ(1));
  Elem<GQ> x(m1, {GQ(Rat(7, 3))});
  CHECK(jordan_algebra_det(e, x) == GQ(Rat(7, 3)));

  Model m = make_rect(2, 2);
  Elem<GQ> e11 = frame_element<GQ>(m, 0);
  Elem<GQ> z(m, {GQ(5), GQ(2), GQ(3), GQ(4)});
  CHECK(jordan_algebra_det(e11, z) == GQ(5));  // picks the (1,1) entry
  // vanishes on V1 ⊕ V0 of e11
  Tripotent<GQ> t = make_tripotent(e11);
  Elem<GQ> v10 = apply_op(t.p1, z) + apply_op(t.p0, z);
  CHECK(jordan_algebra_det(e11, v10) == GQ(0));
}

TEST_CASE("rank condition sampling agrees with k > rank") {
  std::mt19937_64 rng(23);
  Model m = make_rect(2, 2);
  Elem<CD> e1 = to_scalar<CD>(m, frame_element<GQ>(m, 0));
  Elem<CD> e2 = to_scalar<CD>(m, frame_element<GQ>(m, 1));
  Elem<CD> zero(m);

  CHECK(rank_condition_check(zero, 1, rng) == true);      // 1 > 0
  CHECK(rank_condition_check(e1, 2, rng) == true);        // 2 > 1
  CHECK(rank_condition_check(e1 + e2, 1, rng) == false);  // 1 ≤ 2
  CHECK(rank_condition_check(e1, 1, rng) == false);
  for (int t = 0; t < 10; ++t) {
    Elem<CD> x = random_element(m, rng);
    for (int k = 1; k <= 2; ++k)
      CHECK(rank_condition_check(x, k, rng) == (k > rank_of(x)));
  }
  // spin model, including the rank-two split path
  Model sp = make_spin(4);
  for (int t = 0; t < 10; ++t) {
    Elem<CD> x = random_element(sp, rng);
    for (int k = 1; k <= 2; ++k)
      CHECK(rank_condition_check(x, k, rng) == (k > rank_of(x)));
  }
}

TEST_CASE("frame from parabolic validates the correspondence") {
  Model m = make_rect(2, 2);
  MarkedParabolic p = build_marked_parabolic(CartanType::A, 3, 2);
  Frame<GQ> f = frame_from_parabolic(m, p);
  CHECK(f.r() == 2);
  CHECK(f.e[0].e.v == frame_element<GQ>(m, 0).v);
  CHECK(f.e[1].e.v == frame_element<GQ>(m, 1).v);
  // joint projections resolve the identity
  Mat<GQ> sum(m.dim, m.dim);
  for (int i = 0; i <= 2; ++i)
    for (int j = i; j <= 2; ++j) sum = sum + f.proj(i, j);
  CHECK(frob_norm(to_cd(sum) - to_cd(Mat<GQ>::identity(m.dim))) == 0.0);

  MarkedParabolic wrong = build_marked_parabolic(CartanType::A, 3, 1);
  CHECK_THROWS_AS(frame_from_parabolic(m, wrong), std::invalid_argument);

  Model sp = make_spin(5);
  MarkedParabolic psp = build_marked_parabolic(CartanType::B, 3, 1);
  CHECK_NOTHROW(frame_from_parabolic(sp, psp));
  Model sp4 = make_spin(4);
  MarkedParabolic psp4 = build_marked_parabolic(CartanType::D, 3, 1);
  CHECK_NOTHROW(frame_from_parabolic(sp4, psp4));
}

TEST_CASE("peirce rules hold on random frame data") {
  std::mt19937_64 rng(31);
  for (auto mdl : {make_rect(2, 2), make_rect(2, 3)}) {
    std::vector<Elem<GQ>> es;
    for (int j = 0; j < mdl.rank; ++j) es.push_back(frame_element<GQ>(mdl, j));
    Frame<GQ> f = make_frame(es);
    Tripotent<GQ>& t = f.e[0];
    for (int trial = 0; trial < 20; ++trial) {
      Elem<GQ> a = random_exact_element(mdl, rng);
      Elem<GQ> b = random_exact_element(mdl, rng);
      Elem<GQ> c = random_exact_element(mdl, rng);
      for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
          for (int k = 0; k <= 2; ++k) {
            Elem<GQ> xi = apply_op(i == 2 ? t.p2 : i == 1 ? t.p1 : t.p0, a);
            Elem<GQ> yj = apply_op(j == 2 ? t.p2 : j == 1 ? t.p1 : t.p0, b);
            Elem<GQ> zk = apply_op(k == 2 ? t.p2 : k == 1 ? t.p1 : t.p0, c);
            Elem<GQ> w = triple(xi, yj, zk);
            int target = i - j + k;
            if (target < 0 || target > 2) {
              CHECK(w.is_zero());
            } else {
              Mat<GQ>& proj = target == 2 ? t.p2 : target == 1 ? t.p1 : t.p0;
              Elem<GQ> diff = apply_op(proj, w) - w;
              CHECK(diff.is_zero());
            }
          }
    }
  }
}

TEST_CASE("joint peirce rules: non-chaining products vanish") {
  std::mt19937_64 rng(37);
  Model mdl = make_rect(2, 2);
  std::vector<Elem<GQ>> es;
  for (int j = 0; j < mdl.rank; ++j) es.push_back(frame_element<GQ>(mdl, j));
  Frame<GQ> f = make_frame(es);
  const int r = f.r();
  for (int trial = 0; trial < 10; ++trial) {
    Elem<GQ> a = random_exact_element(mdl, rng);
    Elem<GQ> b = random_exact_element(mdl, rng);
    Elem<GQ> c = random_exact_element(mdl, rng);
    for (int i = 0; i <= r; ++i)
      for (int j = i; j <= r; ++j)
        for (int k = 0; k <= r; ++k)
          for (int l = k; l <= r; ++l)
            for (int s = 0; s <= r; ++s)
              for (int u = s; u <= r; ++u) {
                Elem<GQ> xij = apply_op(f.proj(i, j), a);
                Elem<GQ> ykl = apply_op(f.proj(k, l), b);
                Elem<GQ> zsu = apply_op(f.proj(s, u), c);
                Elem<GQ> w = triple(xij, ykl, zsu);
                if (w.is_zero()) continue;
                // a nonzero product must chain: {ij}{jk}{kl} ⊆ {il}
                bool chains = false;
                for (auto [pi, pj] : {std::pair{i, j}, {j, i}})
                  for (auto [pk, pl] : {std::pair{k, l}, {l, k}})
                    for (auto [ps, pu] : {std::pair{s, u}, {u, s}}) {
                      if (pj == pk && pl == ps) {
                        Elem<GQ> diff = apply_op(f.proj(pi, pu), w) - w;
                        if (diff.is_zero()) chains = true;
                      }
                    }
                CHECK(chains);
              }
  }
}

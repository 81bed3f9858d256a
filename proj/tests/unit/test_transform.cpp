#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "synthetic.hpp"
#include "tpctf/transform.hpp"

using namespace tpctf;
using oracles::naive_dft;
using oracles::naive_dft_real;
using oracles::naive_idft;

namespace {

const FilterBank1D& paper_bank() {
  static FilterBank1D bank = build_bank(BankKind::Ctf6Down, ctf6down_parameters());
  return bank;
}

cvec delta_symbol(size_t n) { return cvec(n, cplx(1.0, 0.0)); }

double max_band_diff(const CoeffPyramid& a, const CoeffPyramid& b) {
  double worst = synthetic::max_abs_diff(a.low, b.low);
  for (size_t j = 0; j < a.levels.size(); ++j) {
    for (size_t bi = 0; bi < a.levels[j].bands.size(); ++bi) {
      worst = std::max(worst, oracles::max_abs_diff(
                                  cvec(a.levels[j].bands[bi].coeffs.data(),
                                       a.levels[j].bands[bi].coeffs.data() +
                                           a.levels[j].bands[bi].coeffs.size()),
                                  cvec(b.levels[j].bands[bi].coeffs.data(),
                                       b.levels[j].bands[bi].coeffs.data() +
                                           b.levels[j].bands[bi].coeffs.size())));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("transition with the delta filter is scaled downsampling") {
  cvec vhat = naive_dft_real({1.0, 2.0, 3.0, 4.0});
  cvec w = naive_idft(transition_freq(vhat, delta_symbol(4), 2));
  CHECK(w[0].real() == doctest::Approx(std::sqrt(2.0) * 1.0).epsilon(1e-12));
  CHECK(w[1].real() == doctest::Approx(std::sqrt(2.0) * 3.0).epsilon(1e-12));
  CHECK(std::abs(w[0].imag()) < 1e-14);
}

TEST_CASE("transition with factor one is the identity") {
  cvec vhat = naive_dft_real({0.5, -1.0, 2.0, 0.25});
  cvec w = transition_freq(vhat, delta_symbol(4), 1);
  CHECK(oracles::max_abs_diff(w, vhat) < 1e-14);
}

TEST_CASE("transition matches the spatial brute-force oracle") {
  const int n = 32;
  const cvec& fhat = paper_bank().filter(FilterLabel::bp(1)).samples(n);
  cvec u_spatial = naive_idft(fhat);

  tpctf::Tensor v = synthetic::random_tensor({static_cast<size_t>(n)}, 11);
  cvec vc(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vc[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];

  cvec fast = naive_idft(transition_freq(naive_dft(vc), fhat, 4));
  cvec slow = oracles::spatial_transition(vc, u_spatial, 4);
  CHECK(oracles::max_abs_diff(fast, slow) < 1e-10);
}

TEST_CASE("subdivision examples and oracle") {
  SUBCASE("single sample upsampled by the delta filter") {
    cvec what = {cplx(1.0, 0.0)};
    cvec r = naive_idft(subdivision_freq(what, delta_symbol(2), 2));
    CHECK(r[0].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(r[1]) < 1e-14);
  }
  SUBCASE("factor one is the identity") {
    cvec what = naive_dft_real({1.0, -2.0, 0.5, 3.0});
    CHECK(oracles::max_abs_diff(subdivision_freq(what, delta_symbol(4), 1), what) < 1e-14);
  }
  SUBCASE("low-pass against the spatial oracle") {
    const int n = 16;
    const cvec& fhat = paper_bank().lowpass().samples(n);
    cvec u_spatial = naive_idft(fhat);
    tpctf::Tensor w = synthetic::random_tensor({static_cast<size_t>(n / 2)}, 5);
    cvec wc(w.size());
    for (size_t i = 0; i < w.size(); ++i) wc[i] = w[i];

    cvec fast = naive_idft(subdivision_freq(naive_dft(wc), fhat, 2));
    cvec slow = oracles::spatial_subdivision(wc, u_spatial, 2);
    CHECK(oracles::max_abs_diff(fast, slow) < 1e-10);
  }
}

TEST_CASE("shape errors in the one-dimensional operators") {
  cvec v(8, cplx(1.0, 0.0));
  cvec f(4, cplx(1.0, 0.0));
  CHECK_THROWS_AS(transition_freq(v, f, 2), ShapeError);
  CHECK_THROWS_AS(transition_freq(v, v, 3), ShapeError);
  CHECK_THROWS_AS(subdivision_freq(v, f, 2), ShapeError);
}

TEST_CASE("band enumeration for the mixed bank") {
  const FilterBank1D& bank = paper_bank();
  CHECK(band_labels(bank, 1).size() == 4);    // 6 - 2
  CHECK(band_labels(bank, 2).size() == 32);   // 6^2 - 2^2
  CHECK(band_labels(bank, 3).size() == 208);  // 6^3 - 2^3
  for (const BandLabel& l : band_labels(bank, 2)) {
    bool any_b = false;
    for (const FilterLabel& f : l) any_b = any_b || !f.is_auxiliary();
    CHECK(any_b);
  }
}

TEST_CASE("analyze of a delta matches the inner-product formula") {
  const FilterBank1D& bank = paper_bank();
  const int n = 64;
  Tensor v({static_cast<size_t>(n)});
  v[0] = 1.0;
  CoeffPyramid p = analyze(v, bank, 1);

  const cvec& fhat = bank.filter(FilterLabel::bp(1)).samples(n);
  cvec u_spatial = naive_idft(fhat);
  const Band& band = p.band(1, {FilterLabel::bp(1)});
  for (int k = 0; k < n / 4; ++k) {
    const cplx expected = 2.0 * std::conj(u_spatial[static_cast<size_t>(((-4 * k) % n + n) % n)]);
    CHECK(std::abs(band.coeffs[static_cast<size_t>(k)] - expected) < 1e-10);
  }
}

TEST_CASE("analyze of a constant: high bands vanish, low is amplified") {
  const FilterBank1D& bank = paper_bank();
  Tensor v({64});
  for (size_t i = 0; i < v.size(); ++i) v[i] = 1.0;
  CoeffPyramid p = analyze(v, bank, 2);
  for (const Level& level : p.levels) {
    for (const Band& b : level.bands) {
      for (size_t i = 0; i < b.coeffs.size(); ++i) CHECK(std::abs(b.coeffs[i]) < 1e-12);
    }
  }
  for (size_t i = 0; i < p.low.size(); ++i) {
    CHECK(p.low[i] == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("two-dimensional band count and shapes") {
  const FilterBank1D& bank = paper_bank();
  Tensor v = synthetic::random_tensor({64, 64}, 3);
  CoeffPyramid p = analyze(v, bank, 1);
  CHECK(p.levels[0].bands.size() == 32);
  for (const Band& b : p.levels[0].bands) {
    CHECK(b.coeffs.shape() == std::vector<size_t>{16, 16});
  }
  CHECK(p.low.shape() == std::vector<size_t>{32, 32});
}

TEST_CASE("perfect reconstruction for all three banks") {
  for (BankKind kind : {BankKind::Ctf6Down, BankKind::CtfOdd, BankKind::CtfEven}) {
    FilterBank1D bank = build_bank(kind, default_parameters(kind));
    INFO("bank ", to_string(kind));
    {
      Tensor v = synthetic::random_tensor({256}, 17);
      double mi = 0.0;
      Tensor r = synthesize(analyze(v, bank, 3), bank, &mi);
      CHECK(synthetic::max_abs_diff(v, r) < 1e-9);
      CHECK(mi < 1e-9);
    }
    {
      Tensor v = synthetic::random_tensor({64, 64}, 23);
      Tensor r = synthesize(analyze(v, bank, 2), bank);
      CHECK(synthetic::max_abs_diff(v, r) < 1e-9);
    }
  }
}

TEST_CASE("zeroed pyramid reconstructs to zero; low-only keeps constants") {
  const FilterBank1D& bank = paper_bank();
  Tensor v({128});
  for (size_t i = 0; i < v.size(); ++i) v[i] = 42.0;
  CoeffPyramid p = analyze(v, bank, 2);

  CoeffPyramid zeroed = p;
  for (auto& level : zeroed.levels) {
    for (auto& b : level.bands) {
      for (size_t i = 0; i < b.coeffs.size(); ++i) b.coeffs[i] = 0.0;
    }
  }
  for (size_t i = 0; i < zeroed.low.size(); ++i) zeroed.low[i] = 0.0;
  Tensor z = synthesize(zeroed, bank);
  for (size_t i = 0; i < z.size(); ++i) CHECK(std::abs(z[i]) < 1e-12);

  // constants live entirely in the low channel
  CoeffPyramid low_only = p;
  for (auto& level : low_only.levels) {
    for (auto& b : level.bands) {
      for (size_t i = 0; i < b.coeffs.size(); ++i) b.coeffs[i] = 0.0;
    }
  }
  Tensor r = synthesize(low_only, bank);
  CHECK(synthetic::max_abs_diff(v, r) < 1e-9);
}

TEST_CASE("analyze with J = 0 returns the input as the low band, bit-exact") {
  const FilterBank1D& bank = paper_bank();
  Tensor v = synthetic::random_tensor({40}, 9);
  CoeffPyramid p = analyze(v, bank, 0);
  CHECK(p.levels.empty());
  for (size_t i = 0; i < v.size(); ++i) CHECK(p.low[i] == v[i]);
}

TEST_CASE("analyze names the required divisor on admissibility failure") {
  const FilterBank1D& bank = paper_bank();
  Tensor v({100});
  CHECK_THROWS_WITH_AS(analyze(v, bank, 3), doctest::Contains("16"), ShapeError);
}

TEST_CASE("linearity of the forward transform") {
  const FilterBank1D& bank = paper_bank();
  Tensor u = synthetic::random_tensor({128}, 1);
  Tensor v = synthetic::random_tensor({128}, 2);
  const double alpha = 1.75, beta = -0.4;
  Tensor mix({128});
  for (size_t i = 0; i < mix.size(); ++i) mix[i] = alpha * u[i] + beta * v[i];

  CoeffPyramid pu = analyze(u, bank, 2);
  CoeffPyramid pv = analyze(v, bank, 2);
  CoeffPyramid pm = analyze(mix, bank, 2);

  CoeffPyramid combined = pu;
  for (size_t i = 0; i < combined.low.size(); ++i) {
    combined.low[i] = alpha * pu.low[i] + beta * pv.low[i];
  }
  for (size_t j = 0; j < combined.levels.size(); ++j) {
    for (size_t bi = 0; bi < combined.levels[j].bands.size(); ++bi) {
      auto& c = combined.levels[j].bands[bi].coeffs;
      for (size_t i = 0; i < c.size(); ++i) {
        c[i] = alpha * pu.levels[j].bands[bi].coeffs[i] + beta * pv.levels[j].bands[bi].coeffs[i];
      }
    }
  }
  CHECK(max_band_diff(pm, combined) < 1e-12);
}

TEST_CASE("shift by the full sampling period permutes coefficients") {
  const FilterBank1D& bank = paper_bank();
  const int n = 256, J = 2, shift = 1 << (J + 1);
  Tensor v = synthetic::random_tensor({static_cast<size_t>(n)}, 31);
  Tensor vs({static_cast<size_t>(n)});
  for (int i = 0; i < n; ++i) vs[static_cast<size_t>((i + shift) % n)] = v[static_cast<size_t>(i)];

  CoeffPyramid p = analyze(v, bank, J);
  CoeffPyramid ps = analyze(vs, bank, J);

  for (int j = 1; j <= J; ++j) {
    const int band_shift = shift / (1 << (j + 1));
    for (size_t bi = 0; bi < p.levels[static_cast<size_t>(j - 1)].bands.size(); ++bi) {
      const auto& a = p.levels[static_cast<size_t>(j - 1)].bands[bi].coeffs;
      const auto& b = ps.levels[static_cast<size_t>(j - 1)].bands[bi].coeffs;
      const int m = static_cast<int>(a.size());
      for (int k = 0; k < m; ++k) {
        CHECK(std::abs(b[static_cast<size_t>((k + band_shift) % m)] - a[static_cast<size_t>(k)]) <
              1e-10);
      }
    }
  }
}

TEST_CASE("mirrored bands hold conjugate coefficients for real input") {
  const FilterBank1D& bank = paper_bank();
  Tensor v = synthetic::random_tensor({32, 32}, 77);
  CoeffPyramid p = analyze(v, bank, 1);
  for (const Band& b : p.levels[0].bands) {
    const Band& mirror = p.band(1, mirrored(b.label));
    for (size_t i = 0; i < b.coeffs.size(); ++i) {
      CHECK(std::abs(mirror.coeffs[i] - std::conj(b.coeffs[i])) < 1e-12);
    }
  }
}

TEST_CASE("half-point symmetric extension") {
  Tensor v({3}, {1.0, 2.0, 3.0});
  PadInfo info;
  Tensor e = sym_extend(v, {7}, &info);
  const std::vector<double> expected = {2.0, 1.0, 1.0, 2.0, 3.0, 3.0, 2.0};
  for (size_t i = 0; i < 7; ++i) CHECK(e[i] == expected[i]);

  Tensor back = crop(e, info);
  for (size_t i = 0; i < 3; ++i) CHECK(back[i] == v[i]);

  CHECK_THROWS_AS(sym_extend(v, {2}), ShapeError);
}

TEST_CASE("extension wider than the signal keeps reflecting") {
  Tensor v({2}, {1.0, 2.0});
  Tensor e = sym_extend(v, {8});
  const std::vector<double> expected = {2.0, 2.0, 1.0, 1.0, 2.0, 2.0, 1.0, 1.0};
  for (size_t i = 0; i < 8; ++i) CHECK(e[i] == expected[i]);
}

TEST_CASE("admissible size for the paper's image setting") {
  CHECK(admissible_shape({512}, BankKind::Ctf6Down, 5, 16) == std::vector<size_t>{576});
  CHECK(admissible_shape({512, 512}, BankKind::CtfEven, 5, 16) ==
        std::vector<size_t>(2, 544));  // uniform banks only need 2^5
  CHECK(admissible_shape({128}, BankKind::Ctf6Down, 5, 16) == std::vector<size_t>{192});
}

TEST_CASE("crop of a two-dimensional extension restores the image") {
  Tensor v = synthetic::random_tensor({30, 21}, 8);
  PadInfo info;
  Tensor e = sym_extend(v, admissible_shape(v.shape(), BankKind::Ctf6Down, 2, 4), &info);
  Tensor back = crop(e, info);
  CHECK(synthetic::max_abs_diff(v, back) == 0.0);
}

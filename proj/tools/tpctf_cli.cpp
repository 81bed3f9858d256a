// Command-line front end: filter inspection, verification, transform
// round-trip, denoising, inpainting, PSNR, redundancy tables.
// Exit codes: 0 success, 1 runtime/check failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "tpctf/io.hpp"
#include "tpctf/processing.hpp"
#include "tpctf/rng.hpp"
#include "tpctf/verify.hpp"

namespace fs = std::filesystem;
using namespace tpctf;

namespace {

FrameletParams parse_params_file(const std::string& path, BankKind kind) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open params file " + path);
  std::map<std::string, double> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw IoError("params: expected key=value, got: " + line);
    kv[line.substr(0, eq)] = std::stod(line.substr(eq + 1));
  }
  int s = kv.count("s") ? static_cast<int>(kv.at("s")) : default_parameters(kind).s;
  std::vector<double> c, eps;
  for (int i = 1; i <= s + 1; ++i) {
    const std::string key = "c" + std::to_string(i);
    if (!kv.count(key)) throw IoError("params: missing " + key);
    c.push_back(kv.at(key));
  }
  for (int i = 0; i <= s + 1; ++i) {
    const std::string key = "eps" + std::to_string(i);
    if (!kv.count(key)) throw IoError("params: missing " + key);
    eps.push_back(kv.at(key));
  }
  return FrameletParams(s, std::move(c), std::move(eps));
}

struct BankArgs {
  std::string bank = "ctf6down";
  std::string params_file;

  FilterBank1D build(double perturb_bp2 = 1.0) const {
    const BankKind kind = bank_kind_from_name(bank);
    FrameletParams p = params_file.empty() ? default_parameters(kind)
                                           : parse_params_file(params_file, kind);
    std::map<FilterLabel, double> gains;
    if (perturb_bp2 != 1.0) gains[FilterLabel::bp(std::min(2, p.s))] = perturb_bp2;
    return build_bank(kind, p, gains);
  }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--bank", bank, "bank: ctf3 | ctf6 | ctf6down")
        ->check(CLI::IsMember({"ctf3", "ctf6", "ctf6down"}));
    cmd->add_option("--params", params_file, "key=value file overriding the bank parameters");
  }
};

int default_levels(size_t ndim) { return ndim >= 3 ? 4 : 5; }

Tensor masked(const Tensor& y, const Tensor& mask) {
  Tensor out = y;
  for (size_t i = 0; i < out.size(); ++i) out[i] *= mask[i];
  return out;
}

int cmd_filters(const BankArgs& bank_args, int grid, const std::string& out_dir) {
  FilterBank1D bank = bank_args.build();
  fs::create_directories(out_dir);
  int count = 0;
  for (const auto& f : bank.filters()) {
    write_filter_csv(out_dir, *f, grid);
    ++count;
  }
  std::printf("bank=%s grid=%d files=%d dir=%s\n", bank_args.bank.c_str(), grid, count,
              out_dir.c_str());
  return 0;
}

int cmd_verify(const BankArgs& bank_args, int dims, int levels, int grid, double perturb,
               std::uint64_t seed) {
  FilterBank1D bank = bank_args.build(perturb);
  bool ok = true;

  PrReport pr = check_pr(bank, grid);
  std::printf("pr_max_residual=%.3e pr_tolerance=%.0e pr_pass=%d\n", pr.max_residual(),
              pr.tolerance, pr.pass ? 1 : 0);
  ok = ok && pr.pass;

  if (bank.has(FilterLabel::ap())) {
    const double split = split_identity_residual(bank, grid);
    const bool split_ok = split < 1e-12;
    std::printf("split_max_residual=%.3e split_pass=%d\n", split, split_ok ? 1 : 0);
    ok = ok && split_ok;
  }

  if (bank.kind() == BankKind::Ctf6Down) {
    double worst = 0.0;
    for (const auto& e : check_frequency_separation(bank, 2, std::max(5, levels), grid)) {
      worst = std::max({worst, e.max_bp_on_negative, e.max_bn_on_positive});
    }
    const bool sep_ok = worst < 1e-12;
    std::printf("separation_max=%.3e separation_pass=%d\n", worst, sep_ok ? 1 : 0);
    ok = ok && sep_ok;
  }

  {
    const size_t div = required_divisor(bank.kind(), levels);
    const size_t base = dims <= 2 ? 64 : (dims == 3 ? 32 : 16);
    std::vector<size_t> shape(static_cast<size_t>(dims), std::max<size_t>(div, base));
    Tensor v(shape);
    SplitMix64 rng(seed);
    for (size_t i = 0; i < v.size(); ++i) v[i] = rng.gaussian();
    const double energy = check_energy(bank, v, levels);
    CoeffPyramid p = analyze(v, bank, levels);
    double max_imag = 0.0;
    Tensor r = synthesize(p, bank, &max_imag);
    double rt = 0.0;
    for (size_t i = 0; i < v.size(); ++i) rt = std::max(rt, std::abs(r[i] - v[i]));
    const bool rt_ok = rt < 1e-9 && energy < 1e-10;
    std::printf("roundtrip_max_err=%.3e energy_rel_err=%.3e transform_pass=%d\n", rt, energy,
                rt_ok ? 1 : 0);
    ok = ok && rt_ok;

    const Rational finite = redundancy_rate(bank.kind(), bank.s(), dims, levels);
    const Rational limit = redundancy_rate(bank.kind(), bank.s(), dims, -1);
    const Rational seen = measured_redundancy(p);
    const bool red_ok = seen == finite;
    std::printf("redundancy_J=%s redundancy_limit=%s redundancy_measured=%s redundancy_pass=%d\n",
                finite.str().c_str(), limit.str().c_str(), seen.str().c_str(), red_ok ? 1 : 0);
    ok = ok && red_ok;
  }

  {
    std::vector<double> small(64);
    SplitMix64 rng(seed ^ 0x5a5a5a5aULL);
    for (auto& x : small) x = rng.gaussian();
    const double dev = das_equivalence(bank, small, std::min(levels, 3));
    const bool das_ok = dev < 1e-10;
    std::printf("das_max_dev=%.3e das_pass=%d\n", dev, das_ok ? 1 : 0);
    ok = ok && das_ok;
  }

  std::printf("overall=%s\n", ok ? "pass" : "fail");
  return ok ? 0 : 1;
}

int cmd_roundtrip(const BankArgs& bank_args, int dims, int size, int levels, std::uint64_t seed) {
  FilterBank1D bank = bank_args.build();
  std::vector<size_t> shape(static_cast<size_t>(dims), static_cast<size_t>(size));
  Tensor v(shape);
  SplitMix64 rng(seed);
  for (size_t i = 0; i < v.size(); ++i) v[i] = rng.gaussian();
  const auto t0 = std::chrono::steady_clock::now();
  CoeffPyramid p = analyze(v, bank, levels);
  Tensor r = synthesize(p, bank);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double err = 0.0;
  for (size_t i = 0; i < v.size(); ++i) err = std::max(err, std::abs(r[i] - v[i]));
  std::printf("max_abs_err=%.3e energy_rel_err=%.3e seconds=%.3f\n", err,
              check_energy(bank, v, levels), secs);
  return err < 1e-9 ? 0 : 1;
}

int cmd_redundancy(int dims, const std::string& levels) {
  const int J = levels == "inf" ? -1 : std::stoi(levels);
  for (int d = 1; d <= dims; ++d) {
    const Rational r3 = redundancy_rate(BankKind::CtfOdd, 1, d, J);
    const Rational r6 = redundancy_rate(BankKind::CtfEven, 2, d, J);
    const Rational r6d = redundancy_rate(BankKind::Ctf6Down, 2, d, J);
    std::printf("d=%d ctf3=%s ctf6=%s ctf6down=%s\n", d, r3.str().c_str(), r6.str().c_str(),
                r6d.str().c_str());
  }
  return 0;
}

int cmd_denoise(const BankArgs& bank_args, const std::string& in_path,
                const std::string& out_path, const std::string& noisy_path, double sigma,
                int levels, std::uint64_t seed, int window, double constant) {
  FilterBank1D bank = bank_args.build();
  Tensor clean = read_image_or_tensor(in_path);
  const int J = levels > 0 ? levels : default_levels(clean.ndim());

  Tensor noisy = add_gaussian_noise(clean, sigma, seed);
  if (!noisy_path.empty()) write_like(noisy_path, noisy);

  ShrinkConfig cfg;
  cfg.sigma = sigma;
  cfg.window_radius = window > 0 ? window : (clean.ndim() >= 3 ? 1 : 3);
  cfg.constant = constant > 0 ? constant : (clean.ndim() >= 3 ? 2.0 : std::sqrt(3.0));

  Tensor out = denoise(noisy, bank, J, cfg);
  write_like(out_path, out);
  std::printf("noisy_psnr=%.2f denoised_psnr=%.2f\n", psnr(clean, clamp_0_255(noisy)),
              psnr(clean, out));
  return 0;
}

int cmd_inpaint(const BankArgs& bank_args, const std::string& in_path,
                const std::string& out_path, const std::string& mask_spec,
                const std::string& masked_path, double sigma, int levels, std::uint64_t seed,
                int iters, double lambda_max, double lambda_min) {
  FilterBank1D bank = bank_args.build();
  Tensor clean = read_image_or_tensor(in_path);
  const int J = levels > 0 ? levels : default_levels(clean.ndim());

  Tensor mask;
  if (mask_spec.rfind("random:", 0) == 0) {
    const double frac = std::stod(mask_spec.substr(7));
    mask = make_random_mask(clean.shape(), frac, seed ^ 0x6d61736bULL);
  } else {
    mask = read_image_or_tensor(mask_spec);
    if (!mask.same_shape(clean)) throw ShapeError("inpaint: mask shape mismatch");
    for (size_t i = 0; i < mask.size(); ++i) mask[i] = mask[i] != 0.0 ? 1.0 : 0.0;
  }

  Tensor y = sigma > 0.0 ? add_gaussian_noise(clean, sigma, seed) : clean;
  if (!masked_path.empty()) write_like(masked_path, clamp_0_255(masked(y, mask)));

  InpaintConfig cfg;
  cfg.iterations = iters;
  cfg.lambda_max = lambda_max;
  cfg.lambda_min = lambda_min > 0 ? lambda_min : std::max(2.0 * sigma, 0.5);
  cfg.sigma = sigma;
  cfg.window_radius = clean.ndim() >= 3 ? 1 : 3;
  cfg.constant = clean.ndim() >= 3 ? 2.0 : std::sqrt(3.0);

  Tensor out = inpaint(y, mask, bank, J, cfg);
  write_like(out_path, out);
  std::printf("baseline_psnr=%.2f inpainted_psnr=%.2f\n",
              psnr(clean, clamp_0_255(masked(y, mask))), psnr(clean, out));
  return 0;
}

int cmd_psnr(const std::string& a_path, const std::string& b_path) {
  const Tensor a = read_image_or_tensor(a_path);
  const Tensor b = read_image_or_tensor(b_path);
  const double v = psnr(a, b);
  if (std::isinf(v)) {
    std::printf("psnr=inf\n");
  } else {
    std::printf("psnr=%.4f\n", v);
  }
  return 0;
}

int cmd_pgm2ten(const std::string& dir, const std::string& out_path) {
  std::vector<fs::path> frames;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".pgm") frames.push_back(e.path());
  }
  if (frames.empty()) throw IoError("pgm2ten: no .pgm frames in " + dir);
  std::sort(frames.begin(), frames.end());

  Tensor first = read_pgm(frames[0].string());
  Tensor video({frames.size(), first.shape()[0], first.shape()[1]});
  const size_t frame_size = first.size();
  for (size_t f = 0; f < frames.size(); ++f) {
    Tensor img = read_pgm(frames[f].string());
    if (!img.same_shape(first)) throw IoError("pgm2ten: frame size mismatch: " + frames[f].string());
    for (size_t i = 0; i < frame_size; ++i) video[f * frame_size + i] = img[i];
  }
  write_ten1(out_path, video);
  std::printf("frames=%zu rows=%zu cols=%zu out=%s\n", frames.size(), first.shape()[0],
              first.shape()[1], out_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directional tensor-product complex tight framelets (TP-CTF6-down and relatives)"};
  app.require_subcommand(1);

  BankArgs filters_bank, verify_bank, rt_bank, den_bank, inp_bank;

  auto* filters = app.add_subcommand("filters", "emit filter frequency samples as CSV");
  int filters_grid = 4096;
  std::string filters_out = ".";
  filters_bank.add_to(filters);
  filters->add_option("--grid", filters_grid, "grid size")->check(CLI::Range(8, 1 << 22));
  filters->add_option("--out", filters_out, "output directory");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  int verify_dims = 2, verify_levels = 3, verify_grid = 4096;
  double verify_perturb = 1.0;
  std::uint64_t verify_seed = 1;
  verify_bank.add_to(verify);
  verify->add_option("--dims", verify_dims)->check(CLI::Range(1, 4));
  verify->add_option("--levels", verify_levels)->check(CLI::Range(1, 10));
  verify->add_option("--grid", verify_grid)->check(CLI::Range(8, 1 << 22));
  verify->add_option("--perturb", verify_perturb, "scale the top high-pass filter");
  verify->add_option("--seed", verify_seed);

  auto* rt = app.add_subcommand("roundtrip", "analyze + synthesize a random tensor");
  int rt_dims = 1, rt_size = 256, rt_levels = 3;
  std::uint64_t rt_seed = 1;
  rt_bank.add_to(rt);
  rt->add_option("--dims", rt_dims)->check(CLI::Range(1, 4));
  rt->add_option("--size", rt_size)->check(CLI::Range(8, 1 << 22));
  rt->add_option("--levels", rt_levels)->check(CLI::Range(0, 10));
  rt->add_option("--seed", rt_seed);

  auto* red = app.add_subcommand("redundancy", "exact redundancy-rate table");
  int red_dims = 5;
  std::string red_levels = "inf";
  red->add_option("--dims", red_dims, "table rows for d = 1..dims")->check(CLI::Range(1, 10));
  red->add_option("--levels", red_levels, "decomposition level or 'inf'");

  auto* den = app.add_subcommand("denoise", "add seeded noise and denoise");
  std::string den_in, den_out = "denoised.pgm", den_noisy;
  double den_sigma = 0.0, den_constant = -1.0;
  int den_levels = -1, den_window = -1;
  std::uint64_t den_seed = 1;
  den_bank.add_to(den);
  den->add_option("--in", den_in, "clean input image (PGM or TEN1)")->required();
  den->add_option("--out", den_out, "denoised output");
  den->add_option("--noisy-out", den_noisy, "write the noisy input");
  den->add_option("--sigma", den_sigma, "noise standard deviation (> 0)")
      ->required()
      ->check(CLI::PositiveNumber);
  den->add_option("--levels", den_levels, "decomposition levels (default 5, video 4)");
  den->add_option("--seed", den_seed);
  den->add_option("--window", den_window, "shrinkage window radius (default 3, video 1)");
  den->add_option("--constant", den_constant, "shrinkage constant (default sqrt(3), video 2)");

  auto* inp = app.add_subcommand("inpaint", "mask pixels and restore by iterative thresholding");
  std::string inp_in, inp_out = "inpainted.pgm", inp_mask, inp_masked;
  double inp_sigma = 0.0, inp_lmax = 128.0, inp_lmin = -1.0;
  int inp_levels = -1, inp_iters = 20;
  std::uint64_t inp_seed = 1;
  inp_bank.add_to(inp);
  inp->add_option("--in", inp_in, "clean input image")->required();
  inp->add_option("--out", inp_out, "inpainted output");
  inp->add_option("--mask", inp_mask, "mask file (0 = missing) or random:<fraction>")->required();
  inp->add_option("--masked-out", inp_masked, "write the corrupted input");
  inp->add_option("--sigma", inp_sigma, "noise standard deviation (0 = noise-free)")
      ->check(CLI::NonNegativeNumber);
  inp->add_option("--levels", inp_levels);
  inp->add_option("--seed", inp_seed);
  inp->add_option("--iters", inp_iters, "thresholding iterations")->check(CLI::Range(2, 10000));
  inp->add_option("--lambda-max", inp_lmax)->check(CLI::PositiveNumber);
  inp->add_option("--lambda-min", inp_lmin, "default max(2*sigma, 0.5)");

  auto* psnr_cmd = app.add_subcommand("psnr", "PSNR between two files");
  std::string psnr_a, psnr_b;
  psnr_cmd->add_option("--a", psnr_a)->required();
  psnr_cmd->add_option("--b", psnr_b)->required();

  auto* p2t = app.add_subcommand("pgm2ten", "stack a directory of PGM frames into a TEN1 video");
  std::string p2t_dir, p2t_out = "video.ten";
  p2t->add_option("--dir", p2t_dir)->required();
  p2t->add_option("--out", p2t_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    if (filters->parsed()) return cmd_filters(filters_bank, filters_grid, filters_out);
    if (verify->parsed()) {
      return cmd_verify(verify_bank, verify_dims, verify_levels, verify_grid, verify_perturb,
                        verify_seed);
    }
    if (rt->parsed()) return cmd_roundtrip(rt_bank, rt_dims, rt_size, rt_levels, rt_seed);
    if (red->parsed()) return cmd_redundancy(red_dims, red_levels);
    if (den->parsed()) {
      return cmd_denoise(den_bank, den_in, den_out, den_noisy, den_sigma, den_levels, den_seed,
                         den_window, den_constant);
    }
    if (inp->parsed()) {
      return cmd_inpaint(inp_bank, inp_in, inp_out, inp_mask, inp_masked, inp_sigma, inp_levels,
                         inp_seed, inp_iters, inp_lmax, inp_lmin);
    }
    if (psnr_cmd->parsed()) return cmd_psnr(psnr_a, psnr_b);
    if (p2t->parsed()) return cmd_pgm2ten(p2t_dir, p2t_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

#include "tpctf/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace tpctf {

namespace {

int read_pnm_token(std::istream& in) {
  // skip whitespace and '#' comments
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  if (c == EOF) throw IoError("pgm: truncated header");
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    c = in.get();
  }
  return value;
}

void put_u64_le(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64_le(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  if (!in) throw IoError("ten1: truncated extents");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

void put_f64_le(std::ostream& out, double d) {
  std::uint64_t v;
  std::memcpy(&v, &d, 8);
  put_u64_le(out, v);
}

double get_f64_le(std::istream& in) {
  std::uint64_t v = get_u64_le(in);
  double d;
  std::memcpy(&d, &v, 8);
  return d;
}

}  // namespace

Tensor read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  if (m0 != 'P' || m1 != '5') throw IoError("pgm: not a binary PGM (P5): " + path);
  const int width = read_pnm_token(in);
  const int height = read_pnm_token(in);
  const int maxval = read_pnm_token(in);
  if (width <= 0 || height <= 0) throw IoError("pgm: bad dimensions in " + path);
  if (maxval != 255) throw IoError("pgm: only maxval 255 is supported: " + path);

  std::vector<unsigned char> raw(static_cast<size_t>(width) * static_cast<size_t>(height));
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<size_t>(in.gcount()) != raw.size()) throw IoError("pgm: truncated pixel data");

  Tensor img({static_cast<size_t>(height), static_cast<size_t>(width)});
  for (size_t i = 0; i < raw.size(); ++i) img[i] = static_cast<double>(raw[i]);
  return img;
}

void write_pgm(const std::string& path, const Tensor& image) {
  if (image.ndim() != 2) throw IoError("pgm: image must be 2-D");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << "P5\n" << image.shape()[1] << " " << image.shape()[0] << "\n255\n";
  std::vector<unsigned char> raw(image.size());
  for (size_t i = 0; i < image.size(); ++i) {
    const double v = std::lround(image[i]);
    raw[i] = static_cast<unsigned char>(v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v));
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw IoError("pgm: write failed for " + path);
}

Tensor read_ten1(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "TEN1", 4) != 0) throw IoError("ten1: bad magic in " + path);
  const int ndim = in.get();
  if (ndim <= 0 || ndim > 32) throw IoError("ten1: bad rank in " + path);
  std::vector<size_t> shape(static_cast<size_t>(ndim));
  for (auto& e : shape) e = static_cast<size_t>(get_u64_le(in));
  Tensor t(shape);
  for (size_t i = 0; i < t.size(); ++i) t[i] = get_f64_le(in);
  if (!in) throw IoError("ten1: truncated payload in " + path);
  return t;
}

void write_ten1(const std::string& path, const Tensor& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out.write("TEN1", 4);
  out.put(static_cast<char>(t.ndim()));
  for (size_t e : t.shape()) put_u64_le(out, static_cast<std::uint64_t>(e));
  for (size_t i = 0; i < t.size(); ++i) put_f64_le(out, t[i]);
  if (!out) throw IoError("ten1: write failed for " + path);
}

Tensor read_image_or_tensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char magic[4] = {0, 0, 0, 0};
  in.read(magic, 4);
  in.close();
  if (magic[0] == 'P' && magic[1] == '5') return read_pgm(path);
  if (std::memcmp(magic, "TEN1", 4) == 0) return read_ten1(path);
  throw IoError("unrecognized file format: " + path);
}

void write_like(const std::string& path, const Tensor& t) {
  if (t.ndim() == 2 && path.size() > 4 && path.substr(path.size() - 4) == ".pgm") {
    write_pgm(path, t);
  } else {
    write_ten1(path, t);
  }
}

std::string write_filter_csv(const std::string& dir, const SampledFilter& f, int n) {
  const std::string name = to_string(f.label()) + ".csv";
  const std::string path = dir.empty() ? name : dir + "/" + name;
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (!out) throw IoError("cannot write " + path);
  std::fputs("xi,re,im\n", out);
  const cvec& s = f.samples(n);
  for (int k = 0; k < n; ++k) {
    std::fprintf(out, "%.17g,%.17g,%.17g\n", grid_xi(n, k), s[static_cast<size_t>(k)].real(),
                 s[static_cast<size_t>(k)].imag());
  }
  std::fclose(out);
  return name;
}

}  // namespace tpctf

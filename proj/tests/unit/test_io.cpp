#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "synthetic.hpp"
#include "tpctf/io.hpp"

using namespace tpctf;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tpctf_io_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("TEN1 round trip is bit-exact") {
  TempDir tmp;
  Tensor t = synthetic::random_tensor({3, 4, 5}, 123);
  t[0] = -0.0;
  t[1] = 1e-308;
  t[2] = 255.999999999;
  write_ten1(tmp.file("t.ten"), t);
  Tensor back = read_ten1(tmp.file("t.ten"));
  REQUIRE(back.shape() == t.shape());
  for (size_t i = 0; i < t.size(); ++i) {
    CHECK(std::memcmp(&back[i], &t[i], sizeof(double)) == 0);
  }
}

TEST_CASE("PGM round trip preserves integer images") {
  TempDir tmp;
  Tensor img({5, 7});
  for (size_t i = 0; i < img.size(); ++i) img[i] = static_cast<double>((i * 37) % 256);
  write_pgm(tmp.file("img.pgm"), img);
  Tensor back = read_pgm(tmp.file("img.pgm"));
  REQUIRE(back.shape() == img.shape());
  for (size_t i = 0; i < img.size(); ++i) CHECK(back[i] == img[i]);
}

TEST_CASE("PGM write rounds and clamps") {
  TempDir tmp;
  Tensor img({1, 4}, {-3.0, 0.49, 254.51, 300.0});
  write_pgm(tmp.file("clamp.pgm"), img);
  Tensor back = read_pgm(tmp.file("clamp.pgm"));
  CHECK(back[0] == 0.0);
  CHECK(back[1] == 0.0);
  CHECK(back[2] == 255.0);
  CHECK(back[3] == 255.0);
}

TEST_CASE("PGM reader accepts comments and rejects foreign formats") {
  TempDir tmp;
  {
    std::ofstream out(tmp.file("c.pgm"), std::ios::binary);
    out << "P5\n# a comment\n2 2\n255\n";
    const unsigned char px[4] = {0, 64, 128, 255};
    out.write(reinterpret_cast<const char*>(px), 4);
  }
  Tensor t = read_pgm(tmp.file("c.pgm"));
  CHECK(t.shape() == std::vector<size_t>{2, 2});
  CHECK(t[3] == 255.0);

  {
    std::ofstream out(tmp.file("bad.pgm"), std::ios::binary);
    out << "P6\n2 2\n255\n";
  }
  CHECK_THROWS_AS(read_pgm(tmp.file("bad.pgm")), IoError);
  CHECK_THROWS_AS(read_pgm(tmp.file("missing.pgm")), IoError);

  {
    std::ofstream out(tmp.file("deep.pgm"), std::ios::binary);
    out << "P5\n2 2\n65535\n";
  }
  CHECK_THROWS_AS(read_pgm(tmp.file("deep.pgm")), IoError);
}

TEST_CASE("format auto-detection") {
  TempDir tmp;
  Tensor img({4, 4});
  for (size_t i = 0; i < img.size(); ++i) img[i] = static_cast<double>(i);
  write_pgm(tmp.file("a.pgm"), img);
  write_ten1(tmp.file("a.ten"), img);
  CHECK(read_image_or_tensor(tmp.file("a.pgm")).shape() == img.shape());
  CHECK(read_image_or_tensor(tmp.file("a.ten")).shape() == img.shape());
}

TEST_CASE("filter CSV emission") {
  TempDir tmp;
  FilterBank1D bank = build_bank(BankKind::Ctf6Down, ctf6down_parameters());
  const std::string name = write_filter_csv(tmp.path.string(), bank.filter(FilterLabel::bp(1)), 64);
  CHECK(name == "bp1.csv");

  std::ifstream in(tmp.file("bp1.csv"));
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "xi,re,im");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 64);
}

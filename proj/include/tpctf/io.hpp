#pragma once

#include <string>

#include "tpctf/filterbank.hpp"
#include "tpctf/tensor.hpp"

namespace tpctf {

/// Binary PGM (P5, maxval 255).  Values are rounded and clamped on write.
Tensor read_pgm(const std::string& path);
void write_pgm(const std::string& path, const Tensor& image);

// "TEN1" tensor container: magic, u8 ndim, u64-LE extents, f64-LE payload in
// C order.  Round trips are bit-exact.
Tensor read_ten1(const std::string& path);
void write_ten1(const std::string& path, const Tensor& t);

/// Auto-detect by magic bytes (P5 vs TEN1).
Tensor read_image_or_tensor(const std::string& path);
/// PGM for 2-D data ending in .pgm, TEN1 otherwise.
void write_like(const std::string& path, const Tensor& t);

/// One CSV per filter: header "xi,re,im", one grid point per row, %.17g.
/// Returns the file name written.
std::string write_filter_csv(const std::string& dir, const SampledFilter& f, int n);

}  // namespace tpctf

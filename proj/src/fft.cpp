#include "tpctf/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace tpctf {

namespace {

// Plans are cached per (shape, sign).  FFTW_UNALIGNED lets one plan serve any
// caller buffer; plan creation is serialized, execution is thread-safe.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache c;
    return c;
  }

  void execute(const std::vector<size_t>& shape, std::complex<double>* data, int sign) {
    fftw_plan plan = nullptr;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto key = std::make_pair(shape, sign);
      auto it = plans_.find(key);
      if (it == plans_.end()) {
        std::vector<int> dims(shape.begin(), shape.end());
        std::vector<std::complex<double>> scratch(Tensor::count(shape));
        plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(),
                             reinterpret_cast<fftw_complex*>(scratch.data()),
                             reinterpret_cast<fftw_complex*>(scratch.data()), sign,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan) throw ShapeError("fft: failed to plan transform");
        plans_.emplace(key, plan);
      } else {
        plan = it->second;
      }
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data),
                     reinterpret_cast<fftw_complex*>(data));
  }

 private:
  PlanCache() = default;
  std::mutex mutex_;
  std::map<std::pair<std::vector<size_t>, int>, fftw_plan> plans_;
};

}  // namespace

void dft_inplace(const std::vector<size_t>& shape, std::complex<double>* data, int sign) {
  if (shape.empty()) throw ShapeError("fft: empty shape");
  PlanCache::instance().execute(shape, data, sign);
}

CTensor fft_of_real(const Tensor& t) {
  CTensor out = to_complex(t);
  dft_inplace(out.shape(), out.data(), FFTW_FORWARD);
  return out;
}

CTensor fft(const CTensor& t) {
  CTensor out = t;
  dft_inplace(out.shape(), out.data(), FFTW_FORWARD);
  return out;
}

CTensor ifft(CTensor t) {
  dft_inplace(t.shape(), t.data(), FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(t.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] *= scale;
  return t;
}

Tensor ifft_real(CTensor t, double* max_imag) {
  t = ifft(std::move(t));
  Tensor out(t.shape());
  double mi = 0.0;
  for (size_t i = 0; i < t.size(); ++i) {
    out[i] = t[i].real();
    mi = std::max(mi, std::abs(t[i].imag()));
  }
  if (max_imag) *max_imag = mi;
  return out;
}

}  // namespace tpctf

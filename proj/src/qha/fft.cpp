#include "qha/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace qha {
namespace {

// One cached FFTW plan pair operating on a dedicated aligned buffer.
// Data is copied through the buffer so caller memory needs no special
// alignment; at the model sizes used here the copies are negligible.
struct PlanEntry {
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    explicit PlanEntry(int n) {
        buf = fftw_alloc_complex(static_cast<size_t>(n));
        fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~PlanEntry() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }
    PlanEntry(const PlanEntry&) = delete;
    PlanEntry& operator=(const PlanEntry&) = delete;
};

std::mutex cache_mutex;

PlanEntry& plan_for(int n) {
    static std::map<int, PlanEntry*> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, new PlanEntry(n)).first;
    return *it->second;
}

}  // namespace

void dft_inplace(std::complex<double>* data, int n, int sign) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    PlanEntry& entry = plan_for(n);
    std::memcpy(static_cast<void*>(entry.buf), static_cast<const void*>(data),
                sizeof(fftw_complex) * static_cast<size_t>(n));
    fftw_execute(sign < 0 ? entry.fwd : entry.bwd);
    std::memcpy(static_cast<void*>(data), static_cast<const void*>(entry.buf),
                sizeof(fftw_complex) * static_cast<size_t>(n));
    if (sign > 0) {
        const double scale = 1.0 / n;
        for (int i = 0; i < n; ++i) data[i] *= scale;
    }
}

}  // namespace qha

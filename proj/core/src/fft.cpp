#include "vexfluid/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "vexfluid/errors.hpp"

namespace vexfluid {
namespace fft {

namespace {

struct PlanPair {
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
    std::size_t size = 0;

    ~PlanPair() {
        if (fwd) fftw_destroy_plan(fwd);
        if (inv) fftw_destroy_plan(inv);
        if (buf) fftw_free(buf);
    }
};

class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    PlanPair& get(const Grid& grid) {
        const std::array<int, 3> key = grid.dims;
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(key);
        if (it != plans_.end()) return *it->second;

        auto plan = std::make_unique<PlanPair>();
        plan->size = grid.size();
        plan->buf = fftw_alloc_complex(plan->size);
        if (!plan->buf) throw IoError("fftw allocation failed for grid " + grid.str());
        // FFTW_ESTIMATE keeps planning deterministic (no timing feedback).
        plan->fwd = fftw_plan_dft_3d(grid.dims[0], grid.dims[1], grid.dims[2], plan->buf,
                                     plan->buf, FFTW_FORWARD, FFTW_ESTIMATE);
        plan->inv = fftw_plan_dft_3d(grid.dims[0], grid.dims[1], grid.dims[2], plan->buf,
                                     plan->buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        auto& ref = *plan;
        plans_.emplace(key, std::move(plan));
        return ref;
    }

  private:
    std::mutex mutex_;
    std::map<std::array<int, 3>, std::unique_ptr<PlanPair>> plans_;
};

void execute(const Grid& grid, std::vector<std::complex<double>>& data, bool forward_dir) {
    if (data.size() != grid.size()) {
        throw GridMismatchError("fft: data length does not match grid " + grid.str());
    }
    PlanPair& plan = PlanCache::instance().get(grid);
    auto* buf = reinterpret_cast<std::complex<double>*>(plan.buf);
    std::copy(data.begin(), data.end(), buf);
    fftw_execute(forward_dir ? plan.fwd : plan.inv);
    if (forward_dir) {
        const double scale = 1.0 / static_cast<double>(grid.size());
        for (std::size_t i = 0; i < data.size(); ++i) data[i] = buf[i] * scale;
    } else {
        std::copy(buf, buf + data.size(), data.begin());
    }
}

}  // namespace

void forward(const Grid& grid, std::vector<std::complex<double>>& data) {
    execute(grid, data, true);
}

void inverse(const Grid& grid, std::vector<std::complex<double>>& data) {
    execute(grid, data, false);
}

std::vector<std::complex<double>> forward_real(const Grid& grid,
                                               const std::vector<double>& phys) {
    std::vector<std::complex<double>> data(phys.begin(), phys.end());
    forward(grid, data);
    return data;
}

std::vector<double> inverse_to_real(const Grid& grid,
                                    const std::vector<std::complex<double>>& coeffs) {
    std::vector<std::complex<double>> data = coeffs;
    inverse(grid, data);
    std::vector<double> out(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) out[i] = data[i].real();
    return out;
}

}  // namespace fft
}  // namespace vexfluid

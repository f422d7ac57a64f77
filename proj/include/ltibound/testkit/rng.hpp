#pragma once

#include <cstdint>
#include <random>

namespace ltibound::testkit {

/// Seeded generator for test data. Only raw mt19937_64 draws plus modulo
/// mapping, so sequences are identical across standard libraries (the
/// std::uniform_* distributions are not).
class TestRng {
  public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Integer in [lo, hi]; the modulo bias is irrelevant for test data.
    long range(long lo, long hi) {
        return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Nonzero integer in [-mag, mag].
    long nonzero(long mag) {
        long v = range(1, 2 * mag);
        return v <= mag ? v : mag - v;  // 1..mag, then -1..-mag
    }

    bool chance_percent(int p) { return range(0, 99) < p; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace ltibound::testkit

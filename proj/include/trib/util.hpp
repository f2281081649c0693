#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trib/scalar.hpp"
#include "trib/seq.hpp"

namespace trib {

// Deterministic splitmix64 generator so seeded runs reproduce across
// platforms and standard libraries.
class rng64 {
public:
    explicit rng64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi);

private:
    std::uint64_t state_;
};

// n specs with entries uniform in [-999, 999].
std::vector<sequence_spec> random_specs(size_t n, rng64& rng);

// "a,b,c" -> spec; throws std::invalid_argument.
sequence_spec parse_spec(const std::string& s);

// Inclusive "lo..hi" with negative bounds allowed; throws std::invalid_argument.
struct index_range {
    long lo;
    long hi;
};
index_range parse_range(const std::string& s);

}  // namespace trib

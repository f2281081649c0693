#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trib/identities.hpp"
#include "trib/scalar.hpp"
#include "trib/seq.hpp"

namespace trib {

using int_matrix = std::vector<std::vector<exact_int>>;

// Rows of shifted powered terms: one row per (spec, r) pair, entries
// term(spec, r - offset)^power across the offset window.
struct sample_matrix {
    int_matrix rows;
    std::vector<long> offsets;
    unsigned power = 1;
};

// Requires distinct offsets, at least 3 distinct specs, and
// |specs| * |r_values| >= |offsets| + 4 (insufficient_rows otherwise).
sample_matrix build_sample_matrix(const std::vector<sequence_spec>& specs,
                                  const std::vector<long>& offsets, unsigned power,
                                  const std::vector<long>& r_values);

// Primitive integer vectors (content 1, first nonzero entry positive)
// spanning the exact right kernel: elimination over the rationals, then
// denominators cleared.
struct kernel_basis {
    std::vector<std::vector<exact_int>> vectors;

    size_t dimension() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
};

kernel_basis integer_kernel(const int_matrix& m);

enum class discovery_status { found, not_found, ambiguous };

struct discovery_result {
    discovery_status status = discovery_status::not_found;
    std::optional<identity_template> identity;       // set when found
    std::vector<std::vector<exact_int>> kernel;      // full basis as computed
};

struct discovery_options {
    std::uint64_t rng_seed = 0x5eed;
    // Sample rows come from the canonical seed plus this many random specs.
    size_t extra_specs = 3;
    // Candidate confirmation sweep.
    long confirm_r_lo = -30;
    long confirm_r_hi = 120;
    size_t confirm_specs = 5;
};

// Samples shifted powered terms over several specs, computes the kernel, and
// returns:
//   found      one-dimensional kernel whose primitive vector passed residual
//              confirmation over random specs (the candidate is rejected to
//              not_found if confirmation fails);
//   not_found  empty kernel;
//   ambiguous  kernel dimension >= 2, full basis returned unresolved.
discovery_result discover_identity(unsigned power, const std::vector<long>& offsets,
                                   const discovery_options& opts = {});

}  // namespace trib

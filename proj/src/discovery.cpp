#include "trib/discovery.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "trib/errors.hpp"
#include "trib/util.hpp"

namespace trib {

sample_matrix build_sample_matrix(const std::vector<sequence_spec>& specs,
                                  const std::vector<long>& offsets, unsigned power,
                                  const std::vector<long>& r_values) {
    if (power == 0) throw std::invalid_argument("power must be >= 1");
    if (offsets.empty()) throw std::invalid_argument("offset window is empty");
    if (std::set<long>(offsets.begin(), offsets.end()).size() != offsets.size())
        throw std::invalid_argument("offsets must be distinct");
    if (r_values.empty()) throw std::invalid_argument("no sample indices");

    size_t distinct = 0;
    {
        std::vector<const sequence_spec*> seen;
        for (const auto& spec : specs) {
            bool dup = false;
            for (const auto* p : seen) dup = dup || (*p == spec);
            if (!dup) {
                seen.push_back(&spec);
                ++distinct;
            }
        }
    }
    if (distinct < 3)
        throw std::invalid_argument("sample matrix needs at least 3 distinct specs");

    const size_t rows = specs.size() * r_values.size();
    if (rows < offsets.size() + 4)
        throw insufficient_rows("need at least " + std::to_string(offsets.size() + 4) +
                                " sample rows, got " + std::to_string(rows));

    const auto [min_off, max_off] = std::minmax_element(offsets.begin(), offsets.end());
    const auto [min_r, max_r] = std::minmax_element(r_values.begin(), r_values.end());

    sample_matrix m;
    m.offsets = offsets;
    m.power = power;
    m.rows.reserve(rows);
    for (const auto& spec : specs) {
        term_cache cache(spec);
        cache.prefetch(*min_r - *max_off, *max_r - *min_off);
        for (long r : r_values) {
            std::vector<exact_int> row;
            row.reserve(offsets.size());
            for (long o : offsets) row.push_back(pow_int(cache.term(r - o), power));
            m.rows.push_back(std::move(row));
        }
    }
    return m;
}

namespace {

// Scale a rational vector to a primitive integer vector: clear denominators,
// divide by the content, make the first nonzero entry positive.
std::vector<exact_int> to_primitive(const std::vector<exact_rat>& v) {
    exact_int lcm = 1;
    for (const auto& q : v) {
        exact_int den = q.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<exact_int> w;
    w.reserve(v.size());
    for (const auto& q : v) {
        exact_rat scaled = q * exact_rat(lcm);
        w.push_back(scaled.get_num());
    }
    exact_int content = 0;
    for (const auto& e : w) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.get_mpz_t());
    if (content > 1)
        for (auto& e : w) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), content.get_mpz_t());
    for (const auto& e : w) {
        if (e == 0) continue;
        if (e < 0)
            for (auto& f : w) f = -f;
        break;
    }
    return w;
}

}  // namespace

kernel_basis integer_kernel(const int_matrix& m) {
    kernel_basis basis;
    if (m.empty()) return basis;
    const size_t rows = m.size();
    const size_t cols = m.front().size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    // Gauss-Jordan to reduced row echelon form over the rationals.
    std::vector<std::vector<exact_rat>> a(rows, std::vector<exact_rat>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = exact_rat(m[i][j]);

    std::vector<size_t> pivot_cols;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[rank]);
        const exact_rat inv = 1 / a[rank][col];
        for (size_t j = col; j < cols; ++j) a[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            const exact_rat factor = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= factor * a[rank][j];
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_cols) is_pivot[c] = true;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<exact_rat> v(cols);
        v[free_col] = 1;
        for (size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free_col];
        basis.vectors.push_back(to_primitive(v));
    }
    return basis;
}

namespace {

identity_template template_from_vector(unsigned power, const std::vector<long>& offsets,
                                       const std::vector<exact_int>& coeffs) {
    identity_template t;
    t.id = "discovered-p" + std::to_string(power);
    t.power = power;
    t.provenance = "discovered";
    for (size_t i = 0; i < offsets.size(); ++i)
        if (coeffs[i] != 0) t.terms.push_back({offsets[i], coeffs[i]});
    return t;
}

}  // namespace

discovery_result discover_identity(unsigned power, const std::vector<long>& offsets,
                                   const discovery_options& opts) {
    if (power == 0) throw std::invalid_argument("power must be >= 1");
    if (offsets.empty()) throw std::invalid_argument("offset window is empty");

    rng64 rng(opts.rng_seed);
    std::vector<sequence_spec> specs = {sequence_spec::tribonacci()};
    for (auto& spec : random_specs(opts.extra_specs, rng)) specs.push_back(std::move(spec));

    // Small indices keep the matrix entries short while staying independent.
    std::vector<long> r_values;
    for (long r = 10; r <= 10 + static_cast<long>(offsets.size()) + 8; ++r)
        r_values.push_back(r);

    const sample_matrix m = build_sample_matrix(specs, offsets, power, r_values);
    kernel_basis basis = integer_kernel(m.rows);

    discovery_result result;
    result.kernel = basis.vectors;
    if (basis.empty()) {
        result.status = discovery_status::not_found;
        return result;
    }
    if (basis.dimension() >= 2) {
        result.status = discovery_status::ambiguous;
        return result;
    }

    // A kernel of a finite sample is evidence, not proof; confirm the
    // candidate by residual sweeps before reporting it as an identity.
    identity_template candidate = template_from_vector(power, offsets, basis.vectors[0]);
    for (const auto& spec : random_specs(opts.confirm_specs, rng)) {
        if (!verify_range(candidate, spec, opts.confirm_r_lo, opts.confirm_r_hi).pass) {
            result.status = discovery_status::not_found;
            return result;
        }
    }
    result.status = discovery_status::found;
    result.identity = std::move(candidate);
    return result;
}

}  // namespace trib

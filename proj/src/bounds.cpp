#include "deltastar/bounds.hpp"

#include "deltastar/error.hpp"
#include "deltastar/primes.hpp"

#include <mpfr.h>

#include <cmath>
#include <span>

namespace deltastar {

namespace {

// Balanced product tree; keeps operands similar in size so GMP's
// subquadratic multiplication applies.
mpz_class product(std::span<const std::uint64_t> values) {
    if (values.empty()) return 1;
    if (values.size() == 1) {
        mpz_class v;
        mpz_import(v.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &values[0]);
        return v;
    }
    const std::size_t mid = values.size() / 2;
    return product(values.first(mid)) * product(values.subspan(mid));
}

double estimated_digits(std::span<const std::uint64_t> primes) {
    double digits = 0;
    for (std::uint64_t p : primes) digits += std::log10(static_cast<double>(p));
    return digits;
}

mpq_class exact_product(std::span<const std::uint64_t> primes) {
    std::vector<std::uint64_t> shifted(primes.begin(), primes.end());
    for (auto& p : shifted) --p;
    mpq_class q(product(primes), product(shifted));
    q.canonicalize();
    return q;
}

class MpfrValue {
public:
    explicit MpfrValue(unsigned bits) { mpfr_init2(v_, bits); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

// C * prod p/(p-1) with every operation rounded in `rnd`; all operands are
// positive so the result bounds the exact value from that side.
mpq_class directed_threshold(std::uint64_t c, std::span<const std::uint64_t> primes, unsigned bits,
                             mpfr_rnd_t rnd) {
    MpfrValue acc(bits);
    mpfr_set_ui(acc.get(), 1, rnd);
    for (std::uint64_t p : primes) {
        mpfr_mul_ui(acc.get(), acc.get(), static_cast<unsigned long>(p), rnd);
        mpfr_div_ui(acc.get(), acc.get(), static_cast<unsigned long>(p - 1), rnd);
    }
    mpfr_mul_ui(acc.get(), acc.get(), static_cast<unsigned long>(c), rnd);
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), acc.get());
    return q;
}

}  // namespace

mpz_class ceil(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string to_decimal(const mpq_class& q, unsigned places) {
    if (sgn(q) < 0) throw Error(ErrorCode::invalid_argument, "to_decimal expects a non-negative value");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    // floor(q * 10^places + 1/2)
    mpq_class scaled = q * scale + mpq_class(1, 2);
    mpz_class rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());

    std::string digits = rounded.get_str();
    if (places == 0) return digits;
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, 1, '.');
    return digits;
}

mpq_class mertens_product(std::uint64_t c, const BoundOptions& options) {
    const auto primes = primes_up_to(c);
    if (estimated_digits(primes) > static_cast<double>(options.digit_budget)) {
        throw Error(ErrorCode::resource_exhausted,
                    "exact product for C=" + std::to_string(c) + " exceeds the digit budget of " +
                        std::to_string(options.digit_budget));
    }
    return exact_product(primes);
}

BoundReport delta_r_bound(std::uint64_t c, const BoundOptions& options) {
    if (c == 0) throw Error(ErrorCode::invalid_argument, "C must be positive");
    BoundReport report;
    report.c = c;
    report.primes = primes_up_to(c);

    if (estimated_digits(report.primes) <= static_cast<double>(options.digit_budget)) {
        report.product = exact_product(report.primes);
        report.threshold_lower = *report.product * mpz_class(std::to_string(c));
        report.threshold_upper = report.threshold_lower;
        report.r_min = ceil(report.threshold_lower);
        return report;
    }

    report.threshold_lower = directed_threshold(c, report.primes, options.enclosure_bits, MPFR_RNDD);
    report.threshold_upper = directed_threshold(c, report.primes, options.enclosure_bits, MPFR_RNDU);
    const mpz_class lo = ceil(report.threshold_lower);
    const mpz_class hi = ceil(report.threshold_upper);
    if (lo != hi) {
        throw Error(ErrorCode::indeterminate,
                    "threshold enclosure for C=" + std::to_string(c) + " straddles an integer at " +
                        std::to_string(options.enclosure_bits) + " bits");
    }
    report.r_min = lo;
    return report;
}

std::string threshold_decimal(const BoundReport& report, unsigned places) {
    std::string lower = to_decimal(report.threshold_lower, places);
    if (!report.exact() && lower != to_decimal(report.threshold_upper, places)) {
        throw Error(ErrorCode::indeterminate,
                    "threshold enclosure too wide for " + std::to_string(places) + " decimals");
    }
    return lower;
}

}  // namespace deltastar

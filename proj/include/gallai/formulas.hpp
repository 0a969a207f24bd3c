#pragma once

// Closed-form expression evaluation in exact arbitrary-precision arithmetic.
// Where the source statement and its derivation display different formulas,
// both variants are exposed; choosing between them is left to the
// formula-vs-oracle ledger (mismatches there are data, not bugs).
//
// Conventions: out-of-range binomials evaluate to 0, (-1)!! = 0!! = 1, and
// the square-root ceiling is realized by integer search so results stay
// exact.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace gallai {

using BigInt = mpz_class;

inline BigInt factorial(long n) {
    if (n < 0) return 0;
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// n!! with (-1)!! = 0!! = 1; zero for n < -1
inline BigInt double_factorial(long n) {
    if (n < -1) return 0;
    if (n <= 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt power(long base, long exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

struct FormulaResult {
    std::string id;
    nlohmann::json params;
    std::string variant; // "", "statement", or "proof"
    BigInt value;

    nlohmann::json to_json() const {
        nlohmann::json j{{"id", id}, {"params", params}, {"value", value.get_str()}};
        if (!variant.empty()) j["variant"] = variant;
        return j;
    }
};

// smallest m with C(m,2) >= k; equals ceil((1+sqrt(1+8k))/2)
inline long n_k_threshold(long k) {
    if (k < 1) throw std::invalid_argument("needs k >= 1");
    long m = 2;
    while (m * (m - 1) / 2 < k) ++m;
    return m;
}

// r(n_1 K_2, ..., n_k K_2) = n_1 + 1 + sum(n_i - 1), n_1 the maximum
inline BigInt ramsey_matchings(const std::vector<long>& n_list) {
    if (n_list.empty()) throw std::invalid_argument("needs at least one matching size");
    for (long ni : n_list)
        if (ni < 1 || ni > n_list[0])
            throw std::invalid_argument("need all n_i >= 1 with n_1 the maximum");
    BigInt r = n_list[0] + 1;
    for (long ni : n_list) r += ni - 1;
    return r;
}

// gr_k(P_5 : H) for H of order t, k >= 5, k >= t
inline BigInt gr_p5_general(long k, long t, bool h_is_complete) {
    if (k < 5 || k < t) throw std::invalid_argument("needs k >= 5 and k >= t");
    if (k >= t + 1) return std::max<long>(n_k_threshold(k), 5);
    // k == t
    return h_is_complete ? BigInt((t - 1) * (t - 1) + 1) : BigInt(t + 1);
}

// the table's intervals do not cover every integer pair; pairs between two
// regimes raise a regime-gap error instead of interpolating
struct RegimeGapError : std::domain_error {
    using std::domain_error::domain_error;
};

inline BigInt gr_p5_matching(long k, long n) {
    if (k < 3 || n < 2) throw std::invalid_argument("needs k >= 3, n >= 2");
    if (k == 3) return 4 * n - 2;
    if (k >= 4 && 2 * k <= n + 3) return 3 * n - 1;
    if (2 * k >= n + 5 && k <= 2 * n) return 2 * n + 1;
    if (k >= 2 * n + 1) return std::max<long>(n_k_threshold(k), 5);
    throw RegimeGapError("gr_k(P5:nK2): (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                         ") falls in a regime gap");
}

inline BigInt gr_k13_matching(long k, long n) {
    if (k < 3 || n < 2) throw std::invalid_argument("needs k >= 3, n >= 2");
    if (k == 3) return 4 * n - 2;
    if (k >= 4 && 2 * k <= n + 3) return 3 * n - 1;
    if (2 * k >= n + 4 && k <= n) return 2 * n;
    if (k >= n + 1) return n_k_threshold(k);
    throw RegimeGapError("gr_k(K13:nK2): (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                         ") falls in a regime gap");
}

inline BigInt gr_k3_matching(long k, long n) {
    if (k < 1 || n < 1) throw std::invalid_argument("needs k >= 1, n >= 1");
    return BigInt(k + 1) * (n - 1) + 2;
}

// r^k_loc(nK_2) = n + 1 + k(n-1)
inline BigInt local_ramsey_matching(long k, long n) {
    if (k < 1 || n < 2) throw std::invalid_argument("needs k >= 1, n >= 2");
    return BigInt(n) + 1 + BigInt(k) * (n - 1);
}

// (2n_1)! / (2^{n_1} n_1!) = (2n_1 - 1)!!
inline BigInt stripes_multiplicity_bound(long n1) {
    if (n1 < 1) throw std::invalid_argument("needs n1 >= 1");
    BigInt via_factorials = factorial(2 * n1) / (power(2, n1) * factorial(n1));
    BigInt via_double = double_factorial(2 * n1 - 1);
    if (via_factorials != via_double) throw std::logic_error("double factorial identity");
    return via_double;
}

// min over 0 <= r <= 4n-2 of C(floor((4n-1-r)/3), n) + r(4n-5)
inline BigInt gm3_k13_lower(long n, long* argmin_r = nullptr) {
    if (n < 2) throw std::invalid_argument("needs n >= 2");
    std::optional<BigInt> best;
    for (long r = 0; r <= 4 * n - 2; ++r) {
        BigInt term = binomial((4 * n - 1 - r) / 3, n) + BigInt(r) * (4 * n - 5);
        if (!best || term < *best) {
            best = term;
            if (argmin_r) *argmin_r = r;
        }
    }
    return *best;
}

enum class LemcountVariant { statement, proof };

// number of color-1 i-matchings in the K_{2k-2} rainbow-matching coloring as
// displayed; the statement uses C(k-1-x, i-x), the derivation C(k-1-x, i-2x)
inline BigInt lemcount_formula(long k, long i, LemcountVariant variant) {
    if (k < 2 || i < 0 || i > k) throw std::invalid_argument("needs k >= 2, 0 <= i <= k");
    BigInt sum = 0;
    for (long x = 0; x <= i / 2; ++x) {
        long second = variant == LemcountVariant::statement ? i - x : i - 2 * x;
        sum += binomial(k - 1, x) * binomial(k - 1 - x, second) * power(2, x) *
               power(4, i - 2 * x) * double_factorial(2 * x - 1) *
               double_factorial(2 * i - 4 * x - 1);
    }
    return sum;
}

// inner factor shared by the two multiplicity upper-bound displays
inline BigInt lemcount_inner(long base, long i, bool halved_first_factorial) {
    BigInt sum = 0;
    for (long x = 0; x <= i / 2; ++x) {
        BigInt f1 = halved_first_factorial ? double_factorial(x - 1) : double_factorial(2 * x - 1);
        BigInt f2 = halved_first_factorial ? double_factorial(i - 2 * x - 1)
                                           : double_factorial(2 * i - 4 * x - 1);
        sum += binomial(base, x) * binomial(base - x, i - 2 * x) * power(2, x) *
               power(4, i - 2 * x) * f1 * f2;
    }
    return sum;
}

// GM_k(P5:nK2) upper bound for n <= 2k-4: sum_i X(i) C(2k-4, n-i) C(n, n-i) (n-i)!
inline BigInt gm_p5_upper_small(long k, long n) {
    if (k < 5 || n < 2 || n > 2 * k - 4)
        throw std::invalid_argument("needs k >= 5 and 2 <= n <= 2k-4");
    BigInt sum = 0;
    for (long i = 1; i <= n; ++i) {
        BigInt x = lemcount_inner(k - 1, i, false);
        sum += x * binomial(2 * k - 4, n - i) * binomial(n, n - i) * factorial(n - i);
    }
    return sum;
}

// GM_k(P5:nK2) upper bound for n >= 2k-4, reproduced as displayed (the L
// factor shows (x-1)!!(i-2x-1)!! where the matching lemma uses (2x-1)!!)
inline BigInt gm_p5_upper_large(long k, long n) {
    if (k < 5 || n < 2 * k - 4) throw std::invalid_argument("needs k >= 5 and n >= 2k-4");
    BigInt sum = 0;
    for (long i = 1; i <= k - 3; ++i) {
        BigInt l = lemcount_inner(k - 3, i, true);
        for (long j = 1; j <= n - 2 * k + 6; ++j) {
            BigInt m = binomial(n - 2 * k + 6, j) * binomial(2 * k - 6 - 2 * i, j) * factorial(j);
            sum += l * m * binomial(2 * n - 1, n - i - j) *
                   binomial(n - 2 * k + 6 - 2 * i - 2 * j, n - i - j) * factorial(n - j - i);
        }
    }
    return sum;
}

// 2-matchings of a monochromatic K_m: 3 C(m,4)
inline BigInt tau_mono_2k2(long m) { return 3 * binomial(m, 4); }

// min{2(n-3), tau(1,K_{n-k+1},2K2), (2n-k-4)(k-2)/2 + tau(1,K_{n-k},2K2)}.
// The middle expression can be a half-integer for odd k; since it bounds an
// integer count from below, its ceiling is used.
inline BigInt tau_recursion_lower(long k, long n) {
    if (k < 3 || n < k + 3) throw std::invalid_argument("needs k >= 3, n >= k+3");
    BigInt a = 2 * (n - 3);
    BigInt b = tau_mono_2k2(n - k + 1);
    BigInt c_num = BigInt(2 * n - k - 4) * (k - 2); // over 2, take ceiling
    BigInt c = (c_num + 1) / 2 + tau_mono_2k2(n - k);
    BigInt best = a;
    if (b < best) best = b;
    if (c < best) best = c;
    return best;
}

inline BigInt broom_two_matchings_formula(long m, long ell) {
    if (m < 2 || ell < 0) throw std::invalid_argument("needs m >= 2, ell >= 0");
    return BigInt(m - 1) * (m + 2 * ell - 2);
}

} // namespace gallai

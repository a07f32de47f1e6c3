#include "qp/bounds.hpp"

#include <boost/multiprecision/integer.hpp>

#include "qp/error.hpp"

namespace qp {

BigFloat log2_bf(const BigFloat& x) {
    static const BigFloat ln2 = log(BigFloat(2));
    return log(x) / ln2;
}

BigFloat log2_bf(const BigInt& x) { return log2_bf(BigFloat(x)); }

BigFloat pow2_bf(const BigFloat& x) {
    BigFloat fl = floor(x);
    if (fl > BigFloat(4.0e18) || fl < BigFloat(-4.0e18))
        throw Error(ErrorCode::CAP_EXCEEDED, "2^x exponent outside representable range");
    long long i = fl.convert_to<long long>();
    BigFloat frac = x - fl;
    BigFloat mant = pow(BigFloat(2), frac);
    return ldexp(mant, i);
}

namespace {

// A_k(m) clamped at `cap`. For k >= 2 we have A_k(m) >= 2^m, so any argument
// at least bit-length(cap)+1 saturates immediately; that keeps the recursion
// depth bounded by the bit length of cap.
BigInt ack_saturating(int k, const BigInt& m, const BigInt& cap, const BigInt& base) {
    if (m < 1) throw Error(ErrorCode::BAD_INPUT, "Ackermann argument must be >= 1");
    if (k == 1) {
        BigInt v = 2 * m;
        return v >= cap ? cap : v;
    }
    if (m == 1) return base >= cap ? cap : base;
    if (m >= boost::multiprecision::msb(cap) + 2) return cap;
    BigInt inner = ack_saturating(k, m - 1, cap, base);
    return ack_saturating(k - 1, inner, cap, base);
}

}  // namespace

bool ackermann_at_least(int k, const BigInt& m, const BigInt& threshold,
                        const AckermannConfig& cfg) {
    if (threshold <= 1) return true;
    return ack_saturating(k, m, threshold, cfg.base_value_at_one) >= threshold;
}

int alpha(const BigInt& n, const AckermannConfig& cfg) {
    if (n < 1) throw Error(ErrorCode::BAD_INPUT, "alpha requires n >= 1");
    if (cfg.base_value_at_one < 2)
        throw Error(ErrorCode::BAD_INPUT, "base_value_at_one must be >= 2");
    for (int k = 1;; ++k) {
        if (ackermann_at_least(k, BigInt(k), n, cfg)) return k;
    }
}

BigFloat klazar_bound_log2(const BigInt& n, int l, int t, const AckermannConfig& cfg) {
    if (n < 1 || l < 2 || t < 3)
        throw Error(ErrorCode::PRECONDITION, "Klazar bound requires n >= 1, l >= 2, t >= 3");
    BigInt a = alpha(n, cfg);
    BigInt exponent = pow(a, static_cast<unsigned>(l) * static_cast<unsigned>(t));
    return log2_bf(n) + log2_bf(BigInt(l)) + BigFloat(l * t - 3) +
           BigFloat(10) * BigFloat(exponent) * log2_bf(BigInt(10 * l));
}

BigFloat pettie_bound_log2(const BigInt& n, int l, double c_pettie) {
    if (n < 1 || l < 2 || c_pettie <= 0)
        throw Error(ErrorCode::PRECONDITION, "Pettie bound requires n >= 1, l >= 2, c > 0");
    return BigFloat(c_pettie) * BigFloat(l) * BigFloat(l) + log2_bf(n);
}

const char* to_string(BoundName n) {
    switch (n) {
        case BoundName::KLAZAR: return "KLAZAR";
        case BoundName::PETTIE: return "PETTIE";
        case BoundName::THM1: return "THM1";
        case BoundName::THM2: return "THM2";
        case BoundName::PLANAR: return "PLANAR";
    }
    return "UNKNOWN";
}

BigFloat theorem_bound_log2(BoundName name, const BigInt& n, int k,
                            std::optional<double> constant_override,
                            const AckermannConfig& cfg) {
    switch (name) {
        case BoundName::PLANAR: {
            if (n < 3) throw Error(ErrorCode::PRECONDITION, "PLANAR bound requires n >= 3");
            return log2_bf(BigInt(3 * n - 6));
        }
        case BoundName::THM1: {
            if (n < 2 || k < 2)
                throw Error(ErrorCode::PRECONDITION, "THM1 requires n >= 2, k >= 2");
            BigInt a = alpha(n, cfg);
            BigFloat alpha_pow;  // alpha(n)^{c_k}, the exponent of 2
            if (constant_override) {
                alpha_pow = pow2_bf(BigFloat(*constant_override) * log2_bf(a));
            } else {
                // default c'_k = 40 * 2^(k^2 + 2k), kept exact
                BigInt ck = BigInt(40) << (static_cast<unsigned>(k) * static_cast<unsigned>(k) +
                                           2 * static_cast<unsigned>(k));
                alpha_pow = (a == 1) ? BigFloat(1) : pow2_bf(BigFloat(ck) * log2_bf(a));
            }
            return log2_bf(n) + log2_bf(log2_bf(n)) + alpha_pow;
        }
        case BoundName::THM2: {
            if (n < 2 || k < 2)
                throw Error(ErrorCode::PRECONDITION, "THM2 requires n >= 2, k >= 2");
            if (!constant_override)
                throw Error(ErrorCode::MISSING_CONSTANT, "THM2 needs an explicit constant c");
            BigFloat k6 = pow(BigFloat(k), 6);
            BigFloat loglog = (n == 2) ? BigFloat(0) : log2_bf(log2_bf(n));
            return BigFloat(*constant_override) * k6 + log2_bf(n) + loglog;
        }
        default:
            throw Error(ErrorCode::BAD_INPUT, "not a theorem bound name");
    }
}

BoundReport make_bound_report(BoundName name, const BigInt& n, int k,
                              std::optional<double> constant_override,
                              std::optional<BigInt> observed_count,
                              const AckermannConfig& cfg) {
    BoundReport r;
    r.name = name;
    r.parameters["n"] = n.str();
    r.parameters["k"] = std::to_string(k);
    if (constant_override)
        r.parameters["constant_override"] = std::to_string(*constant_override);
    r.log2_value = theorem_bound_log2(name, n, k, constant_override, cfg);
    if (observed_count) {
        r.parameters["observed"] = observed_count->str();
        r.exceeded = *observed_count > 0 && log2_bf(*observed_count) > r.log2_value;
    }
    return r;
}

}  // namespace qp

#pragma once

#include <map>
#include <optional>
#include <string>

#include "qp/numeric.hpp"

namespace qp {

/// Ackermann-Peter hierarchy configuration. A_1(n) = 2n and
/// A_k(n) = A_{k-1}(A_k(n-1)); the base case A_k(1) = base_value_at_one
/// (default 2) reproduces A_2(n) = 2^n and A_3 = tower of twos.
struct AckermannConfig {
    BigInt base_value_at_one = 2;
};

/// Inverse Ackermann: min k >= 1 with A(k) = A_k(k) >= n. Evaluated with
/// saturating arithmetic so astronomically large A-values are never
/// materialized.
int alpha(const BigInt& n, const AckermannConfig& cfg = {});

/// Whether A_k(m) >= threshold, computed with the same saturating scheme.
bool ackermann_at_least(int k, const BigInt& m, const BigInt& threshold,
                        const AckermannConfig& cfg = {});

/// log2 of Klazar's bound  n * l * 2^(lt-3) * (10l)^(10*alpha(n)^(lt)).
/// The exponent alpha(n)^(lt) is computed as an exact integer.
BigFloat klazar_bound_log2(const BigInt& n, int l, int t,
                           const AckermannConfig& cfg = {});

/// log2 of Pettie's bound 2^(c*l^2) * n with caller-supplied constant.
BigFloat pettie_bound_log2(const BigInt& n, int l, double c_pettie);

enum class BoundName { KLAZAR, PETTIE, THM1, THM2, PLANAR };

const char* to_string(BoundName n);

/// log2 of the named theorem bound:
///   THM1:   (n log2 n) * 2^(alpha(n)^c_k),  default c_k = 40 * 2^(k^2+2k)
///   THM2:   2^(c k^6) * n log2 n,           c must be supplied
///   PLANAR: 3n - 6
BigFloat theorem_bound_log2(BoundName name, const BigInt& n, int k,
                            std::optional<double> constant_override = std::nullopt,
                            const AckermannConfig& cfg = {});

/// Log-scale evaluation record of a named bound, parameters included
/// verbatim; `exceeded` is set when an observed count is supplied.
struct BoundReport {
    BoundName name;
    std::map<std::string, std::string> parameters;
    BigFloat log2_value;
    std::optional<bool> exceeded;
};

BoundReport make_bound_report(BoundName name, const BigInt& n, int k,
                              std::optional<double> constant_override = std::nullopt,
                              std::optional<BigInt> observed_count = std::nullopt,
                              const AckermannConfig& cfg = {});

}  // namespace qp

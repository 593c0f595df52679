#pragma once

#include <variant>
#include <vector>

#include "heckelr/multisegments.hpp"
#include "heckelr/products.hpp"

namespace heckelr {

/// Drinfeld polynomials P_1 .. P_{N-1} of a simple U_q(sl_N^)-module. Each
/// polynomial is stored as the sorted multiset of exponents e of its roots
/// q^{-e}; an empty multiset means P_k(u) = 1.
class DrinfeldData {
public:
    explicit DrinfeldData(Int rank);

    Int rank() const { return rank_; }
    /// Root exponents of P_k, 1 <= k <= rank - 1.
    const std::vector<Int>& roots(Int k) const;
    void add_root(Int k, Int exponent);
    /// sum_k k * deg P_k.
    Int weighted_degree() const;

    bool operator==(const DrinfeldData&) const = default;

private:
    Int rank_;
    std::vector<std::vector<Int>> roots_;
};

/// The functor kills the module; `longest` is the offending segment length.
struct ZeroModule {
    Int longest = 0;
    bool operator==(const ZeroModule&) const = default;
};

using DrinfeldResult = std::variant<ZeroModule, DrinfeldData>;

/// Degree and root exponent contributed by one segment: [a, b] gives the root
/// q^{-(a+b)} of P_{b-a+1}.
struct SegmentRoot {
    Int degree;
    Int exponent;
};
SegmentRoot segment_root(const Segment& s);

/// Throws DomainError when rank < 2.
DrinfeldResult drinfeld(const Multisegment& m, Int rank);

/// Recovers the multisegment from its Drinfeld polynomials.
Multisegment multisegment_of(const DrinfeldData& d);

struct TensorFactor {
    Multisegment source;
    DrinfeldData polynomials;
};

/// Composition factors of V(m1) (x) V(m2) over U_q(sl_N^), N = rank. Throws
/// DomainError when either input module itself vanishes at this rank.
std::vector<TensorFactor> tensor_factors(const EvaluationModuleSpec& e1, const EvaluationModuleSpec& e2, Int rank);

} // namespace heckelr

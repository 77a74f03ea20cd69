#include "hypdiv/solver.hpp"

namespace hypdiv {

namespace {

    BigCount sat_add(BigCount a, BigCount b)
    {
        BigCount out = 0;
        if (__builtin_add_overflow(a, b, &out) || out > big_count_cap)
            return big_count_cap;
        return out;
    }

    BigCount sat_mul(BigCount a, BigCount b)
    {
        BigCount out = 0;
        if (__builtin_mul_overflow(a, b, &out) || out > big_count_cap)
            return big_count_cap;
        return out;
    }

    BigCount sat_pow(BigCount base, BigCount exp)
    {
        BigCount out = 1;
        for (BigCount i = 0; i < exp; ++i) {
            out = sat_mul(out, base);
            if (out == big_count_cap || out == 0)
                break;
        }
        return out;
    }

    // Σ_{α=1}^{upper} α! · base^α
    BigCount factorial_power_sum(BigCount base, BigCount upper)
    {
        if (base == 0)
            return 0;
        BigCount sum = 0, factorial = 1, power = 1;
        for (BigCount alpha = 1; alpha <= upper; ++alpha) {
            factorial = sat_mul(factorial, alpha);
            power = sat_mul(power, base);
            sum = sat_add(sum, sat_mul(factorial, power));
            if (sum == big_count_cap)
                break;
        }
        return sum;
    }

    struct Shape
    {
        BigCount wildcard_budget;  // (k-1)(r+1)
        BigCount set_size_bound;   // (k-1)(r+1) + r
        BigCount far_distance;     // 3(k-1)(r+1) + 2r
        BigCount petal_base;       // (k-1)·2·far_distance
    };

    Shape shape(std::size_t k, std::size_t r)
    {
        if (k == 0)
            throw ContractError("thresholds are defined for k >= 1");
        Shape s{};
        s.wildcard_budget = sat_mul(k - 1, sat_add(r, 1));
        s.set_size_bound = sat_add(s.wildcard_budget, r);
        s.far_distance = sat_add(sat_mul(3, s.wildcard_budget), sat_mul(2, r));
        s.petal_base = sat_mul(sat_mul(k - 1, 2), s.far_distance);
        return s;
    }

} // namespace

BigCount zeta(std::size_t k, std::size_t r)
{
    const auto s = shape(k, r);
    const auto sum = factorial_power_sum(s.petal_base, s.set_size_bound);
    if (sum == 0)
        return 0;
    return sat_mul(sat_pow(3, s.wildcard_budget), sum);
}

BigCount sunflower_target(std::size_t k, std::size_t r)
{
    return sat_add(shape(k, r).petal_base, 2);
}

BigCount zeta_plus(std::size_t k, std::size_t r)
{
    const auto s = shape(k, r);
    const auto target = sat_add(s.petal_base, 2);
    const auto sum = sat_add(k, factorial_power_sum(target - 1, s.set_size_bound));
    return sat_mul(sat_pow(3, s.wildcard_budget), sum);
}

Thresholds Thresholds::for_parameters(std::size_t k, std::size_t r, const ThresholdOverrides & overrides)
{
    Thresholds t;
    t.zeta = hypdiv::zeta(k, r);
    t.zeta_gate = overrides.zeta_gate.value_or(zeta_plus(k, r));
    t.sunflower_target = overrides.sunflower_target.value_or(hypdiv::sunflower_target(k, r));
    t.overridden = overrides.any();
    return t;
}

} // namespace hypdiv

#include "kcob/abelian_group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kcob {

AbelianGroup::AbelianGroup(std::vector<Integer> invariant_factors) : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Integer& d = factors_[i];
        if (sgn(d) < 0 || d == 1) {
            throw std::invalid_argument("AbelianGroup: invariant factor " + d.get_str() + " not allowed");
        }
        if (i > 0) {
            const Integer& prev = factors_[i - 1];
            // 0 | 0 is the only allowed divisibility with a zero on the left.
            bool ok = sgn(prev) == 0 ? sgn(d) == 0 : (sgn(d) == 0 || mpz_divisible_p(d.get_mpz_t(), prev.get_mpz_t()));
            if (!ok) {
                throw std::invalid_argument("AbelianGroup: factors " + prev.get_str() + ", " + d.get_str() +
                                            " break the divisibility chain");
            }
        }
    }
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
    std::vector<Integer> torsion;
    std::size_t free_count = 0;
    for (const auto& o : orders) {
        Integer a = abs(o);
        if (sgn(a) == 0) {
            ++free_count;
        } else if (a != 1) {
            torsion.push_back(a);
        }
    }
    // (a, b) -> (gcd, lcm) sweeps leave each slot dividing all later ones.
    for (std::size_t i = 0; i < torsion.size(); ++i)
        for (std::size_t j = i + 1; j < torsion.size(); ++j) {
            Integer g = gcd(torsion[i], torsion[j]);
            Integer l = torsion[i] / g * torsion[j];
            torsion[i] = g;
            torsion[j] = l;
        }
    std::vector<Integer> factors;
    for (auto& t : torsion)
        if (t != 1) factors.push_back(t);
    factors.insert(factors.end(), free_count, Integer(0));
    return AbelianGroup(std::move(factors));
}

AbelianGroup AbelianGroup::free(std::size_t rank) { return AbelianGroup(std::vector<Integer>(rank, Integer(0))); }

std::size_t AbelianGroup::free_rank() const {
    return static_cast<std::size_t>(std::count_if(factors_.begin(), factors_.end(),
                                                  [](const Integer& d) { return sgn(d) == 0; }));
}

Integer AbelianGroup::torsion_order() const {
    Integer order = 1;
    for (const auto& d : factors_)
        if (sgn(d) != 0) order *= d;
    return order;
}

std::size_t AbelianGroup::dim_mod_p(const Integer& p) const {
    return static_cast<std::size_t>(std::count_if(factors_.begin(), factors_.end(), [&](const Integer& d) {
        return mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) != 0;
    }));
}

AbelianGroup AbelianGroup::primary_part(const Integer& p) const {
    std::vector<Integer> orders;
    for (const auto& d : factors_) {
        if (sgn(d) == 0) continue;
        Integer pk = 1;
        Integer rest = d;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            pk *= p;
        }
        orders.push_back(pk);
    }
    return from_cyclic_orders(orders);
}

std::string AbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " + ";
        os << 'Z';
        if (sgn(factors_[i]) != 0) os << factors_[i].get_str();
    }
    return os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<Integer> orders = a.invariant_factors();
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return AbelianGroup::from_cyclic_orders(orders);
}

AbelianGroup power(const AbelianGroup& g, std::size_t k) {
    std::vector<Integer> orders;
    orders.reserve(g.invariant_factors().size() * k);
    for (std::size_t i = 0; i < k; ++i)
        orders.insert(orders.end(), g.invariant_factors().begin(), g.invariant_factors().end());
    return AbelianGroup::from_cyclic_orders(orders);
}

}  // namespace kcob

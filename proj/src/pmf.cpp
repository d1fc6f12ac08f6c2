#include "gumball/pmf.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gumball {

MachineSpec MachineSpec::two_point(unsigned j) {
    if (j < 2)
        throw std::domain_error("MachineSpec: two-point law needs j >= 2");
    return {Kind::TwoPoint, j};
}

Pmf::Pmf(std::vector<Rat> mass, Rat overflow)
    : mass_(std::move(mass)), overflow_(std::move(overflow)) {
    if (mass_.empty())
        throw std::domain_error("Pmf: needs at least the 0 entry");
    Rat total = overflow_;
    if (overflow_.sign() < 0)
        throw std::domain_error("Pmf: negative overflow");
    for (const Rat& m : mass_) {
        if (m.sign() < 0)
            throw std::domain_error("Pmf: negative mass");
        total += m;
    }
    if (total != Rat(1))
        throw std::domain_error("Pmf: total mass " + total.to_fraction_string() + " != 1");
}

Pmf Pmf::point(unsigned v, unsigned cap) {
    if (v > cap)
        throw std::domain_error("Pmf::point: v > cap");
    std::vector<Rat> mass(cap + 1, Rat(0));
    mass[v] = Rat(1);
    return Pmf(unchecked_t{}, std::move(mass), Rat(0));
}

Pmf pmf_of(const MachineSpec& spec, unsigned cap) {
    if (cap < spec.max_support())
        throw std::domain_error("pmf_of: cap below the largest support point");
    std::vector<Rat> mass(cap + 1, Rat(0));
    if (spec.kind == MachineSpec::Kind::PointAtOne) {
        mass[1] = Rat(1);
    } else {
        Rat pj(1, spec.j);
        mass[0] = Rat(1) - pj;
        mass[spec.j] = pj;
    }
    return Pmf(std::move(mass), Rat(0));
}

Pmf convolve(const Pmf& a, const Pmf& b, unsigned cap) {
    std::vector<Rat> mass(cap + 1, Rat(0));
    for (unsigned i = 0; i <= a.cap() && i <= cap; ++i) {
        if (a.at(i).is_zero())
            continue;
        unsigned jmax = std::min(b.cap(), cap - i);
        for (unsigned j = 0; j <= jmax; ++j) {
            if (b.at(j).is_zero())
                continue;
            mass[i + j] += a.at(i) * b.at(j);
        }
    }
    // Inputs sum to 1 exactly, so the overflow is whatever is missing.
    Rat assigned(0);
    for (const Rat& m : mass)
        assigned += m;
    return Pmf(Pmf::unchecked_t{}, std::move(mass), Rat(1) - assigned);
}

Rat prob_at_most(const Pmf& p, unsigned t) {
    if (t > p.cap())
        throw std::domain_error("prob_at_most: t beyond cap, answer would be truncated");
    Rat total(0);
    for (unsigned v = 0; v <= t; ++v)
        total += p.at(v);
    return total;
}

Rat mean(const Pmf& p) {
    if (!p.overflow().is_zero())
        throw std::domain_error("mean: undefined with mass in the overflow bucket");
    Rat total(0);
    for (unsigned v = 1; v <= p.cap(); ++v) {
        if (!p.at(v).is_zero())
            total += Rat(v) * p.at(v);
    }
    return total;
}

Pmf lemma1_transport(const Pmf& p, unsigned n, unsigned k) {
    if (k <= n + 1)
        throw std::domain_error("lemma1_transport: requires k > n+1");
    if (k > p.cap())
        throw std::domain_error("lemma1_transport: atom position beyond cap");
    if (mean(p) != Rat(1))
        throw std::domain_error("lemma1_transport: input mean must be exactly 1");

    const Rat& pk = p.at(k);
    if (pk.is_zero())
        return p;

    Rat ratio(k, n + 1);
    std::vector<Rat> mass = p.mass();
    mass[k] = Rat(0);
    mass[n + 1] += ratio * pk;
    mass[0] -= (ratio - Rat(1)) * pk;
    if (mass[0].sign() < 0)
        throw std::domain_error("lemma1_transport: mass at 0 underflow, input was not mean-one");
    return Pmf(Pmf::unchecked_t{}, std::move(mass), p.overflow());
}

}  // namespace gumball

#include "skolem/classifier.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace skolem {

namespace {

void add_primes(std::set<Integer>& out, const Integer& v) {
    if (v == 0) {
        return;
    }
    for (const auto& [p, e] : factorize(v)) {
        out.insert(p);
    }
}

void add_primes(std::set<Integer>& out, const Rat& v) {
    add_primes(out, v.num());
    add_primes(out, v.den());
}

SupportSet from_set(const std::set<Integer>& s) { return {std::vector<Integer>(s.begin(), s.end())}; }

bool all_zero(const std::vector<long>& v) {
    for (const auto x : v) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

SupportSet support_set(const ClosedForm& cf, const Integer& b) {
    std::set<Integer> primes;
    add_primes(primes, b);
    for (const Rat* v : {&cf.b1, &cf.b2, &cf.c1, &cf.c2}) {
        add_primes(primes, *v);
    }
    return from_set(primes);
}

SupportSet support_set(const RatioPair& pair) {
    std::set<Integer> primes;
    add_primes(primes, pair.B);
    add_primes(primes, pair.C);
    return from_set(primes);
}

ValMatrix valuation_matrix(const RatioPair& pair, const SupportSet& t) {
    ValMatrix m;
    for (const auto& p : t.primes) {
        m.c_row.push_back(valuation(pair.C, p));
        m.b_row.push_back(valuation(pair.B, p));
    }
    return m;
}

std::optional<long> zero_index(const RatioPair& pair) {
    const Rat& B = pair.B;
    const Rat& C = pair.C;
    if (B.is_zero() || C.is_zero()) {
        throw error(errc::zero_argument, "ratio pair with a zero entry");
    }
    if (C == Rat(1)) {
        return B == Rat(1) ? std::optional<long>(0) : std::nullopt;
    }
    if (C == Rat(-1)) {
        if (B == Rat(1)) {
            return 0;
        }
        if (B == Rat(-1)) {
            return 1;
        }
        return std::nullopt;
    }
    // |C| != 1, so some prime divides its numerator or denominator.
    const Integer witness = C.num() != 1 && C.num() != -1 ? C.num() : C.den();
    const Integer p = factorize(witness).begin()->first;
    const long vc = valuation(C, p);
    const long vb = valuation(B, p);
    if (vb % vc != 0) {
        return std::nullopt;
    }
    const long m = vb / vc;
    if (C.pow(m) == B) {
        return m;
    }
    return std::nullopt;
}

std::optional<Relation> find_relation(const RatioPair& pair, const SupportSet& t) {
    const ValMatrix vm = valuation_matrix(pair, t);
    if (all_zero(vm.b_row)) {
        // B = +-1 exactly when its valuation vector over a covering T vanishes.
        if (pair.B.abs() == Rat(1)) {
            return Relation{1, 0, pair.B.sign()};
        }
        throw std::logic_error("support set does not cover B = " + pair.B.str());
    }
    if (all_zero(vm.c_row)) {
        return std::nullopt;
    }
    // k vB + l vC = 0 has a nonzero solution iff every 2x2 minor vanishes.
    const std::size_t n = t.primes.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (vm.c_row[i] * vm.b_row[j] - vm.c_row[j] * vm.b_row[i] != 0) {
                return std::nullopt;
            }
        }
    }
    std::size_t col = 0;
    while (vm.c_row[col] == 0) {
        ++col;
    }
    long k = vm.c_row[col];
    long l = -vm.b_row[col];
    const long g = std::gcd(k, l);
    k /= g;
    l /= g;
    if (k < 0) {
        k = -k;
        l = -l;
    }
    const Rat value = pair.B.pow(k) * pair.C.pow(l);
    if (value.abs() != Rat(1)) {
        throw std::logic_error("support set does not cover the pair (B, C)");
    }
    return Relation{k, l, value.sign()};
}

CaseLabel classify(const RatioPair& pair, const SupportSet& t) {
    if (const auto m = zero_index(pair)) {
        return Case1{*m};
    }
    if (pair.C == Rat(1) && pair.B == Rat(-1)) {
        return Case2{};
    }
    if (const auto rel = find_relation(pair, t)) {
        return NotCovered{*rel};
    }
    const ValMatrix vm = valuation_matrix(pair, t);
    const std::size_t n = t.primes.size();
    if (all_zero(vm.c_row)) {
        for (std::size_t i = 0; i < n; ++i) {
            if (vm.b_row[i] != 0) {
                return Case3{TopRowZero{t.primes[i]}};
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const long d = vm.c_row[i] * vm.b_row[j] - vm.c_row[j] * vm.b_row[i];
                if (d != 0) {
                    return Case3{Rank2{t.primes[i], t.primes[j], d}};
                }
            }
        }
    }
    throw std::logic_error("no relation but no pivot either for (B, C) = (" + pair.B.str() + ", " + pair.C.str() + ")");
}

std::string to_string(const Relation& r) {
    return "(k=" + std::to_string(r.k) + ", l=" + std::to_string(r.l) + ", sign=" + std::to_string(r.sign) + ")";
}

std::string to_string(const CaseLabel& label) {
    struct Visitor {
        std::string operator()(const Case1& c) const { return "Case1(m=" + std::to_string(c.m) + ")"; }
        std::string operator()(const Case2&) const { return "Case2"; }
        std::string operator()(const Case3& c) const {
            if (const auto* top = std::get_if<TopRowZero>(&c.pivot)) {
                return "Case3 TopRowZero(p'=" + top->p.get_str() + ")";
            }
            const auto& r2 = std::get<Rank2>(c.pivot);
            return "Case3 Rank2(p'=" + r2.p.get_str() + ", q'=" + r2.q.get_str() + ", d=" + std::to_string(r2.d) + ")";
        }
        std::string operator()(const NotCovered& c) const { return "NotCovered" + to_string(c.relation); }
    };
    return std::visit(Visitor{}, label);
}

}  // namespace skolem

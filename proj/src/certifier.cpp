#include "skolem/certifier.hpp"

#include <stdexcept>

#include "skolem/verifier.hpp"

namespace skolem {

namespace {

bool in_support(const SupportSet& t, std::uint64_t r) {
    for (const auto& p : t.primes) {
        if (mpz_cmp_ui(p.get_mpz_t(), r) == 0) {
            return true;
        }
    }
    return false;
}

std::uint64_t to_u64(unsigned long v) { return static_cast<std::uint64_t>(v); }

bool is_pivot(const SearchPlan& plan, const Integer& p) {
    if (const auto* top = std::get_if<TopRowZero>(&plan.pivot)) {
        return p == top->p;
    }
    const auto& r2 = std::get<Rank2>(plan.pivot);
    return p == r2.p || p == r2.q;
}

}  // namespace

bool has_small_factor(std::uint64_t r) {
    for (const std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        if (r % p == 0) {
            return r != p;
        }
    }
    return false;
}

bool trivial_symbols_hold(const SearchPlan& plan, std::uint64_t r) {
    const std::uint64_t e = (r - 1) / plan.n;
    for (const auto& p : plan.t.primes) {
        if (!is_pivot(plan, p) && mod_pow(to_u64(mpz_fdiv_ui(p.get_mpz_t(), r)), e, r) != 1) {
            return false;
        }
    }
    return true;
}

const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::theorem: return "theorem";
        case Mode::fallback: return "fallback";
        case Mode::automatic: return "auto";
    }
    return "auto";
}

Mode parse_mode(const std::string& text) {
    if (text == "theorem") {
        return Mode::theorem;
    }
    if (text == "fallback") {
        return Mode::fallback;
    }
    if (text == "auto") {
        return Mode::automatic;
    }
    throw std::invalid_argument("unknown mode '" + text + "' (expected theorem, fallback or auto)");
}

SearchPlan build_plan(const Case3& label, const RatioPair& pair, const SupportSet& t, std::uint64_t bound) {
    SearchPlan plan;
    plan.t = t;
    plan.pivot = label.pivot;
    plan.bound = bound;
    if (const auto* top = std::get_if<TopRowZero>(&label.pivot)) {
        plan.n = choose_modulus(label.pivot, valuation(pair.B, top->p));
        plan.targets = top_row_targets();
    } else {
        const auto& r2 = std::get<Rank2>(label.pivot);
        plan.n = choose_modulus(label.pivot, 0);
        const PivotMinor minor{valuation(pair.C, r2.p), valuation(pair.C, r2.q), valuation(pair.B, r2.p),
                               valuation(pair.B, r2.q)};
        plan.targets = solve_targets(minor, plan.n);
    }
    return plan;
}

bool plan_accepts(const SearchPlan& plan, std::uint64_t r, bool exact_targets) {
    const std::uint64_t n = plan.n;
    const std::uint64_t e = (r - 1) / n;
    const Integer* p_pivot = nullptr;
    const Integer* q_pivot = nullptr;
    if (const auto* top = std::get_if<TopRowZero>(&plan.pivot)) {
        p_pivot = &top->p;
    } else {
        p_pivot = &std::get<Rank2>(plan.pivot).p;
        q_pivot = &std::get<Rank2>(plan.pivot).q;
    }
    // Trivial symbols first: a^((r-1)/n) = 1 is independent of zeta.
    std::uint64_t p_res = 0;
    std::uint64_t q_res = 0;
    for (const auto& p : plan.t.primes) {
        const std::uint64_t x = to_u64(mpz_fdiv_ui(p.get_mpz_t(), r));
        if (p == *p_pivot) {
            p_res = x;
        } else if (q_pivot != nullptr && p == *q_pivot) {
            q_res = x;
        } else if (mod_pow(x, e, r) != 1) {
            return false;
        }
    }
    if (q_pivot == nullptr) {
        // Any nonzero class at p' makes the symbol of B primitive.
        return mod_pow(p_res, e, r) != 1;
    }
    const SymbolContext ctx(n, r);
    const unsigned ep = ctx.exponent_of_residue(p_res);
    const unsigned eq = ctx.exponent_of_residue(q_res);
    const auto& tg = plan.targets;
    if (exact_targets) {
        return ep == tg.a && eq == tg.b;
    }
    for (std::uint64_t t = 1; t < n; ++t) {
        if (ep == t * tg.a % n && eq == t * tg.b % n) {
            return true;
        }
    }
    return false;
}

std::vector<std::pair<Integer, unsigned>> symbol_exponents(const SearchPlan& plan, std::uint64_t r) {
    const SymbolContext ctx(plan.n, r);
    std::vector<std::pair<Integer, unsigned>> out;
    for (const auto& p : plan.t.primes) {
        out.emplace_back(p, ctx.exponent_of_residue(to_u64(mpz_fdiv_ui(p.get_mpz_t(), r))));
    }
    return out;
}

std::uint64_t search_certificate_prime(const SearchPlan& plan, Execution exec) {
    const std::uint64_t n = plan.n;
    // candidates r = 1 + (i + 1) n
    const std::uint64_t count = plan.bound > n ? (plan.bound - 1) / n : 0;
    auto candidate = [n](std::uint64_t i) { return 1 + (i + 1) * n; };
    const auto hit = kernels::first_match(exec, count, [&](std::uint64_t i) {
        const std::uint64_t r = candidate(i);
        // cheapest filters first; only primes reach plan_accepts
        return !has_small_factor(r) && trivial_symbols_hold(plan, r) && !in_support(plan.t, r) && is_prime(r) &&
               plan_accepts(plan, r);
    });
    if (!hit) {
        throw search_exhausted(plan.bound);
    }
    return candidate(*hit);
}

std::uint64_t fallback_scan(const ValidatedRecurrence& rec, std::uint64_t bound, Execution exec) {
    const SupportSet t = support_set(rec);
    const LinearRecurrence lin = rec.as_linear();
    const std::uint64_t count = bound >= 2 ? bound - 1 : 0;  // m = i + 2
    const auto hit = kernels::first_match(exec, count, [&](std::uint64_t i) {
        const std::uint64_t m = i + 2;
        return is_prime(m) && !in_support(t, m) && scan_admissible(lin, m) && scan_linear(lin, m).zero_free();
    });
    if (!hit) {
        throw search_exhausted(bound);
    }
    return *hit + 2;
}

namespace {

Certificate base_certificate(const ValidatedRecurrence& rec, const CertifyConfig& config, const CaseLabel& label) {
    Certificate cert;
    cert.subject.kind = SubjectKind::quadratic;
    cert.subject.recurrence = rec.as_linear();
    cert.subject.b = rec.b;
    cert.metadata["b"] = rec.b_inferred ? "inferred" : "given";
    cert.metadata["case"] = to_string(label);
    cert.metadata["mode"] = to_string(config.mode);
    return cert;
}

void attach_fallback(Certificate& cert, const ValidatedRecurrence& rec, const CertifyConfig& config) {
    const std::uint64_t m = fallback_scan(rec, config.bound, config.execution);
    cert.claim = Claim::no_zero_term;
    cert.witness = PrimeModulus{Integer(static_cast<unsigned long>(m)), std::nullopt, {}};
    cert.scan = scan_linear(cert.subject.recurrence, m);
    cert.metadata["route"] = "fallback";
}

}  // namespace

Certificate certify(const ValidatedRecurrence& rec, const CertifyConfig& config) {
    const RatioPair pair = ratio_pair(rec.closed);
    const SupportSet t = support_set(rec);
    const CaseLabel label = classify(pair, t);
    Certificate cert = base_certificate(rec, config, label);

    if (const auto* c1 = std::get_if<Case1>(&label)) {
        if (!term(rec, c1->m).is_zero()) {
            throw std::logic_error("Case1 index does not evaluate to zero");
        }
        cert.claim = Claim::zero_term;
        cert.witness = ZeroIndex{c1->m};
        cert.metadata["route"] = "zero-index";
        return cert;
    }
    if (const auto* nc = std::get_if<NotCovered>(&label)) {
        cert.metadata["relation"] = to_string(nc->relation);
        if (config.mode == Mode::theorem) {
            throw not_covered_by_theorem(nc->relation);
        }
        attach_fallback(cert, rec, config);
        return cert;
    }
    const auto* c3 = std::get_if<Case3>(&label);
    if (config.mode == Mode::fallback || c3 == nullptr) {
        // Case2 never arises for c1 != c2; any zero-free prime certifies it.
        attach_fallback(cert, rec, config);
        return cert;
    }

    const SearchPlan plan = build_plan(*c3, pair, t, config.bound);
    const std::uint64_t r = search_certificate_prime(plan, config.execution);
    ScanReport scan = scan_linear(cert.subject.recurrence, r);
    if (!scan.zero_free()) {
        throw std::logic_error("symbol search accepted r = " + std::to_string(r) + " but the scan finds a zero");
    }
    cert.claim = Claim::no_zero_term;
    cert.witness = PrimeModulus{Integer(static_cast<unsigned long>(r)), plan.n, symbol_exponents(plan, r)};
    cert.scan = std::move(scan);
    cert.metadata["route"] = "theorem";
    return cert;
}

Certificate certify_input(const RecurrenceInput& input, const CertifyConfig& config) {
    try {
        const ValidatedRecurrence rec = validate(input);
        return certify(rec, config);
    } catch (const degenerate_to_order1& reroute) {
        const auto& d = reroute.data();
        Certificate cert = certify_order1(d.a1, d.u0, d.b);
        cert.metadata["rerouted_from"] = "quadratic a1=" + input.a1.str() + " a2=" + input.a2.str() +
                                         " u0=" + input.u0.str() + " u1=" + input.u1.str();
        cert.metadata["mode"] = to_string(config.mode);
        return cert;
    }
}

}  // namespace skolem

#include "skolem/recurrence.hpp"

#include <stdexcept>

#include "skolem/verifier.hpp"

namespace skolem {

namespace {

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x.sign() < 0) {
        return std::nullopt;
    }
    const Integer num = x.num();
    const Integer den = x.den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer rn;
    Integer rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn, rd);
}

bool root_order(const Rat& c1, const Rat& c2) {
    const Rat m1 = c1.abs();
    const Rat m2 = c2.abs();
    return m1 > m2 || (m1 == m2 && c1.sign() > 0);
}

}  // namespace

ClosedForm canonical_closed_form(const Rat& b1, const Rat& b2, const Rat& c1, const Rat& c2) {
    if (root_order(c1, c2)) {
        return {b1, b2, c1, c2};
    }
    return {b2, b1, c2, c1};
}

ClosedForm to_closed_form(const Rat& a1, const Rat& a2, const Rat& u0, const Rat& u1) {
    if (a2.is_zero()) {
        throw error(errc::zero_a2, "a2 = 0: the recurrence has order < 2");
    }
    const Rat disc = a1 * a1 + Rat(4) * a2;
    if (disc.is_zero()) {
        const Rat root = a1 / Rat(2);
        throw error(errc::repeated_root,
                    "repeated root " + root.str() + ": characteristic polynomial is (x - " + root.str() +
                        ")^2; a sequence such as (2n+1)2^n has no zero term yet vanishes modulo every odd m");
    }
    const auto sq = rational_sqrt(disc);
    if (!sq) {
        throw error(errc::irrational_roots,
                    "discriminant " + disc.str() + " is not the square of a rational; roots are irrational");
    }
    Rat c1 = (a1 + *sq) / Rat(2);
    Rat c2 = (a1 - *sq) / Rat(2);
    if (!root_order(c1, c2)) {
        std::swap(c1, c2);
    }
    const Rat b1 = (u1 - c2 * u0) / (c1 - c2);
    const Rat b2 = u0 - b1;
    return {b1, b2, c1, c2};
}

Integer infer_base(std::initializer_list<Rat> values) {
    Integer lcm = 1;
    for (const auto& v : values) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
    }
    return radical(lcm);
}

ValidatedRecurrence validate(const RecurrenceInput& input) {
    ClosedForm cf = to_closed_form(input.a1, input.a2, input.u0, input.u1);

    ValidatedRecurrence rec{input.a1, input.a2, input.u0, input.u1, 1, false, cf};
    if (input.b) {
        if (*input.b < 1) {
            throw std::invalid_argument("b must be a positive integer");
        }
        rec.b = *input.b;
        for (const Rat* v : {&input.a1, &input.a2, &input.u0, &input.u1}) {
            for (const auto& [p, e] : factorize(v->den())) {
                if (mpz_divisible_p(rec.b.get_mpz_t(), p.get_mpz_t()) == 0) {
                    throw error(errc::denominator_outside_base,
                                "denominator of " + v->str() + " has prime " + p.get_str() +
                                    " not dividing b = " + rec.b.get_str());
                }
            }
        }
    } else {
        rec.b = infer_base({input.a1, input.a2, input.u0, input.u1});
        rec.b_inferred = true;
    }

    if (cf.b1.is_zero() || cf.b2.is_zero()) {
        // u_n collapses to a single geometric term (or vanishes identically).
        Order1Data reduced = cf.b1.is_zero() ? Order1Data{cf.c2, cf.b2, rec.b} : Order1Data{cf.c1, cf.b1, rec.b};
        throw degenerate_to_order1(std::move(reduced),
                                   "closed form has a vanishing coefficient; the sequence is u_n = " +
                                       (cf.b1.is_zero() ? cf.b2.str() + " * (" + cf.c2.str() + ")^n"
                                                        : cf.b1.str() + " * (" + cf.c1.str() + ")^n"));
    }
    return rec;
}

Rat term(const ClosedForm& cf, long n) { return cf.b1 * cf.c1.pow(n) + cf.b2 * cf.c2.pow(n); }

RatioPair ratio_pair(const ClosedForm& cf) { return {-cf.b2 / cf.b1, cf.c1 / cf.c2}; }

Certificate certify_order1(const Rat& a1, const Rat& u0, const Integer& b) {
    if (a1.is_zero()) {
        throw error(errc::zero_argument, "order-1 recurrence with a1 = 0");
    }
    Certificate cert;
    cert.subject.kind = SubjectKind::order1;
    cert.subject.recurrence = {{a1}, {u0}};
    cert.subject.b = b;
    cert.metadata["route"] = "order1";
    if (u0.is_zero()) {
        cert.claim = Claim::zero_term;
        cert.witness = ZeroIndex{0};
        return cert;
    }
    Integer avoid = abs(Integer(b * a1.num() * a1.den() * u0.num() * u0.den()));
    std::uint64_t p = 2;
    while (mpz_divisible_ui_p(avoid.get_mpz_t(), p) != 0) {
        do {
            ++p;
        } while (!is_prime(p));
    }
    cert.claim = Claim::no_zero_term;
    cert.witness = PrimeModulus{Integer(static_cast<unsigned long>(p)), std::nullopt, {}};
    cert.scan = scan_linear(cert.subject.recurrence, p);
    return cert;
}

}  // namespace skolem

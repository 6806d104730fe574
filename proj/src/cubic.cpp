#include "skolem/cubic.hpp"

#include <stdexcept>
#include <vector>

#include "skolem/classifier.hpp"
#include "skolem/verifier.hpp"

namespace skolem {

namespace {

// coefficient vectors, lowest degree first
std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

}  // namespace

CubicCoefficients cubic_coeffs(const Rat& c1, const Rat& c2) {
    if (c1.is_zero() || c2.is_zero() || c1 == c2 || c1 == -c2) {
        throw error(errc::degenerate_roots,
                    "roots c1 = " + c1.str() + ", c2 = " + c2.str() + " must be nonzero with c1 not in {c2, -c2}");
    }
    const auto p = poly_mul(poly_mul({-c1, Rat(1)}, {-c2, Rat(1)}), {c2, Rat(1)});
    // p = x^3 + p2 x^2 + p1 x + p0 = x^3 - a1 x^2 - a2 x - a3
    return {-p[2], -p[1], -p[0]};
}

LinearRecurrence CubicFamily::recurrence() const {
    return {{coeffs.a1, coeffs.a2, coeffs.a3}, {term(*this, 0), term(*this, 1), term(*this, 2)}};
}

Rat term(const CubicFamily& fam, long n) {
    const auto& d = fam.data;
    const Rat middle = (n % 2 == 0) ? d.b2 + d.b3 : d.b2 - d.b3;
    return d.b1 * d.c1.pow(n) + middle * d.c2.pow(n);
}

CubicFamily make_family(const CubicFamilyData& data, std::optional<Integer> b) {
    if (data.b1.is_zero() || data.b2.is_zero() || data.b3.is_zero()) {
        throw error(errc::zero_argument, "cubic family needs nonzero b1, b2, b3");
    }
    CubicFamily fam;
    fam.data = data;
    fam.coeffs = cubic_coeffs(data.c1, data.c2);
    fam.B_plus = -(data.b2 + data.b3) / data.b1;
    fam.B_minus = -(data.b2 - data.b3) / data.b1;
    fam.C = data.c1 / data.c2;

    const LinearRecurrence rec = fam.recurrence();
    const std::initializer_list<Rat> values{rec.coefficients[0], rec.coefficients[1], rec.coefficients[2],
                                            rec.initial[0],      rec.initial[1],      rec.initial[2]};
    if (b) {
        if (*b < 1) {
            throw std::invalid_argument("b must be a positive integer");
        }
        for (const auto& v : values) {
            for (const auto& [p, e] : factorize(v.den())) {
                if (mpz_divisible_p(b->get_mpz_t(), p.get_mpz_t()) == 0) {
                    throw error(errc::denominator_outside_base, "denominator of " + v.str() + " has prime " +
                                                                    p.get_str() + " not dividing b = " + b->get_str());
                }
            }
        }
        fam.b = *b;
    } else {
        fam.b = infer_base(values);
        fam.b_inferred = true;
    }
    return fam;
}

ClosedForm subsequence_closed_form(const CubicFamily& fam, Parity parity) {
    const auto& d = fam.data;
    const Rat c1sq = d.c1 * d.c1;
    const Rat c2sq = d.c2 * d.c2;
    if (parity == Parity::even) {
        return canonical_closed_form(d.b1, d.b2 + d.b3, c1sq, c2sq);
    }
    return canonical_closed_form(d.b1 * d.c1, (d.b2 - d.b3) * d.c2, c1sq, c2sq);
}

RecurrenceInput subsequence_input(const CubicFamily& fam, Parity parity) {
    const ClosedForm cf = subsequence_closed_form(fam, parity);
    return {cf.c1 + cf.c2, -(cf.c1 * cf.c2), term(cf, 0), term(cf, 1), fam.b};
}

std::pair<ClosedForm, ClosedForm> split(const CubicFamily& fam) {
    std::pair<ClosedForm, ClosedForm> out{subsequence_closed_form(fam, Parity::even),
                                          subsequence_closed_form(fam, Parity::odd)};
    for (const auto* cf : {&out.first, &out.second}) {
        if (cf->b1.is_zero() || cf->b2.is_zero()) {
            Order1Data reduced = cf->b1.is_zero() ? Order1Data{cf->c2, cf->b2, fam.b} : Order1Data{cf->c1, cf->b1, fam.b};
            throw degenerate_to_order1(std::move(reduced), std::string(cf == &out.first ? "even" : "odd") +
                                                               " subsequence reduces to a single geometric term");
        }
    }
    return out;
}

namespace {

struct ParityResult {
    Certificate cert;
    long original_zero = 0;  // meaningful for zero-term claims
};

ParityResult certify_parity(const CubicFamily& fam, Parity parity, const CertifyConfig& config) {
    const RecurrenceInput input = subsequence_input(fam, parity);
    ParityResult out;
    try {
        out.cert = certify(validate(input), config);
    } catch (const degenerate_to_order1& reroute) {
        // Keep the order-1 prime away from both roots so it stays admissible
        // for the full cubic scan.
        const auto& d = reroute.data();
        Integer avoid = fam.b * fam.data.c1.num() * fam.data.c1.den() * fam.data.c2.num() * fam.data.c2.den();
        out.cert = certify_order1(d.a1, d.u0, radical(abs(avoid)));
        out.cert.subject.b = fam.b;
    }
    if (out.cert.claim == Claim::zero_term) {
        const long k = std::get<ZeroIndex>(out.cert.witness).n;
        out.original_zero = parity == Parity::even ? 2 * k : 2 * k + 1;
    }
    return out;
}

Integer modulus_of(const Certificate& cert) {
    if (const auto* pm = std::get_if<PrimeModulus>(&cert.witness)) {
        return pm->m;
    }
    throw std::logic_error("subsequence certificate without a prime modulus");
}

bool works_for_whole_sequence(const LinearRecurrence& rec, const Integer& b, std::uint64_t r) {
    Integer g;
    const Integer rr(static_cast<unsigned long>(r));
    mpz_gcd(g.get_mpz_t(), rr.get_mpz_t(), b.get_mpz_t());
    return g == 1 && scan_admissible(rec, r) && scan_linear(rec, r).zero_free();
}

}  // namespace

Certificate certify_cubic(const CubicFamily& fam, const CertifyConfig& config) {
    Certificate cert;
    cert.subject.kind = SubjectKind::cubic;
    cert.subject.recurrence = fam.recurrence();
    cert.subject.b = fam.b;
    cert.subject.family = fam.data;
    cert.metadata["b"] = fam.b_inferred ? "inferred" : "given";
    cert.metadata["mode"] = to_string(config.mode);
    for (const auto& [name, B] : {std::pair<const char*, const Rat&>{"B_plus", fam.B_plus},
                                  std::pair<const char*, const Rat&>{"B_minus", fam.B_minus}}) {
        const RatioPair pair{B, fam.C};
        cert.metadata[std::string("corollary_") + name] =
            B.is_zero() ? "order1 (B = 0)" : to_string(classify(pair, support_set(pair)));
    }

    const ParityResult even = certify_parity(fam, Parity::even, config);
    const ParityResult odd = certify_parity(fam, Parity::odd, config);
    for (const auto& [parity, res] : {std::pair<Parity, const ParityResult&>{Parity::even, even},
                                      std::pair<Parity, const ParityResult&>{Parity::odd, odd}}) {
        const std::string prefix = parity_name(parity);
        for (const char* key : {"case", "route", "relation"}) {
            if (const auto it = res.cert.metadata.find(key); it != res.cert.metadata.end()) {
                cert.metadata[prefix + "_" + key] = it->second;
            }
        }
    }

    for (const ParityResult* res : {&even, &odd}) {
        if (res->cert.claim == Claim::zero_term) {
            if (!term(fam, res->original_zero).is_zero()) {
                throw std::logic_error("subsequence zero does not map to a zero of the cubic");
            }
            cert.claim = Claim::zero_term;
            cert.witness = ZeroIndex{res->original_zero};
            return cert;
        }
    }

    const Integer r_even = modulus_of(even.cert);
    const Integer r_odd = modulus_of(odd.cert);
    cert.metadata["even_prime"] = r_even.get_str();
    cert.metadata["odd_prime"] = r_odd.get_str();
    cert.claim = Claim::no_zero_term;
    const LinearRecurrence rec = cert.subject.recurrence;
    for (const ParityResult* res : {&even, &odd}) {
        const Integer r = modulus_of(res->cert);
        if (works_for_whole_sequence(rec, fam.b, r.get_ui())) {
            const auto& pm = std::get<PrimeModulus>(res->cert.witness);
            cert.witness = pm;
            cert.scan = scan_linear(rec, r.get_ui());
            return cert;
        }
    }

    // u_n = 0 (mod r_even r_odd) would need u_n = 0 mod r_even at even n or
    // mod r_odd at odd n, and neither happens.
    const Integer m = r_even * r_odd;
    cert.witness = CompositeModulus{m, {{r_even, "even"}, {r_odd, "odd"}}};
    ScanReport scan = scan_linear(rec, m.get_ui());
    if (!scan.zero_free()) {
        throw std::logic_error("composite modulus " + m.get_str() + " fails the full cubic scan");
    }
    cert.scan = std::move(scan);
    return cert;
}

}  // namespace skolem

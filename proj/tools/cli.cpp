#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skolem/certificate_io.hpp"
#include "skolem/certifier.hpp"
#include "skolem/classifier.hpp"
#include "skolem/cubic.hpp"
#include "skolem/density.hpp"
#include "skolem/recurrence.hpp"
#include "skolem/verifier.hpp"

namespace skolem::cli {

namespace {

struct QuadraticArgs {
    std::string a1, a2, u0, u1, b;

    [[nodiscard]] bool given() const { return !a1.empty() || !a2.empty() || !u0.empty() || !u1.empty(); }

    [[nodiscard]] RecurrenceInput input() const {
        if (a1.empty() || a2.empty() || u0.empty() || u1.empty()) {
            throw std::invalid_argument("quadratic input needs --a1, --a2, --u0 and --u1");
        }
        RecurrenceInput in{Rat::parse(a1), Rat::parse(a2), Rat::parse(u0), Rat::parse(u1), std::nullopt};
        if (!b.empty()) {
            in.b = parse_base(b);
        }
        return in;
    }

    static Integer parse_base(const std::string& text) {
        const Rat r = Rat::parse(text);
        if (!r.is_integer() || r.sign() <= 0) {
            throw std::invalid_argument("b must be a positive integer, got '" + text + "'");
        }
        return r.num();
    }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--a1", a1, "coefficient a1 (rational, e.g. 3 or -3/2)");
        cmd->add_option("--a2", a2, "coefficient a2");
        cmd->add_option("--u0", u0, "initial term u0");
        cmd->add_option("--u1", u1, "initial term u1");
        cmd->add_option("--b", b, "denominator base b (default: inferred)");
    }
};

struct PairArgs {
    std::string B, C;
    [[nodiscard]] bool given() const { return !B.empty() || !C.empty(); }
    [[nodiscard]] RatioPair pair() const {
        if (B.empty() || C.empty()) {
            throw std::invalid_argument("raw pair input needs both --B and --C");
        }
        RatioPair p{Rat::parse(B), Rat::parse(C)};
        if (p.B.is_zero() || p.C.is_zero()) {
            throw std::invalid_argument("B and C must be nonzero");
        }
        return p;
    }
    void add_to(CLI::App* cmd) {
        cmd->add_option("--B", B, "ratio B = -b2/b1 (raw pair entry)");
        cmd->add_option("--C", C, "ratio C = c1/c2 (raw pair entry)");
    }
};

struct CubicArgs {
    bool enabled = false;
    std::string b1, b2, b3, c1, c2;
    void add_to(CLI::App* cmd) {
        cmd->add_flag("--cubic", enabled, "certify u_n = b1 c1^n + (b2 + (-1)^n b3) c2^n");
        cmd->add_option("--b1", b1);
        cmd->add_option("--b2", b2);
        cmd->add_option("--b3", b3);
        cmd->add_option("--c1", c1);
        cmd->add_option("--c2", c2);
    }
    [[nodiscard]] CubicFamilyData data() const {
        if (b1.empty() || b2.empty() || b3.empty() || c1.empty() || c2.empty()) {
            throw std::invalid_argument("--cubic needs --b1, --b2, --b3, --c1 and --c2");
        }
        return {Rat::parse(b1), Rat::parse(b2), Rat::parse(b3), Rat::parse(c1), Rat::parse(c2)};
    }
};

std::uint64_t resolve_bound(const std::optional<std::uint64_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("SKOLEM_SEARCH_BOUND")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("SKOLEM_SEARCH_BOUND is not a number: '") + env + "'");
        }
    }
    return default_search_bound;
}

std::string join(const std::vector<Integer>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i == 0 ? "" : ", ") + v[i].get_str();
    }
    return s;
}

nlohmann::json label_json(const CaseLabel& label) {
    nlohmann::json j{{"label", to_string(label)}};
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Case1>) {
                j["case"] = "Case1";
                j["m"] = c.m;
            } else if constexpr (std::is_same_v<T, Case2>) {
                j["case"] = "Case2";
            } else if constexpr (std::is_same_v<T, Case3>) {
                j["case"] = "Case3";
                if (const auto* top = std::get_if<TopRowZero>(&c.pivot)) {
                    j["pivot"] = {{"kind", "TopRowZero"}, {"p", top->p.get_str()}};
                } else {
                    const auto& r2 = std::get<Rank2>(c.pivot);
                    j["pivot"] = {{"kind", "Rank2"}, {"p", r2.p.get_str()}, {"q", r2.q.get_str()}, {"d", r2.d}};
                }
            } else {
                j["case"] = "NotCovered";
                j["relation"] = {{"k", c.relation.k}, {"l", c.relation.l}, {"sign", c.relation.sign}};
            }
        },
        label);
    return j;
}

// fixed six-digit decimal for num/den without floating point
std::string decimal(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        return "n/a";
    }
    const auto scaled = static_cast<unsigned __int128>(num) * 1'000'000 / den;
    const auto whole = static_cast<std::uint64_t>(scaled / 1'000'000);
    std::string frac = std::to_string(static_cast<std::uint64_t>(scaled % 1'000'000));
    frac.insert(0, 6 - frac.size(), '0');
    return std::to_string(whole) + "." + frac;
}

void print_scan(std::ostream& out, const ScanReport& s) {
    out << "modulus: " << s.modulus << "\nperiod: " << s.period << "\nzero indices in period:";
    if (s.zero_indices_in_period.empty()) {
        out << " none";
    }
    for (const auto z : s.zero_indices_in_period) {
        out << ' ' << z;
    }
    out << "\nresidues:";
    for (const auto r : s.residues_sample) {
        out << ' ' << r;
    }
    out << '\n';
}

// --- commands -------------------------------------------------------------

int cmd_classify(const QuadraticArgs& q, const PairArgs& raw, bool as_json, std::ostream& out) {
    RatioPair pair;
    SupportSet t;
    nlohmann::json doc;
    if (raw.given()) {
        if (q.given()) {
            throw std::invalid_argument("give either a recurrence or a raw (B, C) pair, not both");
        }
        pair = raw.pair();
        t = support_set(pair);
    } else {
        ValidatedRecurrence rec;
        try {
            rec = validate(q.input());
        } catch (const degenerate_to_order1& e) {
            const auto& d = e.data();
            if (as_json) {
                out << nlohmann::json{{"case", "Order1"}, {"a1", d.a1.str()}, {"u0", d.u0.str()}, {"b", d.b.get_str()}}
                           .dump(2)
                    << '\n';
            } else {
                out << "case: Order1 (u_n = " << d.u0.str() << " * (" << d.a1.str() << ")^n, b = " << d.b.get_str()
                    << ")\n";
            }
            return exit_ok;
        }
        pair = ratio_pair(rec.closed);
        t = support_set(rec);
        const auto& cf = rec.closed;
        doc["closed_form"] = {{"b1", cf.b1.str()}, {"b2", cf.b2.str()}, {"c1", cf.c1.str()}, {"c2", cf.c2.str()}};
        doc["b"] = rec.b.get_str();
        if (!as_json) {
            out << "closed form: u_n = (" << cf.b1.str() << ")(" << cf.c1.str() << ")^n + (" << cf.b2.str() << ")("
                << cf.c2.str() << ")^n\n"
                << "b = " << rec.b.get_str() << (rec.b_inferred ? " (inferred)" : "") << '\n';
        }
    }
    const CaseLabel label = classify(pair, t);
    if (as_json) {
        doc["B"] = pair.B.str();
        doc["C"] = pair.C.str();
        nlohmann::json tj = nlohmann::json::array();
        for (const auto& p : t.primes) {
            tj.push_back(p.get_str());
        }
        doc["T"] = tj;
        doc["classification"] = label_json(label);
        out << doc.dump(2) << '\n';
    } else {
        out << "B = " << pair.B.str() << ", C = " << pair.C.str() << '\n'
            << "T = {" << join(t.primes) << "}\n"
            << "case: " << to_string(label) << '\n';
        if (const auto* nc = std::get_if<NotCovered>(&label)) {
            out << "relation: B^" << nc->relation.k << " C^" << nc->relation.l << " = " << nc->relation.sign << '\n';
        }
    }
    return exit_ok;
}

int cmd_certify(const QuadraticArgs& q, const CubicArgs& cubic, const std::string& mode,
                const std::optional<std::uint64_t>& bound, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
    CertifyConfig config;
    config.mode = parse_mode(mode);
    config.bound = resolve_bound(bound);
    Certificate cert;
    try {
        if (cubic.enabled) {
            std::optional<Integer> b;
            if (!q.b.empty()) {
                b = QuadraticArgs::parse_base(q.b);
            }
            cert = certify_cubic(make_family(cubic.data(), b), config);
        } else {
            cert = certify_input(q.input(), config);
        }
    } catch (const not_covered_by_theorem& e) {
        const auto& r = e.relation();
        err << "not covered by theorem: B^" << r.k << " C^" << r.l << " = " << r.sign << '\n';
        return exit_not_covered;
    } catch (const search_exhausted& e) {
        err << "search exhausted: " << e.what() << '\n';
        return exit_search_exhausted;
    }
    const std::string text = serialize(cert);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path);
        if (!file || !(file << text)) {
            throw std::invalid_argument("cannot write " + out_path);
        }
    }
    return exit_ok;
}

int cmd_verify(const std::string& path, std::ostream& out) {
    std::ifstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot read " + path);
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    const Certificate cert = parse_certificate(buffer.str());
    const Verdict v = verify_certificate(cert);
    out << (v.accepted ? "accepted: " : "rejected: ") << v.reason << '\n';
    return v.accepted ? exit_ok : exit_rejected;
}

int cmd_density(const QuadraticArgs& q, std::vector<std::uint64_t> maxima, bool csv, std::ostream& out,
                std::ostream& err) {
    if (maxima.empty()) {
        throw std::invalid_argument("density needs --max");
    }
    const ValidatedRecurrence rec = validate(q.input());
    const RatioPair pair = ratio_pair(rec.closed);
    const SupportSet t = support_set(rec);
    const CaseLabel label = classify(pair, t);
    if (const auto* nc = std::get_if<NotCovered>(&label)) {
        err << "no search plan: " << to_string(label) << '\n';
        (void)nc;
        return exit_not_covered;
    }
    const auto* c3 = std::get_if<Case3>(&label);
    if (c3 == nullptr) {
        throw std::invalid_argument("no search plan: instance is " + to_string(label));
    }
    const SearchPlan plan = build_plan(*c3, pair, t);
    if (csv) {
        out << "max,n,qualifying,class_primes,fraction\n";
    } else {
        out << "case: " << to_string(label) << "\nn = " << plan.n;
        if (plan.targets.kind == PlanKind::rank2) {
            out << ", targets (a, b) = (" << plan.targets.a << ", " << plan.targets.b << ")";
        }
        out << '\n';
    }
    for (const auto x : maxima) {
        const DensityCount c = density_count(plan, x);
        if (csv) {
            out << x << ',' << plan.n << ',' << c.qualifying << ',' << c.class_primes << ','
                << decimal(c.qualifying, c.class_primes) << '\n';
        } else {
            out << "max " << x << ": qualifying " << c.qualifying << " of " << c.class_primes
                << " primes = 1 mod " << plan.n << " (fraction " << decimal(c.qualifying, c.class_primes) << ")\n";
        }
    }
    return exit_ok;
}

int cmd_scan(const QuadraticArgs& q, const std::optional<std::uint64_t>& modulus,
             const std::optional<std::uint64_t>& bound, std::ostream& out, std::ostream& err) {
    const RecurrenceInput in = q.input();
    if (modulus) {
        print_scan(out, period_scan(in.a1, in.a2, in.u0, in.u1, *modulus));
        return exit_ok;
    }
    const ValidatedRecurrence rec = validate(in);
    try {
        const std::uint64_t m = fallback_scan(rec, resolve_bound(bound));
        out << "certificate prime: " << m << '\n';
        print_scan(out, scan_linear(rec.as_linear(), m));
    } catch (const search_exhausted& e) {
        err << "search exhausted: " << e.what() << '\n';
        return exit_search_exhausted;
    }
    return exit_ok;
}

int cmd_zero(const QuadraticArgs& q, const PairArgs& raw, std::ostream& out) {
    RatioPair pair;
    if (raw.given()) {
        pair = raw.pair();
    } else {
        pair = ratio_pair(validate(q.input()).closed);
    }
    if (const auto m = zero_index(pair)) {
        out << "zero index: " << *m << '\n';
    } else {
        out << "no zero term\n";
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certificates for zero terms of rational linear recurrences", "skolem"};
    app.require_subcommand(1);

    QuadraticArgs q;
    PairArgs raw;
    CubicArgs cubic;
    bool as_json = false;
    bool csv = false;
    std::string mode = "auto";
    std::optional<std::uint64_t> bound;
    std::optional<std::uint64_t> modulus;
    std::vector<std::uint64_t> maxima;
    std::string out_path;
    std::string cert_path;

    auto* classify_cmd = app.add_subcommand("classify", "report the theorem case of a recurrence or (B, C) pair");
    q.add_to(classify_cmd);
    raw.add_to(classify_cmd);
    classify_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* certify_cmd = app.add_subcommand("certify", "emit a certificate file");
    q.add_to(certify_cmd);
    cubic.add_to(certify_cmd);
    certify_cmd->add_option("--mode", mode, "theorem | fallback | auto")->check(CLI::IsMember({"theorem", "fallback", "auto"}));
    certify_cmd->add_option("--bound", bound, "largest candidate prime");
    certify_cmd->add_option("--out", out_path, "write the certificate here instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "check a certificate file");
    verify_cmd->add_option("path", cert_path, "certificate file")->required();

    auto* density_cmd = app.add_subcommand("density", "count primes satisfying the symbol conditions");
    q.add_to(density_cmd);
    density_cmd->add_option("--max", maxima, "upper bound(s) X")->required();
    density_cmd->add_flag("--csv", csv, "CSV output");

    auto* scan_cmd = app.add_subcommand("scan", "period scan modulo m, or direct search for a zero-free prime");
    q.add_to(scan_cmd);
    scan_cmd->add_option("--modulus", modulus, "scan this modulus only");
    scan_cmd->add_option("--bound", bound, "largest prime to try");

    auto* zero_cmd = app.add_subcommand("zero", "find n with u_n = 0");
    q.add_to(zero_cmd);
    raw.add_to(zero_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid_input;
    }

    try {
        if (classify_cmd->parsed()) {
            return cmd_classify(q, raw, as_json, out);
        }
        if (certify_cmd->parsed()) {
            return cmd_certify(q, cubic, mode, bound, out_path, out, err);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(cert_path, out);
        }
        if (density_cmd->parsed()) {
            return cmd_density(q, maxima, csv, out, err);
        }
        if (scan_cmd->parsed()) {
            return cmd_scan(q, modulus, bound, out, err);
        }
        if (zero_cmd->parsed()) {
            return cmd_zero(q, raw, out);
        }
    } catch (const error& e) {
        if (e.code() == errc::not_covered_by_theorem) {
            err << e.what() << '\n';
            return exit_not_covered;
        }
        if (e.code() == errc::search_exhausted) {
            err << e.what() << '\n';
            return exit_search_exhausted;
        }
        err << "invalid input (" << errc_name(e.code()) << "): " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_invalid_input;
    }
    return exit_invalid_input;
}

}  // namespace skolem::cli

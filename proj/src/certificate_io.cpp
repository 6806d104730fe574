#include "skolem/certificate_io.hpp"

#include <json.hpp>

#include "skolem/error.hpp"

namespace skolem {

using nlohmann::json;

namespace {

json rats_to_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& r : v) {
        out.push_back(r.str());
    }
    return out;
}

json subject_to_json(const Subject& s) {
    json out{{"kind", to_string(s.kind)},
             {"coefficients", rats_to_json(s.recurrence.coefficients)},
             {"initial", rats_to_json(s.recurrence.initial)},
             {"b", s.b.get_str()}};
    if (s.family) {
        const auto& f = *s.family;
        out["family"] = {{"b1", f.b1.str()}, {"b2", f.b2.str()}, {"b3", f.b3.str()},
                         {"c1", f.c1.str()}, {"c2", f.c2.str()}};
    }
    return out;
}

json witness_to_json(const Witness& w) {
    if (const auto* pm = std::get_if<PrimeModulus>(&w)) {
        json out{{"type", "prime-modulus"}, {"m", pm->m.get_str()}};
        if (pm->n_used) {
            out["n_used"] = *pm->n_used;
            json exps = json::array();
            for (const auto& [p, e] : pm->symbol_exponents) {
                exps.push_back({{"prime", p.get_str()}, {"exponent", e}});
            }
            out["symbol_exponents"] = exps;
        }
        return out;
    }
    if (const auto* cm = std::get_if<CompositeModulus>(&w)) {
        json factors = json::array();
        for (const auto& f : cm->factors) {
            factors.push_back({{"prime", f.prime.get_str()}, {"role", f.role}});
        }
        return {{"type", "composite-modulus"}, {"m", cm->m.get_str()}, {"factors", factors}};
    }
    return {{"type", "index"}, {"n", std::get<ZeroIndex>(w).n}};
}

json scan_to_json(const ScanReport& s) {
    return {{"modulus", std::to_string(s.modulus)},
            {"period", s.period},
            {"zero_indices_in_period", s.zero_indices_in_period},
            {"residues_sample", s.residues_sample}};
}

[[noreturn]] void malformed(const std::string& why) { throw error(errc::malformed_certificate, "malformed certificate: " + why); }

Integer integer_from(const json& j, const char* what) {
    if (!j.is_string()) {
        malformed(std::string(what) + " must be a string");
    }
    const Rat r = Rat::parse(j.get<std::string>());
    if (!r.is_integer()) {
        malformed(std::string(what) + " must be an integer");
    }
    return r.num();
}

std::vector<Rat> rats_from(const json& j, const char* what) {
    if (!j.is_array()) {
        malformed(std::string(what) + " must be an array");
    }
    std::vector<Rat> out;
    for (const auto& x : j) {
        if (!x.is_string()) {
            malformed(std::string(what) + " entries must be strings");
        }
        out.push_back(Rat::parse(x.get<std::string>()));
    }
    return out;
}

Subject subject_from(const json& j) {
    Subject s;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "quadratic") {
        s.kind = SubjectKind::quadratic;
    } else if (kind == "order1") {
        s.kind = SubjectKind::order1;
    } else if (kind == "cubic") {
        s.kind = SubjectKind::cubic;
    } else {
        malformed("unknown subject kind '" + kind + "'");
    }
    s.recurrence.coefficients = rats_from(j.at("coefficients"), "coefficients");
    s.recurrence.initial = rats_from(j.at("initial"), "initial");
    s.b = integer_from(j.at("b"), "b");
    if (j.contains("family")) {
        const auto& f = j.at("family");
        auto rat = [&](const char* key) { return Rat::parse(f.at(key).get<std::string>()); };
        s.family = CubicFamilyData{rat("b1"), rat("b2"), rat("b3"), rat("c1"), rat("c2")};
    }
    return s;
}

Witness witness_from(const json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "prime-modulus") {
        PrimeModulus pm{integer_from(j.at("m"), "m"), std::nullopt, {}};
        if (j.contains("n_used")) {
            pm.n_used = j.at("n_used").get<std::uint64_t>();
            for (const auto& e : j.at("symbol_exponents")) {
                pm.symbol_exponents.emplace_back(integer_from(e.at("prime"), "prime"), e.at("exponent").get<unsigned>());
            }
        }
        return pm;
    }
    if (type == "composite-modulus") {
        CompositeModulus cm{integer_from(j.at("m"), "m"), {}};
        for (const auto& f : j.at("factors")) {
            cm.factors.push_back({integer_from(f.at("prime"), "prime"), f.at("role").get<std::string>()});
        }
        return cm;
    }
    if (type == "index") {
        return ZeroIndex{j.at("n").get<long>()};
    }
    malformed("unknown witness type '" + type + "'");
}

ScanReport scan_from(const json& j) {
    ScanReport s;
    s.modulus = integer_from(j.at("modulus"), "modulus").get_ui();
    s.period = j.at("period").get<std::uint64_t>();
    s.zero_indices_in_period = j.at("zero_indices_in_period").get<std::vector<std::uint64_t>>();
    s.residues_sample = j.at("residues_sample").get<std::vector<std::uint64_t>>();
    return s;
}

}  // namespace

std::string serialize(const Certificate& cert) {
    json doc{{"version", cert.version},
             {"subject", subject_to_json(cert.subject)},
             {"claim", to_string(cert.claim)},
             {"witness", witness_to_json(cert.witness)},
             {"metadata", cert.metadata}};
    if (cert.scan) {
        doc["scan"] = scan_to_json(*cert.scan);
    }
    return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        malformed(e.what());
    }
    try {
        if (!doc.is_object()) {
            malformed("top level must be an object");
        }
        Certificate cert;
        cert.version = doc.at("version").get<int>();
        if (cert.version != 1) {
            malformed("unsupported version " + std::to_string(cert.version));
        }
        cert.subject = subject_from(doc.at("subject"));
        const auto claim = doc.at("claim").get<std::string>();
        if (claim == "zero-term") {
            cert.claim = Claim::zero_term;
        } else if (claim == "no-zero-term") {
            cert.claim = Claim::no_zero_term;
        } else {
            malformed("unknown claim '" + claim + "'");
        }
        cert.witness = witness_from(doc.at("witness"));
        if (doc.contains("scan")) {
            cert.scan = scan_from(doc.at("scan"));
        }
        if (doc.contains("metadata")) {
            cert.metadata = doc.at("metadata").get<std::map<std::string, std::string>>();
        }
        return cert;
    } catch (const json::exception& e) {
        malformed(e.what());
    } catch (const std::invalid_argument& e) {
        malformed(e.what());
    }
}

}  // namespace skolem

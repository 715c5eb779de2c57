#include "zetaforge/constants.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/specfun.hpp"
#include "zetaforge/summation.hpp"

#include "json.hpp"

#include <cmath>

namespace zetaforge::specfun {

namespace {

std::map<std::string, ConstantEntry> builtin_entries() {
    auto ref = [](const char* digits) {
        return ConstantEntry{digits, "reference digits; revalidated by builtin oracle", false};
    };
    std::map<std::string, ConstantEntry> e;
    e["pi"] = ref("3.1415926535897932384626433832795028841971693993751");
    e["gamma"] = ref("0.57721566490153286060651209008240243104215933593992");
    e["ln2"] = ref("0.69314718055994530941723212145817656807550013436026");
    e["zeta2"] = ref("1.6449340668482264364724151666460251892189499012068");
    e["zeta3"] = ref("1.2020569031595942853997381615114499907649862923405");
    e["gamma1"] = ref("-0.072815845483676724860586375874901319137736338334338");
    return e;
}

} // namespace

const ConstantsCache& ConstantsCache::builtin() {
    static const ConstantsCache cache(builtin_entries());
    return cache;
}

ConstantsCache ConstantsCache::validated_builtin() {
    auto entries = builtin_entries();
    struct Oracle {
        const char* name;
        DDouble (*fn)();
    };
    const Oracle oracles[] = {
        {"pi", oracle_pi},       {"gamma", oracle_gamma}, {"ln2", oracle_ln2},
        {"zeta2", oracle_zeta2}, {"zeta3", oracle_zeta3}, {"gamma1", oracle_gamma1},
    };
    for (const auto& o : oracles) {
        DDouble cached = DDouble::from_string(entries.at(o.name).digits);
        DDouble ora = o.fn();
        double scale = std::max(1.0, std::abs(cached.hi()));
        if (std::abs((cached - ora).hi()) > 1e-25 * scale)
            throw precision_error(std::string("constant '") + o.name +
                                  "' disagrees with its oracle beyond 25 digits");
        entries.at(o.name).validated = true;
    }
    return ConstantsCache(std::move(entries));
}

const ConstantEntry& ConstantsCache::entry(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw std::out_of_range("unknown constant: " + name);
    return it->second;
}

DDouble ConstantsCache::value(const std::string& name) const {
    return DDouble::from_string(entry(name).digits);
}

std::vector<std::string> ConstantsCache::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

std::string ConstantsCache::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    nlohmann::ordered_json ents;
    for (const auto& [name, e] : entries_) {
        ents[name] = {{"digits", e.digits},
                      {"provenance", e.provenance},
                      {"validated", e.validated}};
    }
    j["entries"] = ents;
    return j.dump(2);
}

ConstantsCache ConstantsCache::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw config_error("constants file: unsupported schema");
    std::map<std::string, ConstantEntry> entries;
    for (const auto& [name, e] : j.at("entries").items()) {
        entries[name] = ConstantEntry{e.at("digits").get<std::string>(),
                                      e.at("provenance").get<std::string>(),
                                      e.at("validated").get<bool>()};
    }
    return ConstantsCache(std::move(entries));
}

// ---------------------------------------------------------------------------
// oracles

DDouble oracle_pi() {
    return 16.0 * atan(DDouble(1.0) / 5.0) - 4.0 * atan(DDouble(1.0) / 239.0);
}

DDouble oracle_ln2() {
    // 2 atanh(1/3) = 2 sum_{k>=0} 3^-(2k+1)/(2k+1)
    DDouble p = DDouble(1.0) / 3.0;
    DDouble inv9 = DDouble(1.0) / 9.0;
    DDouble sum(0.0);
    for (int k = 0; k < 36; ++k) {
        sum += p / (double)(2 * k + 1);
        p *= inv9;
    }
    return ldexp(sum, 1);
}

DDouble oracle_gamma() { return numerics::euler_gamma_em(); }

DDouble oracle_zeta2() {
    DDouble p = oracle_pi();
    return p * p / 6.0;
}

DDouble oracle_zeta3() { return zeta(3.0).value; }

DDouble oracle_gamma1() { return stieltjes_gamma1(1.0).value; }

// ---------------------------------------------------------------------------
// runtime accessors

namespace {
DDouble cached(const char* name) { return ConstantsCache::builtin().value(name); }
}

DDouble const_pi() {
    static const DDouble v = cached("pi");
    return v;
}
DDouble const_gamma() {
    static const DDouble v = cached("gamma");
    return v;
}
DDouble const_ln2() {
    static const DDouble v = cached("ln2");
    return v;
}
DDouble const_zeta2() {
    static const DDouble v = cached("zeta2");
    return v;
}
DDouble const_zeta3() {
    static const DDouble v = cached("zeta3");
    return v;
}
DDouble const_gamma1() {
    static const DDouble v = cached("gamma1");
    return v;
}

} // namespace zetaforge::specfun

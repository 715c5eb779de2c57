#pragma once

// Vetted decimal-string constants with provenance and oracle revalidation.
// The cache is immutable after construction; runtime code reads parsed
// values, tests re-derive each entry by an independent route.

#include "zetaforge/ddouble.hpp"

#include <map>
#include <string>
#include <vector>

namespace zetaforge::specfun {

struct ConstantEntry {
    std::string digits;       // exact decimal string, >= 34 significant digits
    std::string provenance;
    bool validated = false;
};

class ConstantsCache {
public:
    /// The built-in table {pi, gamma, ln2, zeta2, zeta3, gamma1}, unvalidated.
    static const ConstantsCache& builtin();

    /// Built-in table with every entry recomputed by its oracle to >= 25
    /// digits; throws if any entry disagrees.
    static ConstantsCache validated_builtin();

    bool has(const std::string& name) const { return entries_.count(name) > 0; }
    const ConstantEntry& entry(const std::string& name) const;
    DDouble value(const std::string& name) const;
    std::vector<std::string> names() const;   // stable (sorted) order

    /// Versioned JSON ({"schema":1, "entries":{name:{digits,provenance,validated}}})
    std::string to_json() const;
    static ConstantsCache from_json(const std::string& text);

    explicit ConstantsCache(std::map<std::string, ConstantEntry> entries)
        : entries_(std::move(entries)) {}

private:
    std::map<std::string, ConstantEntry> entries_;
};

/// Oracle routes used for revalidation (independent of the decimal strings).
DDouble oracle_pi();      // Machin arctangent formula
DDouble oracle_ln2();     // 2 atanh(1/3) series
DDouble oracle_gamma();   // Euler-Maclaurin on sum(1/k) - ln N
DDouble oracle_zeta2();   // pi^2/6 from oracle_pi
DDouble oracle_zeta3();   // zeta(3) direct sum + tail
DDouble oracle_gamma1();  // stieltjes limit route at a = 1

// cached parsed values for runtime use
DDouble const_pi();
DDouble const_gamma();
DDouble const_ln2();
DDouble const_zeta2();
DDouble const_zeta3();
DDouble const_gamma1();

} // namespace zetaforge::specfun

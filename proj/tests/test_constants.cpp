#include "doctest.h"

#include "zetaforge/constants.hpp"
#include "zetaforge/errors.hpp"

using namespace zetaforge;
using namespace zetaforge::specfun;

TEST_CASE("builtin cache validates against oracles to 25+ digits") {
    ConstantsCache cache = ConstantsCache::validated_builtin();
    for (const auto& name : {"pi", "gamma", "ln2", "zeta2", "zeta3", "gamma1"}) {
        CHECK(cache.has(name));
        CHECK(cache.entry(name).validated);
        CHECK(cache.entry(name).digits.size() >= 35);   // >= 34 significant digits
    }
    CHECK_THROWS_AS((void)cache.entry("e"), std::out_of_range);
}

TEST_CASE("cache JSON round trip") {
    ConstantsCache cache = ConstantsCache::validated_builtin();
    std::string text = cache.to_json();
    ConstantsCache back = ConstantsCache::from_json(text);
    CHECK(back.names() == cache.names());
    for (const auto& n : cache.names()) {
        CHECK(back.entry(n).digits == cache.entry(n).digits);
        CHECK(back.entry(n).provenance == cache.entry(n).provenance);
        CHECK(back.entry(n).validated == cache.entry(n).validated);
    }
    CHECK_THROWS_AS(ConstantsCache::from_json("{\"schema\": 99, \"entries\": {}}"), config_error);
}

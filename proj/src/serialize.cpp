#include "freebell/serialize.hpp"

#include <string>

namespace freebell {
namespace serialize {

namespace {

std::string int_coeff(Int c) { return std::to_string(c); }

}  // namespace

std::string permutation_key(const Permutation& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

nlohmann::json to_json(const qsym::Element& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coeff] : e.terms())
        terms.push_back({{"key", key.to_string()}, {"coeff", int_coeff(coeff)}});
    return {{"basis", e.basis() == qsym::Basis::F ? "F" : "M"}, {"terms", terms}};
}

nlohmann::json to_json(const fqsym::Element& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coeff] : e.terms())
        terms.push_back({{"key", permutation_key(key)}, {"coeff", int_coeff(coeff)}});
    return {{"basis", e.basis() == fqsym::Basis::G ? "G" : "F"}, {"terms", terms}};
}

nlohmann::json to_json(const bell::YPolyZ& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coeff] : p.terms())
        terms.push_back({{"key", key.to_string()}, {"coeff", int_coeff(coeff)}});
    return {{"basis", "Y"}, {"terms", terms}};
}

nlohmann::json to_json(const bell::YPolyQ& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coeff] : p.terms())
        terms.push_back({{"key", key.to_string()}, {"coeff", coeff.to_string()}});
    return {{"basis", "Y"}, {"terms", terms}};
}

nlohmann::json to_json(const bell::FreeBellElement& e, int n) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [y, coeff] : e.terms()) {
        nlohmann::json inner = nlohmann::json::array();
        for (const auto& [key, c] : coeff.terms())
            inner.push_back({{"key", permutation_key(key)}, {"coeff", int_coeff(c)}});
        terms.push_back({{"Y", y.to_string()}, {"coeff_fqsym", inner}});
    }
    return {{"n", n}, {"terms", terms}};
}

nlohmann::json classes_json(int n) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : bellhopf::bell_classes_cached(n)) {
        classes.push_back({{"partition", c.partition.to_string()},
                           {"min", permutation_key(c.weak_min)},
                           {"max", permutation_key(c.weak_max)},
                           {"size", c.members.size()}});
    }
    return {{"n", n}, {"classes", classes}};
}

nlohmann::json poset_json(const bellhopf::BellPoset& poset) {
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& e : poset.hasse_edges())
        covers.push_back({{"lower", e.lower},
                          {"upper", e.upper},
                          {"kind", e.column ? "column" : "cross"}});
    return {{"ground", poset.ground()}, {"covers", covers}};
}

}  // namespace serialize
}  // namespace freebell

#ifndef FREEBELL_SERIALIZE_HPP
#define FREEBELL_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "freebell/bell.hpp"
#include "freebell/bellhopf.hpp"
#include "freebell/fqsym.hpp"
#include "freebell/qsym.hpp"

namespace freebell {
namespace serialize {

// All elements share one shape: {"basis": tag, "terms": [{"key", "coeff"}]}
// with coefficients rendered as canonical polynomial strings ("q^2+q", "-1",
// "2").  Permutation keys are comma-separated values, composition keys are
// "(2,2,1)", Y-monomial keys reuse the composition form.
nlohmann::json to_json(const qsym::Element& e);
nlohmann::json to_json(const fqsym::Element& e);
nlohmann::json to_json(const bell::YPolyZ& p);
nlohmann::json to_json(const bell::YPolyQ& p);

// {"n": 4, "terms": [{"Y": "(3,1)", "coeff_fqsym": [...]}, ...]} where each
// coefficient is the terms array of the G-basis element.
nlohmann::json to_json(const bell::FreeBellElement& e, int n);

// {"n": 4, "classes": [{"partition": "12|3|4", "min": "...", "max": "...",
// "size": k}, ...]} with permutations comma-separated.
nlohmann::json classes_json(int n);

// {"ground": [...], "covers": [{"lower", "upper", "kind"}]} with kind
// "column" or "cross".
nlohmann::json poset_json(const bellhopf::BellPoset& poset);

std::string permutation_key(const Permutation& p);

}  // namespace serialize
}  // namespace freebell

#endif

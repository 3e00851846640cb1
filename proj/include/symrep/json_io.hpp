#pragma once

#include <json.hpp>

#include "symrep/character.hpp"
#include "symrep/decomposition.hpp"
#include "symrep/extremal_ideal.hpp"
#include "symrep/polynomial.hpp"
#include "symrep/tableaux.hpp"
#include "symrep/verify.hpp"

// Big integers and rationals travel as strings so no precision is lost.
// Arrays keep the library's deterministic orders, so serialization is
// byte-stable and round-trips exactly.

namespace symrep {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const Decomposition& v);
Decomposition decomposition_from_json(const Json& j);

Json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const SYTableau& t);
Json to_json(const SSYTableau& t);

Json to_json(const BoundCheck& c);
BoundCheck bound_check_from_json(const Json& j);

Json to_json(const CharacterTable& t);

Json to_json(const KostkaInequalityReport& r);
KostkaInequalityReport kostka_inequality_report_from_json(const Json& j);

Json to_json(const AppendixReport& r);

Json to_json(const ElementaryReport& r);

Json to_json(const MainInequalityReport& r);

Json to_json(const BoundGridReport& r);
BoundGridReport bound_grid_report_from_json(const Json& j);

Json to_json(const GeneratorCertificate& c);

}  // namespace symrep

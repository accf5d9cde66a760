#pragma once

#include "dbx/inverse.hpp"
#include "dbx/oracle.hpp"
#include "dbx/points.hpp"

#include <json.hpp>

namespace dbx {

using nlohmann::json;

// Every number carries its representation tag.
json to_json(const ExactScalar& x);
json to_json(const ExpansionResult& e);
json to_json(const Verdict& v);
json to_json(const CountResult& c);
json to_json(const Membership& m);
json to_json(const DoubleBase& Q);
json to_json(const BaseProfile& p);
json to_json(const PointClass& pc);
json to_json(const Census& c);
json to_json(const Gap& g);
json to_json(const SolvedBase& s);
json to_json(const Table2Row& r);

}  // namespace dbx

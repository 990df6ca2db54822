#pragma once

// JSON forms of search and construction results.

#include "skewbrane/budget.hpp"
#include "skewbrane/hopf.hpp"
#include "skewbrane/search.hpp"

#include <json.hpp>

namespace skewbrane {

nlohmann::json to_json(const Eigen::VectorXd& v);
nlohmann::json to_json(const SearchConfig& cfg);
nlohmann::json to_json(const ParallelPair& p);
nlohmann::json to_json(const SkewReport& r);
nlohmann::json to_json(const DoublePoint& d);
nlohmann::json to_json(const DoublePointReport& r);
nlohmann::json to_json(const BoundCheck& b);
nlohmann::json to_json(const EpsilonBudget& b);
nlohmann::json to_json(const Grad5Report& g);
nlohmann::json to_json(const PermutationSign& s, int p, int q);

}  // namespace skewbrane

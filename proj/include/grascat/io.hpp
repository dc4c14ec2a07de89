#pragma once

// JSON readers and writers for the shared data types, plus access to the
// shipped fixture files.

#include <string>

#include "json.hpp"

#include "grascat/cluster.hpp"
#include "grascat/cmcat.hpp"
#include "grascat/gvec.hpp"
#include "grascat/qpa.hpp"
#include "grascat/tableau.hpp"

namespace grascat {

using Json = nlohmann::json;

// {"k":3,"n":9,"rows":[[1,2,3],[4,5,6],[7,8,9]]}
Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

// {"k":3,"ell":5,"factors":[[1,-5,1],[2,0,1]]} with (i, s, multiplicity)
Json to_json(const DominantMonomial& m);
DominantMonomial monomial_from_json(const Json& j);

// {"m":19,"n_mut":10,"arrows":[[0,1],...]}
Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

// Quiver plus "labels" (tableaux) and "name".
Json to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json to_json(const GVector& g, const Seed& s);
GVector gvector_from_json(const Json& j);

Json to_json(const ConePresentation& cp);

// {"k":3,"n":9,"factors":[[3,6,9],[2,5,8],[1,4,7]]}
Json to_json(const Profile& p);
Profile profile_from_json(const Json& j);

Json to_json(const KSubset& s);

QuiverWithPotential qp_from_json(const Json& j);
Json to_json(const QuiverWithPotential& qp);

// Directory holding the shipped fixtures; GRASCAT_DATA overrides the
// compiled-in default.
std::string data_dir();
Json load_json_file(const std::string& path);
Json load_fixture(const std::string& name);  // name without ".json"

// Named seeds: "gr<k>_<n>" builds the Grassmannian initial seed.
Seed named_seed(const std::string& name);

}  // namespace grascat

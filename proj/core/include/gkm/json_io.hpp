#pragma once

#include "gkm/cartan.hpp"
#include "gkm/iota.hpp"
#include "gkm/monster.hpp"
#include "gkm/path_crystal.hpp"

#include <optional>
#include <string>

namespace gkm {

struct LoadedModel {
    CartanDatum datum;
    IotaSequence iota;
    std::optional<MonsterConfig> monster;  // present when the datum is the monster family
};

// Datum descriptor, one of
//   {"indices":[{"id":1,"class":"imaginary"},...],
//    "matrix":[[...],...], "symmetrizers":[...]}          (symmetrizers optional)
//   {"family":"monster", "charges":"<path>"|{"1":2,...}, "max_level":2}
// Iota descriptor, one of
//   {"prefix":[...], "period":[...]}
//   {"monster":true}                                       (reuses the datum's charges)
// Ids are integers or strings like "2_1".
LoadedModel load_model(const std::string& datum_json_text, const std::string& iota_json_text);

}  // namespace gkm

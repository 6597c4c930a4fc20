#pragma once

#include "gkm/membership.hpp"
#include "gkm/monster.hpp"
#include "gkm/path_crystal.hpp"

namespace gkm {

// Ready-made data and sequences used throughout tests and the CLI.

// Indices {1 imaginary, 2 real}, matrix rows (-a -b / -c 2), sequence
// 1,2,1,2,...
PathCrystal rank2_crystal(const Rank2Params& p);

// Indices {1,2 imaginary, 3 real}, matrix rows (-a -b -c / -d -e -f /
// -g -h 2), sequence 1,2,3,1,2,3,...
PathCrystal rank3_crystal(const Rank3Params& p);

// Two imaginary indices with diagonal entries a11, a22 and symmetric
// off-diagonal entry a12, on the sequence 1,2,1,2,...
PathCrystal two_imaginary_crystal(const Int& a11, const Int& a22, const Int& a12);

MonsterConfig toy_monster_config();   // charges (2, 1), max_level 2
MonsterConfig real_monster_config();  // embedded charges, max_level 2

}  // namespace gkm

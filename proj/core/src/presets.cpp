#include "gkm/presets.hpp"

namespace gkm {

PathCrystal rank2_crystal(const Rank2Params& p) {
    const IndexId one = IndexId::plain(1);
    const IndexId two = IndexId::plain(2);
    CartanDatum d = CartanDatum::from_matrix({one, two},
                                             {IndexClass::imaginary, IndexClass::real},
                                             {{-p.a, -p.b}, {-p.c, 2}});
    IotaSequence iota = IotaSequence::periodic(d, {}, {one, two});
    return PathCrystal(std::move(d), std::move(iota));
}

PathCrystal rank3_crystal(const Rank3Params& p) {
    const IndexId one = IndexId::plain(1);
    const IndexId two = IndexId::plain(2);
    const IndexId three = IndexId::plain(3);
    CartanDatum d = CartanDatum::from_matrix(
        {one, two, three},
        {IndexClass::imaginary, IndexClass::imaginary, IndexClass::real},
        {{-p.a, -p.b, -p.c}, {-p.d, -p.e, -p.f}, {-p.g, -p.h, 2}});
    IotaSequence iota = IotaSequence::periodic(d, {}, {one, two, three});
    return PathCrystal(std::move(d), std::move(iota));
}

PathCrystal two_imaginary_crystal(const Int& a11, const Int& a22, const Int& a12) {
    const IndexId one = IndexId::plain(1);
    const IndexId two = IndexId::plain(2);
    CartanDatum d = CartanDatum::from_matrix({one, two},
                                             {IndexClass::imaginary, IndexClass::imaginary},
                                             {{a11, a12}, {a12, a22}});
    IotaSequence iota = IotaSequence::periodic(d, {}, {one, two});
    return PathCrystal(std::move(d), std::move(iota));
}

MonsterConfig toy_monster_config() { return {ChargeTable::toy(), 2}; }

MonsterConfig real_monster_config() { return {ChargeTable::embedded_defaults(), 2}; }

}  // namespace gkm

#pragma once

#include "gkm/bigint.hpp"
#include "gkm/path_crystal.hpp"
#include "gkm/path_vector.hpp"
#include "gkm/polyhedral.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace gkm {

enum class Verdict { in, out, unknown };

struct MemberResult {
    Verdict verdict;
    std::string reason;  // empty for "in"; names the violated clause for "out"

    bool is_in() const { return verdict == Verdict::in; }
};

// Membership test for the image of the embedding, driven by generated
// form sets. The main closure is generated once per instance; the
// excluded closures needed by the real-pivot clause are generated lazily
// and memoized per (pivot, target) pair. Verdicts are window-relative and
// three-valued: a generation cap can only ever produce "unknown", never a
// silent "in".
class GammaMembership {
public:
    GammaMembership(PathCrystal z, ThetaOptions opts);

    const PathCrystal& crystal() const { return z_; }
    const ThetaSet& theta() const { return theta_; }
    const PositivityReport& positivity() const { return positivity_; }

    MemberResult check(const PathVector& x) const;

private:
    const ThetaSet& theta_excluding(const Int& pivot, const Int& target) const;

    PathCrystal z_;
    ThetaOptions opts_;
    ThetaSet theta_;
    PositivityReport positivity_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Int, Int>, std::shared_ptr<const ThetaSet>> excluded_;
};

// One-shot convenience wrapper around GammaMembership.
MemberResult gamma_member_general(const PathCrystal& z, const PathVector& x,
                                  const ThetaOptions& opts);

// Specialization for data whose indices are all imaginary: only the
// predecessor-gap condition remains. Throws std::invalid_argument if the
// datum has a real index.
bool gamma_member_all_imaginary(const PathCrystal& z, const PathVector& x);

// Specialization for data with exactly one real index: the form condition
// collapses to S_j x_j >= 0 at real positions, and the pivot clause to
// S_p x_p > 0. Throws std::invalid_argument otherwise.
bool gamma_member_single_real(const PathCrystal& z, const PathVector& x);

// Evaluates S_j x_j at x for position j, as the closed form
// -sum_{j<t<j+} a(i_j, i_t) x_t - x_{j+} when i_j is real.
Int s_j_value(const PathCrystal& z, const PathVector& x, const Int& j);

struct Rank2Params {
    Int a, b, c;  // a_11 = -a (imaginary), a_12 = -b, a_21 = -c, a_22 = 2
};

struct Rank3Params {
    Int a, b, c, d, e, f, g, h;  // rows (-a -b -c / -d -e -f / -g -h 2), indices 1,2 imaginary
};

// Closed-form membership for the rank-2 family on the alternating
// sequence 1,2,1,2,...: position 2k carries the real index, so for k >= 1
//   (i)  c x_{2k+1} - x_{2k+2} >= 0
//   (ii) x_{2k+1} != 0 forces b x_{2k} > 0 and c x_{2k+1} - x_{2k+2} > 0.
// When b and c vanish this collapses to "x_k = 0 for k >= 3".
bool rank2_member(const PathVector& x, const Rank2Params& p);

// Closed-form membership for the rank-3 family on the period 1,2,3: for
// each k >= 1
//   (i)   g x_{3k+1} + h x_{3k+2} - x_{3k+3} >= 0
//   (iia) x_{3k+1} > 0 forces b x_{3k-1} + c x_{3k} > 0, and strictness
//         of (i) at k when b x_{3k-1} = 0
//   (iib) x_{3k+2} > 0 forces f x_{3k} + d x_{3k+1} > 0, and strictness
//         of (i) at k when d x_{3k+1} = 0.
bool rank3_member(const PathVector& x, const Rank3Params& p);

}  // namespace gkm

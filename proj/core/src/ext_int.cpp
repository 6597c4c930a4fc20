#include "gkm/ext_int.hpp"

#include <stdexcept>

namespace gkm {

const Int& ExtInt::value() const {
    if (!finite_)
        throw std::logic_error("ext_int: value() on -inf");
    return v_;
}

}  // namespace gkm

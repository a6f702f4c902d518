#pragma once

#include "fht/root_system.hpp"

namespace fht::test {

inline RootSystem rs(const std::string& name)
{
    return RootSystem::build(LieType::parse(name));
}

inline Weight wt(IntVec c) { return Weight(std::move(c)); }
inline CorootElem cr(IntVec c) { return CorootElem(std::move(c)); }

} // namespace fht::test

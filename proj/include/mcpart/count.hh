#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mcpart
{
    /// Partition counts and bounds are exact at any size.
    using BigCount = boost::multiprecision::cpp_int;
}
